"""Generalized Schur algebras: the Z-forms A_L, A_R and their base changes.

Basis elements f(lam, D, mu) are indexed by :class:`DoubleCosetKey`.  The
structure constants are computed once over the integers from the
multiplication rule

    f(lam, a, nu) *_X f(nu, b, mu) = sum_D  n_X(D) N(D_a, D_b, D) / (n_X(D_a) n_X(D_b))  f(lam, D, mu)

and only then mapped into the coefficient ring.  Two independent routes to
the complex structure constants (brute-force pair counting and the
stabilizer formula) are provided as oracles.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .cosets import CosetTable, DoubleCosetKey, coset_table, middle_counts
from .errors import InvariantViolation
from .monoid import Family, MapElement, check_bound, compose, identity, validate
from .rings import Ring, ZZ, parse_ring
from .shapes import Composition, enumerate_compositions, validate_composition, young_order

SIDES = ("L", "R")


def parse_side(side: str) -> str:
    s = str(side).upper()
    if s not in SIDES:
        raise ValueError(f"side must be 'L' or 'R', not {side!r}")
    return s


def _tables(D1: DoubleCosetKey, D2: DoubleCosetKey, D: DoubleCosetKey | None = None):
    if D1.mu != D2.lam:
        raise ValueError("middle shapes of D1 and D2 differ")
    if D is not None and (D.lam, D.mu) != (D1.lam, D2.mu):
        raise ValueError("D must be a (lam, mu) double coset")
    fam = D1.family
    return (coset_table(fam, D1.lam, D1.mu), coset_table(fam, D2.lam, D2.mu),
            coset_table(fam, D1.lam, D2.mu))


def bruteforce_products(D1: DoubleCosetKey, D2: DoubleCosetKey) -> Counter:
    """rep(D) -> #{(m1, m2) in D1 x D2 : m1 m2 = rep(D)} for every D hit."""
    t1, t2, t = _tables(D1, D2)
    hits = Counter(compose(x, y) for x in t1.orbits[D1.rep] for y in t2.orbits[D2.rep])
    return Counter({d: hits[d] for d in t.reps if hits[d]})


def struct_const_bruteforce(D1: DoubleCosetKey, D2: DoubleCosetKey, D: DoubleCosetKey) -> int:
    _tables(D1, D2, D)
    return bruteforce_products(D1, D2)[D.rep]


def formula_products(D1: DoubleCosetKey, D2: DoubleCosetKey) -> dict[MapElement, Fraction]:
    """rep(D) -> o(G_nu) N(D1, D2, D) n(D) / (n(D1) n(D2)), nonzero entries only."""
    t1, t2, t = _tables(D1, D2)
    N = middle_counts(D1.family, D1.lam, D1.mu, D2.mu, D1.rep, D2.rep)
    den = t1.counts(D1.rep).nD * t2.counts(D2.rep).nD
    order = young_order(D1.mu)
    return {d: Fraction(order * k * t.counts(d).nD, den) for d, k in sorted(N.items())}


def struct_const_formula(D1: DoubleCosetKey, D2: DoubleCosetKey, D: DoubleCosetKey) -> Fraction:
    _tables(D1, D2, D)
    return formula_products(D1, D2).get(D.rep, Fraction(0))


def stabilizer_size(side: str, counts) -> int:
    return counts.nL if side == "L" else counts.nR


def rescale_factor(side: str, D: DoubleCosetKey) -> int:
    """The number of elements of one left G_lam-coset (side L) or one right
    G_mu-coset (side R) inside D.  X(lam, D, mu) / rescale_factor <-> f(lam, D, mu)
    identifies the complex algebra with the base-changed Z-form."""
    side = parse_side(side)
    c = coset_table(D.family, D.lam, D.mu).counts(D.rep)
    return c.left_coset_size if side == "L" else c.right_coset_size


@lru_cache(maxsize=None)
def _coeffs(family: Family, side: str, lam: Composition, nu: Composition, mu: Composition,
            rep1: MapElement, rep2: MapElement) -> tuple[tuple[MapElement, int], ...]:
    t1, t2, t = (coset_table(family, lam, nu), coset_table(family, nu, mu),
                 coset_table(family, lam, mu))
    N = middle_counts(family, lam, nu, mu, rep1, rep2)
    den = stabilizer_size(side, t1.counts(rep1)) * stabilizer_size(side, t2.counts(rep2))
    out = []
    for d in sorted(N):
        num = stabilizer_size(side, t.counts(d)) * N[d]
        q, rem = divmod(num, den)
        if rem:
            raise InvariantViolation(
                "structure constant is not an integer",
                {"family": family.value, "side": side, "lambda": list(lam), "nu": list(nu),
                 "mu": list(mu), "rep1": list(rep1), "rep2": list(rep2), "rep": list(d),
                 "numerator": num, "denominator": den})
        out.append((d, q))
    return tuple(out)


def mul_coeffs(side: str, D1: DoubleCosetKey, D2: DoubleCosetKey) -> dict[MapElement, int]:
    """rep(D) -> integer coefficient of f(lam, D, mu) in f(D1) *_side f(D2)."""
    side = parse_side(side)
    _tables(D1, D2)
    return dict(_coeffs(D1.family, side, D1.lam, D1.mu, D2.mu, D1.rep, D2.rep))


def mul_coeff(side: str, D1: DoubleCosetKey, D2: DoubleCosetKey, D: DoubleCosetKey) -> int:
    _tables(D1, D2, D)
    return mul_coeffs(side, D1, D2).get(D.rep, 0)


class SchurAlgebra:
    """B_L or B_R for one monoid family over a coefficient ring."""

    def __init__(self, family: Family | str, r: int, n: int, side: str = "R",
                 ring: Ring | str = ZZ, bound: int | None = None):
        self.family = Family.parse(family)
        check_bound(r, bound, self.family)
        if n < 1:
            raise ValueError("n must be >= 1")
        self.r, self.n = r, n
        self.side = parse_side(side)
        self.ring = parse_ring(ring)
        self.compositions: list[Composition] = enumerate_compositions(r, n)
        self._bound = bound

    def __repr__(self):
        return (f"SchurAlgebra({self.family.value!r}, r={self.r}, n={self.n}, "
                f"side={self.side!r}, ring={self.ring.name})")

    def signature(self) -> tuple:
        return (self.family, self.r, self.n, self.side, self.ring)

    def over(self, ring: Ring | str = None, side: str = None) -> "SchurAlgebra":
        return SchurAlgebra(self.family, self.r, self.n, side or self.side,
                            ring or self.ring, self._bound)

    def shape(self, lam) -> Composition:
        return validate_composition(lam, self.r, self.n)

    def table(self, lam: Composition, mu: Composition) -> CosetTable:
        return coset_table(self.family, self.shape(lam), self.shape(mu))

    def key(self, lam, a: MapElement, mu) -> DoubleCosetKey:
        lam, mu = self.shape(lam), self.shape(mu)
        a = validate(a, self.r)
        t = self.table(lam, mu)
        if a not in t.rep_of:
            raise ValueError(f"{a} is not in the {self.family.value} monoid")
        return t.key(t.rep_of[a])

    def basis(self, lam=None, mu=None) -> list[DoubleCosetKey]:
        """Basis keys, optionally restricted to one (lam, mu) block."""
        lams = [self.shape(lam)] if lam is not None else self.compositions
        mus = [self.shape(mu)] if mu is not None else self.compositions
        return [k for a in lams for b in mus for k in self.table(a, b).keys()]

    def dimension(self) -> int:
        return sum(len(self.table(a, b)) for a in self.compositions for b in self.compositions)

    # elements

    def element(self, terms: dict | Iterable = ()) -> "AlgebraElement":
        return AlgebraElement(self, terms)

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def basis_element(self, key: DoubleCosetKey) -> "AlgebraElement":
        return AlgebraElement(self, {key: self.ring(1)})

    def f(self, lam, a: MapElement, mu) -> "AlgebraElement":
        return self.basis_element(self.key(lam, a, mu))

    def one(self, nu) -> "AlgebraElement":
        """The idempotent 1_nu = f(nu, 1, nu)."""
        return self.f(nu, identity(self.r), nu)

    idempotent_one = one

    def unit(self) -> "AlgebraElement":
        e = identity(self.r)
        return self.element({self.key(nu, e, nu): self.ring(1) for nu in self.compositions})

    # multiplication

    def basis_product(self, k1: DoubleCosetKey, k2: DoubleCosetKey) -> dict[DoubleCosetKey, int]:
        """Integer structure constants of f(k1) * f(k2); empty if the shapes clash."""
        if k1.mu != k2.lam:
            return {}
        coeffs = _coeffs(self.family, self.side, k1.lam, k1.mu, k2.mu, k1.rep, k2.rep)
        return {DoubleCosetKey(k1.lam, k2.mu, d, self.family): c for d, c in coeffs}

    def mul(self, x: "AlgebraElement", y: "AlgebraElement") -> "AlgebraElement":
        self._check(x)
        self._check(y)
        out: dict[DoubleCosetKey, object] = {}
        ring = self.ring
        for k1, c1 in x.terms.items():
            for k2, c2 in y.terms.items():
                if k1.mu != k2.lam:
                    continue
                c12 = c1 * c2
                for k, c in self.basis_product(k1, k2).items():
                    out[k] = out.get(k, ring(0)) + c12 * ring(c)
        return AlgebraElement(self, out)

    def _check(self, x: "AlgebraElement"):
        if not isinstance(x, AlgebraElement) or x.algebra.signature() != self.signature():
            raise ValueError("incompatible operands")

    # serialization

    def to_json(self, x: "AlgebraElement") -> dict:
        return {
            "family": self.family.value, "r": self.r, "n": self.n,
            "side": self.side, "ring": self.ring.name,
            "terms": [dict(k.to_json(), coeff=str(c)) for k, c in sorted(x.terms.items())],
        }

    def from_json(self, data: dict) -> "AlgebraElement":
        if "side" in data and parse_side(data["side"]) != self.side:
            raise ValueError("side mismatch")
        if "ring" in data and parse_ring(data["ring"]) != self.ring:
            raise ValueError("ring mismatch")
        terms: dict[DoubleCosetKey, object] = {}
        for t in data.get("terms", []):
            k = self.key(t["lambda"], t["rep"], t["mu"])
            terms[k] = terms.get(k, self.ring(0)) + self.ring.parse(str(t.get("coeff", "1")))
        return AlgebraElement(self, terms)


class AlgebraElement:
    """A finite linear combination of basis elements f(lam, D, mu)."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: SchurAlgebra, terms: dict | Iterable = ()):
        self.algebra = algebra
        items = terms.items() if isinstance(terms, dict) else terms
        clean = {}
        for k, c in items:
            c = algebra.ring(c)
            if c:
                clean[k] = c
        self.terms: dict[DoubleCosetKey, object] = clean

    @property
    def side(self) -> str:
        return self.algebra.side

    @property
    def ring(self) -> Ring:
        return self.algebra.ring

    def __iter__(self) -> Iterator[tuple[DoubleCosetKey, object]]:
        return iter(sorted(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, key: DoubleCosetKey):
        return self.terms.get(key, self.ring(0))

    def _combine(self, other, sign: int) -> "AlgebraElement":
        self.algebra._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, self.ring(0)) + c * sign
        return AlgebraElement(self.algebra, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return AlgebraElement(self.algebra, {k: -c for k, c in self.terms.items()})

    def scale(self, s) -> "AlgebraElement":
        s = self.ring(s)
        return AlgebraElement(self.algebra, {k: s * c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return self.algebra.mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra.signature() == other.algebra.signature() and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*f({list(k.lam)}, {list(k.rep)}, {list(k.mu)})" for k, c in self)

    def to_json(self) -> dict:
        return self.algebra.to_json(self)
