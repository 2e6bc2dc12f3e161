"""Self-check suites run by ``gschur verify``."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .algebra import (SchurAlgebra, bruteforce_products, formula_products, mul_coeffs,
                      rescale_factor)
from .filtration import dim_C
from .monoid import Family
from .rings import GF, QQ, ZZ
from .shapes import is_partition


@dataclass
class SuiteResult:
    suite: str
    r: int
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, **info):
        if len(self.failures) < 20:
            self.failures.append(info)

    def to_json(self) -> dict:
        return {"suite": self.suite, "r": self.r, "checked": self.checked,
                "failures": self.failures, "ok": self.ok}


def _pairs(alg: SchurAlgebra):
    for lam, nu, mu in product(alg.compositions, repeat=3):
        for k1 in alg.basis(lam, nu):
            for k2 in alg.basis(nu, mu):
                yield k1, k2


def suite_oracle(r: int, families=tuple(Family)) -> SuiteResult:
    """Closed formula against counting factorizations, every product, n = r."""
    res = SuiteResult("oracle", r)
    for fam in families:
        alg = SchurAlgebra(fam, r, r)
        for k1, k2 in _pairs(alg):
            brute = bruteforce_products(k1, k2)
            formula = formula_products(k1, k2)
            for rep in set(brute) | set(formula):
                res.checked += 1
                if Fraction(brute.get(rep, 0)) != formula.get(rep, Fraction(0)):
                    res.fail(family=fam.value, D1=k1.to_json(), D2=k2.to_json(), rep=list(rep),
                             brute=brute.get(rep, 0), formula=str(formula.get(rep, 0)))
    return res


def suite_rescaling(r: int, families=tuple(Family)) -> SuiteResult:
    res = SuiteResult("rescaling", r)
    for fam in families:
        alg = SchurAlgebra(fam, r, r)
        for k1, k2 in _pairs(alg):
            brute = bruteforce_products(k1, k2)
            t = alg.table(k1.lam, k2.mu)
            for side in "LR":
                c = mul_coeffs(side, k1, k2)
                for rep in set(brute) | set(c):
                    res.checked += 1
                    lhs = brute.get(rep, 0) * rescale_factor(side, t.key(rep))
                    rhs = c.get(rep, 0) * rescale_factor(side, k1) * rescale_factor(side, k2)
                    if lhs != rhs:
                        res.fail(family=fam.value, side=side, D1=k1.to_json(),
                                 D2=k2.to_json(), rep=list(rep))
    return res


def suite_integrality(r: int, families=tuple(Family)) -> SuiteResult:
    """Every structure constant is an exact integer (InvariantViolation otherwise)."""
    res = SuiteResult("integrality", r)
    for fam in families:
        alg = SchurAlgebra(fam, r, r)
        for k1, k2 in _pairs(alg):
            for side in "LR":
                for c in mul_coeffs(side, k1, k2).values():
                    res.checked += 1
                    if not isinstance(c, int) or c < 0:
                        res.fail(family=fam.value, side=side, D1=k1.to_json(), D2=k2.to_json())
    return res


def suite_associativity(r: int, families=tuple(Family), rings=None) -> SuiteResult:
    res = SuiteResult("associativity", r)
    rings = rings or (ZZ, GF(2), GF(3))
    for fam in families:
        for side in "LR":
            for ring in rings:
                alg = SchurAlgebra(fam, r, r, side, ring)
                basis = [alg.basis_element(k) for k in alg.basis()]
                by_lam: dict = {}
                for x in basis:
                    (k,) = x.terms
                    by_lam.setdefault(k.lam, []).append(x)
                for x in basis:
                    (kx,) = x.terms
                    for y in by_lam[kx.mu]:
                        (ky,) = y.terms
                        xy = x * y
                        for z in by_lam[ky.mu]:
                            res.checked += 1
                            if xy * z != x * (y * z):
                                res.fail(family=fam.value, side=side, ring=ring.name)
    return res


def suite_idempotents(r: int, families=tuple(Family)) -> SuiteResult:
    res = SuiteResult("idempotents", r)
    for fam in families:
        for side in "LR":
            alg = SchurAlgebra(fam, r, r, side)
            ones = {nu: alg.one(nu) for nu in alg.compositions}
            for a, b in product(alg.compositions, repeat=2):
                res.checked += 1
                want = ones[a] if a == b else alg.zero()
                if ones[a] * ones[b] != want:
                    res.fail(family=fam.value, side=side, check="orthogonal", a=a, b=b)
            u = alg.unit()
            for k in alg.basis():
                res.checked += 1
                x = alg.basis_element(k)
                if u * x != x or x * u != x:
                    res.fail(family=fam.value, side=side, check="unit", key=k.to_json())
    return res


def suite_dims(r: int, families=tuple(Family)) -> SuiteResult:
    """Over Q the top level has dimension |S_r| and every other level vanishes."""
    res = SuiteResult("dims", r)
    for fam in families:
        for side in "LR":
            alg = SchurAlgebra(fam, r, r, side, QQ)
            for lam in alg.compositions:
                if not is_partition(lam):
                    continue
                res.checked += 1
                want = fam.order(r) if all(x == 1 for x in lam[:r]) else 0
                got = dim_C(alg, lam)
                if got != want:
                    res.fail(family=fam.value, side=side, lam=list(lam), want=want, got=got)
    return res


SUITES = {
    "oracle": suite_oracle,
    "integrality": suite_integrality,
    "rescaling": suite_rescaling,
    "associativity": suite_associativity,
    "idempotents": suite_idempotents,
    "dims": suite_dims,
}


def run_suite(name: str, r: int, families=tuple(Family)) -> SuiteResult:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; expected one of {sorted(SUITES)}") from None
    return fn(r, tuple(Family.parse(f) for f in families))
