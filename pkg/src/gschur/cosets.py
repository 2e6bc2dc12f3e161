"""Double cosets of Young subgroups acting on a transformation monoid.

Naming follows the usual convention for these algebras, which reads backwards
at first sight: ``gl_subgroup(lam, a, mu)`` lives inside the Young subgroup of
``mu`` (it stabilises the *left* coset ``G_lam a`` under right multiplication),
while ``gr_subgroup(lam, a, mu)`` lives inside the Young subgroup of ``lam``
(it stabilises the *right* coset ``a G_mu``).  ``n_L`` and ``n_R`` are their
orders.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import lru_cache

from .monoid import Family, MapElement, compose, enumerate_family
from .shapes import (Composition, block_index, blocks, validate_composition,
                     young_elements, young_generators, young_order)


@dataclass(frozen=True, order=True)
class DoubleCosetKey:
    lam: Composition
    mu: Composition
    rep: MapElement
    family: Family = field(default=Family.PARTIAL, compare=False)

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "mu": list(self.mu), "rep": list(self.rep)}


@dataclass(frozen=True)
class CosetCounts:
    nD: int
    nL: int
    nR: int
    size: int
    left_coset_size: int
    right_coset_size: int

    def to_json(self) -> dict:
        return {"nD": self.nD, "nL": self.nL, "nR": self.nR, "size": self.size}


def _swap_generators(lam: Composition) -> list[int]:
    return [i for b in blocks(lam) for i in b[:-1]]


def _check_degrees(lam, a, mu):
    if sum(lam) != len(a) or sum(mu) != len(a):
        raise ValueError(f"shapes {lam}, {mu} do not match degree {len(a)}")


def double_coset_elements(lam: Composition, a: MapElement, mu: Composition) -> frozenset:
    """BFS closure of {a} under left moves from G_lam and right moves from G_mu."""
    lam, mu, a = tuple(lam), tuple(mu), tuple(a)
    _check_degrees(lam, a, mu)
    left = _swap_generators(lam)
    right = _swap_generators(mu)
    seen = {a}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        for i in left:
            # s_i o x: exchange the values i and i+1
            y = tuple(i + 1 if v == i else i if v == i + 1 else v for v in x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
        for j in right:
            # x o s_j: exchange positions j and j+1
            y = x[:j - 1] + (x[j], x[j - 1]) + x[j + 1:]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def canonical_rep(lam: Composition, a: MapElement, mu: Composition) -> MapElement:
    return min(double_coset_elements(lam, a, mu))


def left_coset(lam: Composition, a: MapElement) -> frozenset:
    return frozenset(compose(s, a) for s in young_elements(lam))


def right_coset(a: MapElement, mu: Composition) -> frozenset:
    return frozenset(compose(a, p) for p in young_elements(mu))


def stabilizer_pair_order(lam: Composition, a: MapElement, mu: Composition) -> int:
    """#{(s, p) in G_lam x G_mu : s a p^-1 = a}, i.e. s a = a p."""
    a = tuple(a)
    right = Counter(compose(a, p) for p in young_elements(mu))
    return sum(right[compose(s, a)] for s in young_elements(lam))


def gr_subgroup(lam: Composition, a: MapElement, mu: Composition) -> frozenset:
    """{s in G_lam : s a = a p for some p in G_mu}."""
    rc = right_coset(a, mu)
    return frozenset(s for s in young_elements(lam) if compose(s, a) in rc)


def gl_subgroup(lam: Composition, a: MapElement, mu: Composition) -> frozenset:
    """{p in G_mu : a p = s a for some s in G_lam}."""
    lc = left_coset(lam, a)
    return frozenset(p for p in young_elements(mu) if compose(a, p) in lc)


def n_R(lam: Composition, a: MapElement, mu: Composition) -> int:
    return len(gr_subgroup(lam, a, mu))


def n_L(lam: Composition, a: MapElement, mu: Composition) -> int:
    return len(gl_subgroup(lam, a, mu))


def coset_counts(lam: Composition, a: MapElement, mu: Composition) -> CosetCounts:
    a = tuple(a)
    lc, rc = left_coset(lam, a), right_coset(a, mu)
    nR = sum(1 for s in young_elements(lam) if compose(s, a) in rc)
    nL = sum(1 for p in young_elements(mu) if compose(a, p) in lc)
    nD = stabilizer_pair_order(lam, a, mu)
    size = young_order(lam) * young_order(mu) // nD
    return CosetCounts(nD=nD, nL=nL, nR=nR, size=size,
                       left_coset_size=len(lc), right_coset_size=len(rc))


class CosetTable:
    """The double cosets of one family for one pair of shapes."""

    def __init__(self, family: Family, lam: Composition, mu: Composition, bound: int | None = None):
        self.family = Family.parse(family)
        self.lam, self.mu = tuple(lam), tuple(mu)
        if sum(self.lam) != sum(self.mu):
            raise ValueError("shapes must have the same size")
        self.r = sum(self.lam)
        self.rep_of: dict[MapElement, MapElement] = {}
        self.orbits: dict[MapElement, tuple[MapElement, ...]] = {}
        for a in enumerate_family(self.family, self.r, bound):
            if a in self.rep_of:
                continue
            orbit = sorted(double_coset_elements(self.lam, a, self.mu))
            rep = orbit[0]
            self.orbits[rep] = tuple(orbit)
            for x in orbit:
                self.rep_of[x] = rep
        self.reps: list[MapElement] = sorted(self.orbits)
        self._counts: dict[MapElement, CosetCounts] = {}

    def __len__(self) -> int:
        return len(self.reps)

    def key(self, rep: MapElement) -> DoubleCosetKey:
        return DoubleCosetKey(self.lam, self.mu, rep, self.family)

    def keys(self) -> list[DoubleCosetKey]:
        return [self.key(rep) for rep in self.reps]

    def counts(self, rep: MapElement) -> CosetCounts:
        c = self._counts.get(rep)
        if c is None:
            c = self._counts[rep] = coset_counts(self.lam, rep, self.mu)
        return c


@lru_cache(maxsize=None)
def coset_table(family: Family, lam: Composition, mu: Composition) -> CosetTable:
    return CosetTable(family, lam, mu)


def enumerate_double_cosets(family: Family | str, lam, mu) -> list[DoubleCosetKey]:
    lam = validate_composition(lam)
    mu = validate_composition(mu)
    return coset_table(Family.parse(family), lam, mu).keys()


def middle_counts(family: Family, lam: Composition, nu: Composition, mu: Composition,
                  a: MapElement, b: MapElement) -> Counter:
    """rep(D) -> #{rho in G_nu : a rho b in D} over the double cosets D of (lam, mu)."""
    table = coset_table(family, lam, mu)
    out: Counter = Counter()
    for rho in young_elements(nu):
        out[table.rep_of[compose(compose(a, rho), b)]] += 1
    return out


def big_N(lam: Composition, a: MapElement, nu: Composition, b: MapElement,
          mu: Composition, D: DoubleCosetKey) -> int:
    """#{rho in G_nu : a rho b in D}; the family is taken from ``D``."""
    if (tuple(D.lam), tuple(D.mu)) != (tuple(lam), tuple(mu)):
        raise ValueError("D must be a (lam, mu) double coset")
    members = double_coset_elements(lam, D.rep, mu)
    return sum(1 for rho in young_elements(nu) if compose(compose(a, rho), b) in members)


def row_profile(a: MapElement, i: int, lam: Composition) -> tuple[int, ...]:
    """Per block k: #(a^-1(i) meet b_k)."""
    idx = block_index(lam)
    prof = [0] * len(lam)
    for j, v in enumerate(a):
        if v == i:
            prof[idx[j]] += 1
    return tuple(prof)


def rows_lambda_equivalent(a: MapElement, i: int, j: int, lam: Composition) -> bool:
    r = len(a)
    if not (0 <= i <= r and 0 <= j <= r):
        raise ValueError("row indices must lie in 0..r")
    return i == j or row_profile(a, i, lam) == row_profile(a, j, lam)
