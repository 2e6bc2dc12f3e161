"""Block embeddings for p-partitions and the census of irreducible modules.

For a p-partition lam with s_i blocks of size p**i, ``phi_lambda`` embeds a
product of partial transformation monoids (one of degree s_i per block size)
into the partial transformation monoid of degree r by moving whole blocks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Mapping

from .algebra import AlgebraElement, SchurAlgebra, parse_side
from .monoid import Family, MapElement, compose, enumerate_family, identity
from .shapes import (Composition, PDecomposition, is_p_partition, p_decompositions,
                     p_regular_count, p_regular_enumerate, require_prime)


@dataclass(frozen=True)
class LevelData:
    lam: Composition
    p: int
    decomposition: PDecomposition
    offsets: dict = field(compare=False, hash=False)

    @classmethod
    def from_partition(cls, lam: Composition, p: int) -> "LevelData":
        require_prime(p)
        lam = tuple(lam)
        if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
            raise ValueError(f"{lam} must be weakly decreasing")
        if not is_p_partition(lam, p):
            raise ValueError(f"{lam} is not a {p}-partition")
        dec = PDecomposition.from_partition(lam, p)
        offsets, c = {}, 0
        for i in reversed(range(len(dec.s))):
            offsets[i] = c
            c += dec.s[i] * p ** i
        return cls(lam, p, dec, offsets)

    @property
    def r(self) -> int:
        return sum(self.lam)

    def s(self, i: int) -> int:
        return self.decomposition.get(i)

    def support(self) -> list[int]:
        return self.decomposition.support()


def phi_lambda(level: LevelData, components: Mapping[int, MapElement]) -> MapElement:
    """Block map: j = c + (a-1)p^i + b goes to c + (a_i(a)-1)p^i + b, or 0."""
    p = level.p
    out = [0] * level.r
    for i in level.support():
        comp = tuple(components.get(i, identity(level.s(i))))
        if len(comp) != level.s(i):
            raise ValueError(f"component {i} must have degree {level.s(i)}")
        c, q = level.offsets[i], p ** i
        for a in range(1, level.s(i) + 1):
            target = comp[a - 1]
            for b in range(1, q + 1):
                out[c + (a - 1) * q + b - 1] = 0 if target == 0 else c + (target - 1) * q + b
    return tuple(out)


def _image(level: LevelData, factors: Mapping[int, list[MapElement]], family: Family) -> set:
    idx = level.support()
    out = set()
    for combo in product(*(factors[i] for i in idx)):
        a = phi_lambda(level, dict(zip(idx, combo)))
        if family.contains(a):
            out.add(a)
    return out


def s_r_lambda(family: Family | str, level: LevelData) -> set:
    """phi(prod of partial transformation monoids) meet the family."""
    family = Family.parse(family)
    factors = {i: enumerate_family(Family.PARTIAL, level.s(i), bound=level.r)
               for i in level.support()}
    return _image(level, factors, family)


def s_rL_lambda(family: Family | str, level: LevelData) -> set:
    """phi(partial monoid on the size-1 blocks x symmetric groups elsewhere) meet the family."""
    family = Family.parse(family)
    factors = {i: enumerate_family(Family.PARTIAL if i == 0 else Family.SYM,
                                   level.s(i), bound=level.r)
               for i in level.support()}
    return _image(level, factors, family)


def s_prime(family: Family | str, level: LevelData) -> set:
    """The subsemigroup whose algebra is isomorphic to C_R at this level."""
    family = Family.parse(family)
    if family is Family.SYM:
        raise ValueError("s_prime is not defined for the symmetric group; use s_r_lambda")
    if family is Family.FULL:
        m = min(level.support())
        factors = {i: enumerate_family(Family.FULL if i == m else Family.SYM,
                                       level.s(i), bound=level.r)
                   for i in level.support()}
        return _image(level, factors, family)
    return s_rL_lambda(family, level)


def level_monoid(family: Family | str, side: str, level: LevelData) -> set:
    """The monoid whose algebra is isomorphic to C^lam for this family and side."""
    family, side = Family.parse(family), parse_side(side)
    if side == "L":
        return s_rL_lambda(family, level)
    if family is Family.SYM:
        return s_r_lambda(family, level)
    return s_prime(family, level)


def psi_lambda(alg: SchurAlgebra, level: LevelData, a: MapElement) -> AlgebraElement:
    """f(lam, a, lam) for a in S_r^lam (side R) or S_{r,L}^lam (side L)."""
    allowed = s_r_lambda(alg.family, level) if alg.side == "R" else s_rL_lambda(alg.family, level)
    a = tuple(a)
    if a not in allowed:
        raise ValueError(f"{a} is outside the level subsemigroup")
    lam = alg.shape(level.lam)
    return alg.f(lam, a, lam)


# census

@dataclass(frozen=True, order=True)
class Tail:
    """The tensor factor carried by the smallest block size.

    ``slot`` is the block-size exponent it sits at; ``j`` the chosen index
    (for the symmetric group j = s_slot); ``partition`` a p-regular partition
    of j (empty when j = 0).
    """
    slot: int
    j: int
    partition: tuple[int, ...]

    def to_json(self) -> dict:
        return {"slot": self.slot, "j": self.j, "partition": list(self.partition)}


@dataclass(frozen=True, order=True)
class CensusRecord:
    decomposition: PDecomposition
    partitions: tuple[tuple[int, tuple[int, ...]], ...]
    tail: Tail
    index: int | None = None

    def level(self) -> Composition:
        return self.decomposition.partition()

    def to_json(self) -> dict:
        return {
            "decomposition": self.decomposition.to_json(),
            "level": list(self.level()),
            "partitions": {str(i): list(q) for i, q in self.partitions},
            "tail": self.tail.to_json(),
            "index": self.index,
        }


def _tail_slot(family: Family, side: str, dec: PDecomposition) -> tuple[int, int]:
    slot = min(dec.support()) if family is Family.FULL and side == "R" else 0
    return slot, dec.get(slot)


def _tail_choices(family: Family, side: str, dec: PDecomposition, strict: bool):
    p = dec.p
    slot, top = _tail_slot(family, side, dec)
    if family is Family.SYM:
        return slot, [(top, q) for q in p_regular_enumerate(top, p)]
    if family is Family.FULL:
        choices = [(j, q) for j in range(1, top + 1) for q in p_regular_enumerate(j, p)]
        if top == 0 and not strict:
            # absent factor: the trivial monoid has exactly one irreducible
            choices = [(0, ())]
        return slot, choices
    return slot, [(0, ())] + [(j, q) for j in range(1, top + 1) for q in p_regular_enumerate(j, p)]


def _index(family: Family, side: str, dec: PDecomposition, slot: int, j: int) -> int | None:
    if side != "R" or family is Family.SYM:
        return None
    p = dec.p
    return sum(dec.get(i) * p ** i for i in dec.support() if i > slot) + j * p ** slot


def census(family: Family | str, side: str, r: int, p: int, n: int | None = None,
           strict: bool = False) -> list[CensusRecord]:
    """Data lists indexing the irreducible modules of B_side over GF(p).

    ``strict`` reproduces the literal reading in which the full transformation
    monoid, side L, admits no tail choice when s_0 = 0.
    """
    family, side = Family.parse(family), parse_side(side)
    require_prime(p)
    if n is not None and n < r:
        raise ValueError("the census requires n >= r")
    records = []
    for dec in p_decompositions(r, p):
        slot, tails = _tail_choices(family, side, dec, strict)
        others = [i for i in dec.support() if i != slot and i > 0]
        lists = [[(i, q) for q in p_regular_enumerate(dec.get(i), p)] for i in others]
        for combo in product(*lists):
            for j, q in tails:
                records.append(CensusRecord(dec, tuple(combo), Tail(slot, j, tuple(q)),
                                            _index(family, side, dec, slot, j)))
    return sorted(records)


def census_count(family: Family | str, side: str, r: int, p: int, strict: bool = False) -> int:
    """Number of census records, by multiplying counts instead of listing records."""
    family, side = Family.parse(family), parse_side(side)
    require_prime(p)
    total = 0
    for dec in p_decompositions(r, p):
        slot, top = _tail_slot(family, side, dec)
        if family is Family.SYM:
            tails = p_regular_count(top, p)
        else:
            lo = 0 if family in (Family.ROOK, Family.PARTIAL) else 1
            tails = sum(p_regular_count(j, p) for j in range(lo, top + 1))
            if family is Family.FULL and top == 0 and not strict:
                tails = 1
        for i in dec.support():
            if i != slot and i > 0:
                tails *= p_regular_count(dec.get(i), p)
        total += tails
    return total
