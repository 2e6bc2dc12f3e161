"""Exact rank and row-space membership over Q and GF(p)."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .rings import ModP, Ring, parse_ring


def parse_field(field: "str | Ring") -> Ring:
    ring = parse_ring(field)
    if not ring.is_field:
        raise ValueError("a field is required: Q or GF(p)")
    return ring


def _as_int(x, p: int | None) -> int:
    if isinstance(x, ModP):
        return x.value
    if isinstance(x, Fraction):
        if p is None:
            raise TypeError("rational entries need clearing first")
        return x.numerator * pow(x.denominator, -1, p) % p
    return int(x)


def _integer_rows(matrix: Sequence[Sequence]) -> list[list[int]]:
    """Scale each rational row by its common denominator; row rank is unchanged."""
    rows = []
    for row in matrix:
        row = [Fraction(x) if not isinstance(x, int) else x for x in row]
        d = lcm(*(x.denominator for x in row if isinstance(x, Fraction))) if any(
            isinstance(x, Fraction) for x in row) else 1
        rows.append([int(x * d) for x in row])
    return rows


def bareiss_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination.

    Pivot: first column with a nonzero entry at or below the current row,
    taking the smallest such row index.  All divisions are exact.
    """
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank, prev = 0, 1
    for c in range(ncols):
        piv = next((i for i in range(rank, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        top = m[rank]
        p = top[c]
        for i in range(rank + 1, nrows):
            row = m[i]
            a = row[c]
            for j in range(c + 1, ncols):
                row[j] = (p * row[j] - a * top[j]) // prev
            row[c] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def modular_rank(rows: list[list[int]], p: int) -> int:
    m = [[x % p for x in r] for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        top = m[rank]
        inv = pow(top[c], -1, p)
        for j in range(c, ncols):
            top[j] = top[j] * inv % p
        for i in range(rank + 1, nrows):
            a = m[i][c]
            if a:
                row = m[i]
                for j in range(c, ncols):
                    row[j] = (row[j] - a * top[j]) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def exact_rank(matrix: Sequence[Sequence], field: "str | Ring" = "Q") -> int:
    """Row rank of a matrix of exact scalars over Q or GF(p)."""
    field = parse_field(field)
    if field.kind == "Q":
        return bareiss_rank(_integer_rows(matrix))
    return modular_rank([[_as_int(x, field.p) for x in row] for row in matrix], field.p)


class RowEchelon:
    """Incrementally maintained echelon basis of a row space.

    Over GF(p) pivot rows are normalised to a leading 1; over Q rows are kept
    as primitive integer vectors and reduced by cross-multiplication.
    """

    def __init__(self, field: "str | Ring", ncols: int):
        self.field = parse_field(field)
        self.ncols = ncols
        self.p = self.field.p
        self.pivots: dict[int, list[int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def full(self) -> bool:
        return self.rank == self.ncols

    def _coerce(self, vec: Sequence) -> list[int]:
        if len(vec) != self.ncols:
            raise ValueError("vector length does not match the ambient dimension")
        if self.p is None:
            return _integer_rows([vec])[0]
        return [_as_int(x, self.p) % self.p for x in vec]

    def _reduce(self, v: list[int]) -> list[int]:
        p = self.p
        for c in sorted(self.pivots):
            a = v[c]
            if not a:
                continue
            row = self.pivots[c]
            if p is None:
                b = row[c]
                v = [b * x - a * y for x, y in zip(v, row)]
                g = 0
                for x in v:
                    g = gcd(g, x)
                if g > 1:
                    v = [x // g for x in v]
            else:
                v = [(x - a * y) % p for x, y in zip(v, row)]
        return v

    def add(self, vec: Sequence) -> bool:
        """Insert a row; return True when the rank grew."""
        if self.full:
            return False
        v = self._reduce(self._coerce(vec))
        lead = next((c for c, x in enumerate(v) if x), None)
        if lead is None:
            return False
        if self.p is None:
            if v[lead] < 0:
                v = [-x for x in v]
        else:
            inv = pow(v[lead], -1, self.p)
            v = [x * inv % self.p for x in v]
        self.pivots[lead] = v
        return True

    def contains(self, vec: Sequence) -> bool:
        return not any(self._reduce(self._coerce(vec)))

    def rows(self) -> list[list[int]]:
        return [self.pivots[c] for c in sorted(self.pivots)]
