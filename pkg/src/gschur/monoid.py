"""Transformation monoids inside the partial transformation monoid.

An element of the partial transformation monoid on ``{0, 1, ..., r}`` (maps
fixing 0) is stored as the tuple of its values ``(a(1), ..., a(r))``; the value
0 plays the role of "undefined".  The symmetric group, the full transformation
monoid and the rook monoid are the submonoids selected by :class:`Family`.
"""

from __future__ import annotations

from contextlib import contextmanager
from enum import Enum
from functools import lru_cache
from itertools import product
from math import comb, factorial

from .errors import BoundExceededError

MapElement = tuple[int, ...]

DEFAULT_ENUMERATION_BOUND = 6
_UNSAFE = False


class Family(str, Enum):
    SYM = "sym"
    FULL = "full"
    ROOK = "rook"
    PARTIAL = "partial"

    @classmethod
    def parse(cls, name: "str | Family") -> "Family":
        if isinstance(name, Family):
            return name
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown monoid family {name!r}; expected one of "
                             f"{[f.value for f in cls]}") from None

    def contains(self, a: MapElement) -> bool:
        return family_contains(self, a)

    def order(self, r: int) -> int:
        """Closed-form size of the family in degree ``r``."""
        if self is Family.SYM:
            return factorial(r)
        if self is Family.FULL:
            return r ** r
        if self is Family.ROOK:
            return sum(comb(r, k) ** 2 * factorial(k) for k in range(r + 1))
        return (r + 1) ** r


# desk-scale defaults; the partial monoid grows fastest
FAMILY_BOUNDS = {Family.SYM: 6, Family.FULL: 5, Family.ROOK: 5, Family.PARTIAL: 4}


def identity(r: int) -> MapElement:
    return tuple(range(1, r + 1))


def zero_map(r: int) -> MapElement:
    return (0,) * r


def validate(a: MapElement, r: int | None = None) -> MapElement:
    a = tuple(int(x) for x in a)
    deg = len(a)
    if deg < 1:
        raise ValueError("map elements must have degree >= 1")
    if r is not None and deg != r:
        raise ValueError(f"expected degree {r}, got {deg}")
    if any(x < 0 or x > deg for x in a):
        raise ValueError(f"values of {a} must lie in 0..{deg}")
    return a


def compose(a: MapElement, b: MapElement) -> MapElement:
    """Return ``a o b`` (apply ``b`` first), so that
    ``to_matrix(compose(a, b)) == to_matrix(a) @ to_matrix(b)``."""
    if len(a) != len(b):
        raise ValueError(f"degree mismatch: {len(a)} != {len(b)}")
    padded = (0,) + a
    return tuple(padded[x] for x in b)


def inverse_permutation(a: MapElement) -> MapElement:
    """Inverse of a permutation; raises ValueError for non-invertible maps."""
    if sorted(a) != list(range(1, len(a) + 1)):
        raise ValueError(f"{a} is not a permutation")
    inv = [0] * len(a)
    for j, x in enumerate(a, start=1):
        inv[x - 1] = j
    return tuple(inv)


def to_matrix(a: MapElement) -> list[list[int]]:
    """The (r+1)x(r+1) 0/1 matrix with entry (i, j) = 1 iff i = a(j).

    Rows and columns are indexed 0..r; column 0 carries its 1 in row 0.
    """
    r = len(a)
    m = [[0] * (r + 1) for _ in range(r + 1)]
    m[0][0] = 1
    for j, i in enumerate(a, start=1):
        m[i][j] = 1
    return m


def family_contains(f: Family, a: MapElement) -> bool:
    f = Family.parse(f)
    r = len(a)
    if f is Family.PARTIAL:
        return all(0 <= x <= r for x in a)
    if f is Family.FULL:
        return all(1 <= x <= r for x in a)
    nonzero = [x for x in a if x != 0]
    if f is Family.ROOK:
        return len(nonzero) == len(set(nonzero))
    return sorted(a) == list(range(1, r + 1))


def default_bound(f: "Family | str | None" = None) -> int:
    if f is None:
        return DEFAULT_ENUMERATION_BOUND
    return FAMILY_BOUNDS[Family.parse(f)]


@contextmanager
def unsafe_bounds():
    """Disable the default degree bounds inside the block."""
    global _UNSAFE
    prev, _UNSAFE = _UNSAFE, True
    try:
        yield
    finally:
        _UNSAFE = prev


def check_bound(r: int, bound: int | None, family: "Family | str | None" = None) -> None:
    if r < 1:
        raise ValueError("degree r must be >= 1")
    if _UNSAFE:
        return
    limit = default_bound(family) if bound is None else bound
    if r > limit:
        raise BoundExceededError(f"degree {r} exceeds enumeration bound {limit}"
                                 " (pass --unsafe-bounds to override)")


def enumerate_family(f: Family | str, r: int, bound: int | None = None) -> list[MapElement]:
    """All elements of the family in degree ``r``, sorted lexicographically."""
    check_bound(r, bound, f)
    return list(_enumerate(Family.parse(f), r))


@lru_cache(maxsize=None)
def _enumerate(f: Family, r: int) -> tuple[MapElement, ...]:
    # product() over a sorted range already yields lexicographic order
    lo = 1 if f in (Family.SYM, Family.FULL) else 0
    return tuple(a for a in product(range(lo, r + 1), repeat=r) if family_contains(f, a))
