"""Compositions, Young subgroups, the level order, and partition counting."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod

from .errors import BoundExceededError
from .monoid import MapElement, compose, identity

Composition = tuple[int, ...]

DEFAULT_SUBGROUP_BOUND = 720


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p ** 0.5) + 1))


def require_prime(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return p


def validate_composition(parts, r: int | None = None, n: int | None = None) -> Composition:
    lam = tuple(int(x) for x in parts)
    if not lam or any(x < 0 for x in lam):
        raise ValueError(f"invalid composition {parts!r}")
    if r is not None and sum(lam) != r:
        raise ValueError(f"composition {lam} does not sum to {r}")
    if n is not None:
        if len(lam) > n:
            if any(lam[n:]):
                raise ValueError(f"composition {lam} has more than {n} nonzero slots")
            lam = lam[:n]
        lam = lam + (0,) * (n - len(lam))
    return lam


def enumerate_compositions(r: int, n: int) -> list[Composition]:
    """All compositions of ``r`` into ``n`` parts, reverse-lexicographic."""
    if r < 0 or n < 1:
        raise ValueError("need r >= 0 and n >= 1")
    return list(_compositions(r, n))


@lru_cache(maxsize=None)
def _compositions(r: int, n: int) -> tuple[Composition, ...]:
    if n == 1:
        return ((r,),)
    out = []
    for first in range(r, -1, -1):
        out.extend((first,) + rest for rest in _compositions(r - first, n - 1))
    return tuple(out)


def blocks(lam: Composition) -> list[range]:
    """The consecutive integer intervals b_i (1-based), empty where a part is 0."""
    out, start = [], 1
    for part in lam:
        out.append(range(start, start + part))
        start += part
    return out


def block_index(lam: Composition) -> tuple[int, ...]:
    """``block_index(lam)[j-1]`` is the index of the block containing ``j``."""
    return tuple(i for i, part in enumerate(lam) for _ in range(part))


def young_generators(lam: Composition) -> list[MapElement]:
    """Adjacent transpositions s_i with i and i+1 in the same block."""
    r = sum(lam)
    gens = []
    for b in blocks(lam):
        for i in b[:-1]:
            s = list(range(1, r + 1))
            s[i - 1], s[i] = i + 1, i
            gens.append(tuple(s))
    return gens


def young_order(lam: Composition) -> int:
    return prod(factorial(x) for x in lam)


def young_elements(lam: Composition, bound: int | None = None) -> list[MapElement]:
    """All of the Young subgroup, as the closure of its generators (sorted)."""
    limit = DEFAULT_SUBGROUP_BOUND if bound is None else bound
    if young_order(lam) > limit:
        raise BoundExceededError(f"Young subgroup of {lam} has order "
                                 f"{young_order(lam)} > {limit}")
    return list(_young_elements(tuple(lam)))


@lru_cache(maxsize=None)
def _young_elements(lam: Composition) -> tuple[MapElement, ...]:
    gens = young_generators(lam)
    e = identity(sum(lam))
    seen = {e}
    queue = deque([e])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = compose(g, s)
            if h not in seen:
                seen.add(h)
                queue.append(h)
    return tuple(sorted(seen))


def plus(lam: Composition) -> Composition:
    """The partition with the same multiset of parts (same length)."""
    return tuple(sorted(lam, reverse=True))


def _key(lam: Composition, width: int) -> Composition:
    p = plus(lam)
    return p + (0,) * (width - len(p))


def shape_cmp(lam: Composition, mu: Composition) -> int:
    """-1, 0, 1 as plus(lam) is below, equivalent to, or above plus(mu)."""
    if sum(lam) != sum(mu):
        raise ValueError("shapes of different size are not comparable")
    w = max(len(lam), len(mu))
    a, b = _key(lam, w), _key(mu, w)
    return (a > b) - (a < b)


def shape_equiv(lam: Composition, mu: Composition) -> bool:
    return shape_cmp(lam, mu) == 0


def shape_lt(lam: Composition, mu: Composition) -> bool:
    return shape_cmp(lam, mu) < 0


def shape_leq(lam: Composition, mu: Composition) -> bool:
    return shape_cmp(lam, mu) <= 0


def is_partition(lam: Composition) -> bool:
    return all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def block_multiplicity(lam: Composition, k: int) -> int:
    return sum(1 for x in lam if x == k)


def is_power_of(x: int, p: int) -> bool:
    while x % p == 0 and x > 1:
        x //= p
    return x == 1


def is_p_partition(lam: Composition, p: int) -> bool:
    """Every nonzero part is a power of ``p`` (1 = p**0 included)."""
    require_prime(p)
    return all(x == 0 or is_power_of(x, p) for x in lam)


@dataclass(frozen=True, order=True)
class PDecomposition:
    """r = sum(s[i] * p**i); ``s`` carries no trailing zeros."""
    p: int
    s: tuple[int, ...]

    @property
    def r(self) -> int:
        return sum(si * self.p ** i for i, si in enumerate(self.s))

    def get(self, i: int) -> int:
        return self.s[i] if i < len(self.s) else 0

    def support(self) -> list[int]:
        return [i for i, si in enumerate(self.s) if si > 0]

    def partition(self) -> Composition:
        """The p-partition with s_i parts equal to p**i, largest first."""
        return tuple(self.p ** i for i in reversed(range(len(self.s))) for _ in range(self.s[i]))

    def to_json(self) -> dict:
        return {"p": self.p, "s": list(self.s)}

    @classmethod
    def from_partition(cls, lam: Composition, p: int) -> "PDecomposition":
        if not is_p_partition(lam, p):
            raise ValueError(f"{lam} is not a {p}-partition")
        top = max((x for x in lam if x), default=1)
        width = 1
        while p ** width <= top:
            width += 1
        s = tuple(block_multiplicity(lam, p ** i) for i in range(width))
        return cls(p, _trim(s))


def _trim(s: tuple[int, ...]) -> tuple[int, ...]:
    s = list(s)
    while s and s[-1] == 0:
        s.pop()
    return tuple(s)


def p_decompositions(r: int, p: int) -> list[PDecomposition]:
    """All ways to write r = sum s_i p**i with s_i >= 0, s_0 descending first."""
    require_prime(p)
    if r < 1:
        raise ValueError("r must be >= 1")
    powers = []
    q = 1
    while q <= r:
        powers.append(q)
        q *= p

    def rec(rem: int, i: int):
        if i < 0:
            if rem == 0:
                yield ()
            return
        for si in range(rem // powers[i], -1, -1):
            for rest in rec(rem - si * powers[i], i - 1):
                yield rest + (si,)

    found = [PDecomposition(p, _trim(s)) for s in rec(r, len(powers) - 1)]
    return sorted(found, key=lambda d: tuple(-x for x in d.s + (0,) * (len(powers) - len(d.s))))


def partitions(s: int, max_part: int | None = None) -> list[Composition]:
    """Partitions of ``s`` as weakly decreasing tuples, in reverse-lex order."""
    if s == 0:
        return [()]
    top = s if max_part is None else min(s, max_part)
    out = []
    for first in range(top, 0, -1):
        out.extend((first,) + rest for rest in partitions(s - first, first))
    return out


def is_p_regular(part: Composition, p: int) -> bool:
    return all(part.count(x) < p for x in set(part))


def p_regular_enumerate(s: int, p: int) -> list[Composition]:
    """Partitions of ``s`` in which no part occurs ``p`` or more times."""
    require_prime(p)
    return list(_preg_enum(s, s, p))


@lru_cache(maxsize=None)
def _preg_enum(s: int, max_part: int, p: int) -> tuple[Composition, ...]:
    if s == 0:
        return ((),)
    out = []
    for part in range(min(s, max_part), 0, -1):
        for mult in range(min(p - 1, s // part), 0, -1):
            head = (part,) * mult
            out.extend(head + rest for rest in _preg_enum(s - mult * part, part - 1, p))
    return tuple(out)


def p_regular_count(s: int, p: int) -> int:
    require_prime(p)
    if s < 0:
        raise ValueError("s must be >= 0")
    return _preg_count(s, s, p)


@lru_cache(maxsize=None)
def _preg_count(s: int, max_part: int, p: int) -> int:
    # choose the multiplicity (< p) of the largest allowed part, then recurse
    if s == 0:
        return 1
    if max_part == 0:
        return 0
    total = 0
    for mult in range(min(p - 1, s // max_part) + 1):
        total += _preg_count(s - mult * max_part, max_part - 1, p)
    return total


def partition_count(r: int) -> int:
    """Number of partitions of ``r`` via Euler's pentagonal-number recurrence."""
    if r < 0:
        raise ValueError("r must be >= 0")
    p = [1] + [0] * r
    for m in range(1, r + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[r]
