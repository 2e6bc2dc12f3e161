"""The level filtration of B and the quotients C^lam = 1B1 / (1B1 meet B e B).

For a partition lam, ``e_lam`` sums the idempotents 1_mu over compositions mu
strictly below lam and ``ebar_lam`` adds those equivalent to lam.  The kernel
of 1_lam B 1_lam -> C^lam is

    1_lam B 1_lam  meet  B e_lam B  =  sum_{mu < lam} 1_lam B 1_mu B 1_lam

(x = 1_lam x 1_lam for x in 1_lam B 1_lam), so it is spanned by the products
f(lam, D1, mu) * f(mu, D2, lam) of basis elements through one smaller mu.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraElement, SchurAlgebra
from .cosets import DoubleCosetKey
from .linalg import RowEchelon, exact_rank, parse_field
from .monoid import MapElement
from .shapes import Composition, is_partition, shape_cmp, shape_equiv

__all__ = ["SpanBasis", "e_lambda", "ebar_lambda", "lower_shapes", "kbar_span",
           "dim_C", "dim_Q", "in_kernel", "exact_rank"]


@dataclass
class SpanBasis:
    """Echelon basis of a row space inside the span of ``ambient``."""
    ambient: list[DoubleCosetKey]
    rows: list[list[int]]
    rank: int
    echelon: RowEchelon

    def contains(self, vec) -> bool:
        return self.echelon.contains(vec)


def _partition(alg: SchurAlgebra, lam) -> Composition:
    lam = alg.shape(lam)
    if not is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    return lam


def lower_shapes(alg: SchurAlgebra, lam, strict: bool = True,
                 representatives: bool = False) -> list[Composition]:
    """Compositions mu of Lambda(r, n) with mu < lam (or mu <= lam).

    With ``representatives`` only the partition of each equivalence class is
    kept; the idempotents 1_mu and 1_mu' of equivalent shapes generate the same
    two-sided ideal, so the spans are unchanged.
    """
    out = []
    for mu in alg.compositions:
        c = shape_cmp(mu, lam)
        if c < 0 or (c == 0 and not strict):
            if representatives and not is_partition(mu):
                continue
            out.append(mu)
    return out


def e_lambda(alg: SchurAlgebra, lam) -> AlgebraElement:
    lam = _partition(alg, lam)
    out = alg.zero()
    for mu in lower_shapes(alg, lam):
        out = out + alg.one(mu)
    return out


def ebar_lambda(alg: SchurAlgebra, lam) -> AlgebraElement:
    lam = _partition(alg, lam)
    out = alg.zero()
    for mu in lower_shapes(alg, lam, strict=False):
        out = out + alg.one(mu)
    return out


_SPAN_CACHE: dict = {}


def _check_field(alg: SchurAlgebra):
    parse_field(alg.ring)


def kbar_span(alg: SchurAlgebra, lam, representatives: bool = False) -> SpanBasis:
    """Span of 1_lam B e_lam B 1_lam inside the f(lam, D, lam) basis."""
    _check_field(alg)
    lam = _partition(alg, lam)
    cache_key = (alg.signature(), lam, representatives)
    hit = _SPAN_CACHE.get(cache_key)
    if hit is not None:
        return hit
    square = alg.table(lam, lam)
    ambient = square.keys()
    index = {k.rep: i for i, k in enumerate(ambient)}
    ech = RowEchelon(alg.ring, len(ambient))
    for mu in lower_shapes(alg, lam, representatives=representatives):
        if ech.full:
            break
        left, right = alg.table(lam, mu).keys(), alg.table(mu, lam).keys()
        for k1 in left:
            if ech.full:
                break
            for k2 in right:
                prod = alg.basis_product(k1, k2)
                if not prod:
                    continue
                vec = [0] * len(ambient)
                for k, c in prod.items():
                    vec[index[k.rep]] = c
                ech.add(vec)
                if ech.full:
                    break
    span = SpanBasis(ambient, ech.rows(), ech.rank, ech)
    _SPAN_CACHE[cache_key] = span
    return span


def dim_C(alg: SchurAlgebra, lam, representatives: bool = False) -> int:
    """dim of C^lam over the algebra's field."""
    span = kbar_span(alg, lam, representatives)
    return len(span.ambient) - span.rank


def kernel_rank(alg: SchurAlgebra, lam, representatives: bool = False) -> int:
    return kbar_span(alg, lam, representatives).rank


def in_kernel(alg: SchurAlgebra, lam, a: MapElement) -> bool:
    """Whether f(lam, a, lam) lies in 1_lam B 1_lam meet B e_lam B."""
    span = kbar_span(alg, lam)
    key = alg.key(lam, a, lam)
    vec = [1 if k == key else 0 for k in span.ambient]
    return span.contains(vec)


def equivalent_count(alg: SchurAlgebra, lam) -> int:
    """d = number of compositions in Lambda(r, n) equivalent to lam."""
    lam = alg.shape(lam)
    return sum(1 for mu in alg.compositions if shape_equiv(mu, lam))


def _block_quotient_dim(alg: SchurAlgebra, a: Composition, b: Composition,
                        lower: list[Composition]) -> int:
    # products through mu land in the single (a, b) block, so ranks add up block-wise
    ambient = alg.table(a, b).keys()
    index = {k.rep: i for i, k in enumerate(ambient)}
    ech = RowEchelon(alg.ring, len(ambient))
    for mu in lower:
        for k1 in alg.table(a, mu).keys():
            for k2 in alg.table(mu, b).keys():
                if ech.full:
                    return 0
                vec = [0] * len(ambient)
                for k, c in alg.basis_product(k1, k2).items():
                    vec[index[k.rep]] = c
                ech.add(vec)
    return len(ambient) - ech.rank


def dim_Q(alg: SchurAlgebra, lam) -> int:
    """dim(ebar B ebar) - dim(ebar B e B ebar); expected to be d**2 * dim_C."""
    _check_field(alg)
    lam = _partition(alg, lam)
    upper = lower_shapes(alg, lam, strict=False)
    lower = lower_shapes(alg, lam)
    return sum(_block_quotient_dim(alg, a, b, lower) for a in upper for b in upper)
