"""Generalized Schur algebras of transformation monoids.

Basis = double cosets G_lam a G_mu of Young subgroups in a submonoid of the
partial transformation monoid; exact structure constants, the level filtration
and the census of irreducible modules in positive characteristic.
"""

from .algebra import (AlgebraElement, SchurAlgebra, bruteforce_products, formula_products,
                      mul_coeff, mul_coeffs, rescale_factor, struct_const_bruteforce,
                      struct_const_formula)
from .cosets import CosetCounts, DoubleCosetKey, canonical_rep, coset_counts, enumerate_double_cosets
from .errors import BoundExceededError, InvariantViolation
from .filtration import dim_C, dim_Q, e_lambda, ebar_lambda, in_kernel, kbar_span, kernel_rank
from .levels import (CensusRecord, LevelData, census, census_count, phi_lambda, psi_lambda,
                     s_prime, s_r_lambda, s_rL_lambda)
from .linalg import exact_rank
from .monoid import Family, compose, enumerate_family, identity
from .rings import GF, QQ, ZZ, ModP, Ring, parse_ring
from .shapes import (PDecomposition, enumerate_compositions, p_decompositions,
                     p_regular_count, p_regular_enumerate, partition_count, shape_leq)

__version__ = "0.1.0"
