from collections import Counter
from fractions import Fraction
from itertools import product
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from gschur.algebra import (SchurAlgebra, bruteforce_products, formula_products, mul_coeff,
                            mul_coeffs, rescale_factor, stabilizer_size, struct_const_bruteforce,
                            struct_const_formula)
from gschur.cosets import coset_table
from gschur.errors import InvariantViolation
from gschur.monoid import Family, compose, enumerate_family, identity, inverse_permutation
from gschur.rings import GF, QQ, ZZ
from gschur.shapes import enumerate_compositions, shape_equiv, young_elements, young_order

ALL = list(Family)
E2 = identity(2)


def key(f, lam, a, mu):
    t = coset_table(Family.parse(f), lam, mu)
    return t.key(t.rep_of[a])


def test_bruteforce_sym_two_block():
    # D1 = D2 = D = {id, s} in (2,0)x(2,0).  With m = id fixed, the pairs
    # (m1, m2) with m1 m2 = id are (id, id) and (s, s): the count is 2, and
    # the closed formula o(G_nu) N n(D) / (n(D1) n(D2)) = 2*2*2/(2*2) agrees.
    D = key("sym", (2, 0), E2, (2, 0))
    assert struct_const_bruteforce(D, D, D) == 2
    assert struct_const_formula(D, D, D) == 2


def test_bruteforce_count_independent_of_m():
    for f in ALL:
        for lam, nu, mu in product(enumerate_compositions(2, 2), repeat=3):
            for k1 in coset_table(f, lam, nu).keys():
                for k2 in coset_table(f, nu, mu).keys():
                    t1, t2, t = (coset_table(f, lam, nu), coset_table(f, nu, mu),
                                 coset_table(f, lam, mu))
                    hits = Counter(compose(x, y) for x in t1.orbits[k1.rep] for y in t2.orbits[k2.rep])
                    for rep, orbit in t.orbits.items():
                        assert len({hits[m] for m in orbit}) == 1
                    # every product lands somewhere
                    brute = bruteforce_products(k1, k2)
                    total = sum(c * len(t.orbits[d]) for d, c in brute.items())
                    assert total == len(t1.orbits[k1.rep]) * len(t2.orbits[k2.rep])


def test_trivial_middle_shape():
    for a, b in product(enumerate_family(Family.PARTIAL, 2), repeat=2):
        k1, k2 = key("partial", (1, 1), a, (1, 1)), key("partial", (1, 1), b, (1, 1))
        brute = bruteforce_products(k1, k2)
        assert dict(brute) == {compose(a, b): 1}
        assert formula_products(k1, k2) == {compose(a, b): Fraction(1)}


@pytest.mark.parametrize("f", ALL)
def test_formula_equals_bruteforce_r2(f):
    for lam, nu, mu in product(enumerate_compositions(2, 2), repeat=3):
        for k1 in coset_table(f, lam, nu).keys():
            for k2 in coset_table(f, nu, mu).keys():
                assert formula_products(k1, k2) == {d: Fraction(c) for d, c in bruteforce_products(k1, k2).items()}


def test_shape_mismatch_rejected():
    k1 = key("sym", (2, 0), E2, (1, 1))
    with pytest.raises(ValueError):
        bruteforce_products(k1, k1)
    with pytest.raises(ValueError):
        mul_coeffs("R", k1, k1)
    with pytest.raises(ValueError):
        mul_coeffs("X", key("sym", (2, 0), E2, (2, 0)), key("sym", (2, 0), E2, (2, 0)))


@pytest.mark.parametrize("f", ALL)
@pytest.mark.parametrize("side", "LR")
def test_trivial_middle_shape_coefficients(f, side):
    r = 3
    bar = (1,) * r
    for lam, mu in product(enumerate_compositions(r, r), repeat=2):
        for a in coset_table(f, lam, bar).reps:
            for b in coset_table(f, bar, mu).reps[::2]:
                k1, k2 = key(f, lam, a, bar), key(f, bar, b, mu)
                D = key(f, lam, compose(a, b), mu)
                cX = lambda k: stabilizer_size(side, coset_table(f, k.lam, k.mu).counts(k.rep))
                # the stabilizer living in G_bar is trivial: k2's for R, k1's for L
                other = k1 if side == "R" else k2
                assert mul_coeffs(side, k1, k2) == {D.rep: cX(D) // cX(other)}
                assert cX(D) % cX(other) == 0
        # alpha = 1 on side R: coefficient n_R(D(lam, beta, mu))
        e = identity(r)
        if side == "R":
            for b in coset_table(f, bar, mu).reps:
                D = key(f, lam, b, mu)
                got = mul_coeffs(side, key(f, lam, e, bar), key(f, bar, b, mu))
                assert got == {D.rep: stabilizer_size(side, coset_table(f, lam, mu).counts(D.rep))}


@pytest.mark.parametrize("f", ALL)
@pytest.mark.parametrize("side", "LR")
def test_product_through_smaller_young_subgroup(f, side):
    r = 3
    e = identity(r)
    for lam, nu in product(enumerate_compositions(r, r), repeat=2):
        if set(young_elements(nu)) <= set(young_elements(lam)):
            one = key(f, lam, e, lam)
            got = mul_coeffs(side, key(f, lam, e, nu), key(f, nu, e, lam))
            assert got == {one.rep: young_order(lam) // young_order(nu)}
    assert mul_coeff("R", key(f, (2, 0), E2, (1, 1)), key(f, (1, 1), E2, (2, 0)),
                     key(f, (2, 0), E2, (2, 0))) == 2


@pytest.mark.parametrize("side", "LR")
def test_one_times_basis(side):
    alg = SchurAlgebra("rook", 3, 3, side)
    for k in alg.basis():
        x = alg.basis_element(k)
        assert alg.one(k.lam) * x == x == x * alg.one(k.mu)


def test_vanishing_rule():
    alg = SchurAlgebra("sym", 2, 2)
    x = alg.f((2, 0), E2, (1, 1))
    assert (x * x) == alg.zero()
    (k,) = x.terms
    assert alg.basis_product(k, k) == {}


def test_trivial_shape_products_are_composition():
    alg = SchurAlgebra("partial", 2, 2, "L", QQ)
    for a, b in product(enumerate_family(Family.PARTIAL, 2), repeat=2):
        assert alg.f((1, 1), a, (1, 1)) * alg.f((1, 1), b, (1, 1)) == alg.f((1, 1), compose(a, b), (1, 1))


@pytest.mark.parametrize("f", ALL)
@pytest.mark.parametrize("side", "LR")
def test_idempotents(f, side):
    alg = SchurAlgebra(f, 2, 3, side, GF(3))
    for a, b in product(alg.compositions, repeat=2):
        assert alg.one(a) * alg.one(b) == (alg.one(a) if a == b else alg.zero())
    u = alg.unit()
    assert u * u == u
    assert sum((alg.one(nu) for nu in alg.compositions), alg.zero()) == u


@pytest.mark.parametrize("r,n", [(r, n) for r in (1, 2, 3) for n in (1, 2, 3)])
def test_classical_dimension(r, n):
    assert SchurAlgebra("sym", r, n).dimension() == comb(n * n + r - 1, r)


@pytest.mark.parametrize("f", ALL)
def test_basis_counts_family(f):
    # the (1^r, 1^r) block is the monoid itself
    alg = SchurAlgebra(f, 3, 3)
    assert len(alg.basis((1, 1, 1), (1, 1, 1))) == f.order(3)


def _random_element(alg, data, size=3):
    keys = alg.basis()
    picks = data.draw(st.lists(st.sampled_from(keys), min_size=0, max_size=size))
    coeffs = data.draw(st.lists(st.integers(-3, 3), min_size=len(picks), max_size=len(picks)))
    return alg.element({k: alg.ring(c) for k, c in zip(picks, coeffs)})


@settings(max_examples=40)
@given(st.sampled_from(ALL), st.sampled_from("LR"), st.sampled_from([ZZ, GF(2), GF(3)]), st.data())
def test_associativity_random_elements_r3(f, side, ring, data):
    alg = SchurAlgebra(f, 3, 3, side, ring)
    x, y, z = (_random_element(alg, data) for _ in range(3))
    assert (x * y) * z == x * (y * z)


@settings(max_examples=40)
@given(st.sampled_from(ALL), st.sampled_from("LR"), st.data())
def test_unit_and_bilinearity(f, side, data):
    alg = SchurAlgebra(f, 3, 3, side)
    x, y, z = (_random_element(alg, data) for _ in range(3))
    u = alg.unit()
    assert u * x == x == x * u
    assert x * (y + z) == x * y + x * z
    assert (x - y) * z == x * z - y * z
    assert (3 * x) * y == 3 * (x * y)


@pytest.mark.parametrize("f", ALL)
@pytest.mark.parametrize("side", "LR")
def test_rescaling_identity_r2(f, side):
    for lam, nu, mu in product(enumerate_compositions(2, 2), repeat=3):
        t = coset_table(f, lam, mu)
        for k1 in coset_table(f, lam, nu).keys():
            for k2 in coset_table(f, nu, mu).keys():
                brute = bruteforce_products(k1, k2)
                c = mul_coeffs(side, k1, k2)
                for d in t.reps:
                    lhs = brute.get(d, 0) * rescale_factor(side, t.key(d))
                    assert lhs == c.get(d, 0) * rescale_factor(side, k1) * rescale_factor(side, k2)


def test_rescaling_with_stabilizer_orders_fails():
    # Reading the rescaling factor as the stabilizer order n_X(D) breaks the
    # identity: lam = mu = (1,1), nu = (2,0), alpha = beta = id.
    f = Family.SYM
    k1, k2 = key(f, (1, 1), E2, (2, 0)), key(f, (2, 0), E2, (1, 1))
    D = key(f, (1, 1), E2, (1, 1))
    # pairs (id, id) and (s, s); N = 1 so both integer forms give c = 1
    a = struct_const_bruteforce(k1, k2, D)
    assert a == 2
    for side in "LR":
        n = lambda k: stabilizer_size(side, coset_table(f, k.lam, k.mu).counts(k.rep))
        c = mul_coeff(side, k1, k2, D)
        assert a * n(D) != c * n(k1) * n(k2)
        assert a * rescale_factor(side, D) == c * rescale_factor(side, k1) * rescale_factor(side, k2)


@pytest.mark.parametrize("f", ALL)
@pytest.mark.parametrize("side", "LR")
def test_equivalent_idempotents_conjugate(f, side):
    r = 3
    alg = SchurAlgebra(f, r, r, side)
    for lam, mu in product(alg.compositions, repeat=2):
        if not shape_equiv(lam, mu):
            continue
        G_lam, G_mu = set(young_elements(lam)), set(young_elements(mu))
        for a in enumerate_family(Family.SYM, r):
            ainv = inverse_permutation(a)
            if {compose(compose(a, g), ainv) for g in G_lam} != G_mu:
                continue
            prod_ = alg.f(mu, a, lam) * alg.one(lam) * alg.f(lam, ainv, mu)
            assert prod_ == alg.one(mu)


@pytest.mark.parametrize("f", ALL)
@pytest.mark.parametrize("side", "LR")
def test_char0_idempotent_through_bottom(f, side):
    r = 3
    alg = SchurAlgebra(f, r, r, side, QQ)
    bar, e = (1,) * r, identity(r)
    for lam in alg.compositions:
        x = alg.f(lam, e, bar) * alg.one(bar) * alg.f(bar, e, lam)
        assert x.scale(Fraction(1, young_order(lam))) == alg.one(lam)


def test_ring_reduction():
    alg = SchurAlgebra("sym", 2, 2, "R", GF(2))
    x = alg.f((2, 0), E2, (1, 1)) * alg.f((1, 1), E2, (2, 0))
    assert x == alg.zero()
    assert SchurAlgebra("sym", 2, 2, "R", GF(3)).f((2, 0), E2, (1, 1)) * \
        SchurAlgebra("sym", 2, 2, "R", GF(3)).f((1, 1), E2, (2, 0)) != alg.zero()


def test_incompatible_operands():
    a = SchurAlgebra("sym", 2, 2, "R")
    b = SchurAlgebra("sym", 2, 2, "L")
    with pytest.raises(ValueError):
        a.one((2, 0)) * b.one((2, 0))
    with pytest.raises(ValueError):
        a.f((2, 0), (1, 3), (2, 0))
    with pytest.raises(ValueError):
        SchurAlgebra("sym", 2, 2).f((2, 0), (1, 1), (2, 0))


@settings(max_examples=30)
@given(st.sampled_from(ALL), st.sampled_from([ZZ, QQ, GF(5)]), st.data())
def test_json_round_trip(f, ring, data):
    alg = SchurAlgebra(f, 2, 2, "L", ring)
    x = _random_element(alg, data, size=5)
    blob = alg.to_json(x)
    assert alg.from_json(blob) == x
    assert blob["terms"] == sorted(blob["terms"], key=lambda t: (t["lambda"], t["mu"], t["rep"]))


def test_element_json_shape():
    alg = SchurAlgebra("sym", 2, 2)
    blob = alg.to_json(alg.one((2, 0)) + alg.one((2, 0)))
    assert blob == {"family": "sym", "r": 2, "n": 2, "side": "R", "ring": "Z",
                    "terms": [{"lambda": [2, 0], "mu": [2, 0], "rep": [1, 2], "coeff": "2"}]}


def test_invariant_violation_reproducer(monkeypatch):
    import gschur.algebra as algebra
    algebra._coeffs.cache_clear()
    monkeypatch.setattr(algebra, "stabilizer_size", lambda side, c: 7 if c.nD == 2 else 1)
    k = key("sym", (2, 0), E2, (2, 0))
    with pytest.raises(InvariantViolation) as info:
        mul_coeffs("R", k, k)
    assert info.value.reproducer["lambda"] == [2, 0]
    assert info.value.reproducer["denominator"] == 49
    algebra._coeffs.cache_clear()
