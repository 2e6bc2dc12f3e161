from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gschur.rings import GF, QQ, ZZ, ModP, parse_ring


def test_parse_ring():
    assert parse_ring("Z") == ZZ and parse_ring("Q") == QQ
    assert parse_ring("GF(3)") == GF(3) and parse_ring("GF(3)").name == "GF(3)"
    for bad in ("GF(4)", "GF(1)", "R", "GF(x)"):
        with pytest.raises(ValueError):
            parse_ring(bad)


def test_coercion():
    assert ZZ(Fraction(4, 1)) == 4
    with pytest.raises(TypeError):
        ZZ(Fraction(1, 2))
    assert QQ(3) == Fraction(3)
    assert GF(5)(7) == ModP(2, 5)
    with pytest.raises(TypeError):
        GF(5)(Fraction(1, 2))
    with pytest.raises(TypeError):
        GF(5)(ModP(1, 3))


def test_cross_kind_rejected():
    with pytest.raises(TypeError):
        ModP(1, 3) + ModP(1, 5)
    with pytest.raises(TypeError):
        ModP(1, 3) * Fraction(1, 2)


def test_fractions_reduced():
    assert QQ.parse("6/4") == Fraction(3, 2)
    assert QQ.format(Fraction(6, 4)) == "3/2"


@given(st.integers(-50, 50), st.integers(-50, 50), st.sampled_from([2, 3, 5, 7]))
def test_modp_is_a_field(a, b, p):
    F = GF(p)
    x, y = F(a), F(b)
    assert x + y == F(a + b) and x * y == F(a * b) and x - y == F(a - b)
    if y != F(0):
        assert (x / y) * y == x
    assert F.parse(F.format(x)) == x


def test_characteristic():
    assert ZZ.characteristic == QQ.characteristic == 0 and GF(7).characteristic == 7
    assert not ZZ.is_field and QQ.is_field and GF(2).is_field
