from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from corank.rings import GF, QQ, ZZ, Ring


def test_coercion_canonical_forms():
    assert QQ("6/4") == Fraction(3, 2)
    assert QQ(Fraction(-2, 4)).denominator == 2
    assert GF(5)(-1) == 4
    assert GF(5)("1/2") == 3
    assert ZZ("-7") == -7
    with pytest.raises(ValueError):
        ZZ("1/2")
    with pytest.raises(ValueError):
        ZZ("x")


def test_ring_construction_errors():
    with pytest.raises(ValueError):
        Ring("Fp", 4)
    with pytest.raises(ValueError):
        Ring("Fp", 2**31 + 11)
    with pytest.raises(ValueError):
        Ring("Z", 3)
    with pytest.raises(ValueError):
        Ring("R")


def test_descriptor_round_trip():
    for r in (ZZ, QQ, GF(7)):
        assert Ring.from_descriptor(r.descriptor()) == r
    assert GF(7).descriptor() == {"kind": "Fp", "p": 7}


def test_units_and_division():
    assert ZZ.is_unit(-1) and not ZZ.is_unit(2)
    assert QQ.is_unit(Fraction(1, 3)) and not QQ.is_unit(0)
    assert GF(7).mul(3, GF(7).inv(3)) == 1
    assert ZZ.divmod(-7, 3) == (-3, 2)
    with pytest.raises(ZeroDivisionError):
        ZZ.inv(2)


def test_json_and_format():
    assert QQ.to_json(Fraction(1, 2)) == "1/2"
    assert QQ.to_json(Fraction(4, 2)) == 2
    assert GF(3).format(5 % 3) == "2"


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_gcdex_bezout(a, b):
    g, s, t = ZZ.gcdex(a, b)
    assert s * a + t * b == g
    assert g >= 0
    if a or b:
        assert a % g == 0 and b % g == 0


@given(st.integers(), st.integers(min_value=1, max_value=50))
def test_fp_residues_canonical(a, k):
    F = GF(13)
    x = F(a)
    assert 0 <= x < 13
    assert F.mul(x, k % 13) == (a * k) % 13
