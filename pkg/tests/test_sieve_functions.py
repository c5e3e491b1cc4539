import math

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from polysieve import RangeUnavailable, SieveConstants, lower_f1, upper_F1, upper_F2

mpmath.mp.dps = 40
A1_HP = 2 * mpmath.e ** mpmath.euler


def test_constants(consts):
    assert math.isclose(consts.gamma, float(mpmath.euler), rel_tol=1e-15)
    assert math.isclose(consts.a1, 2 * math.exp(consts.gamma), rel_tol=1e-12)
    assert math.isclose(consts.a1, float(A1_HP), rel_tol=1e-14)
    assert 43.496 <= consts.a2 < 43.497
    assert 4.8333 <= consts.beta2 < 4.8334


def test_constants_reconfigurable(consts):
    c2 = consts.with_(a2=2 * consts.a2)
    assert c2.a2 == 2 * consts.a2
    assert c2.a1 == consts.a1
    with pytest.raises(ValueError):
        SieveConstants(a2=-1.0)


def test_lower_f1_values(consts):
    assert lower_f1(consts, 2.0) == 0.0
    assert lower_f1(consts, 4.0) == pytest.approx(float(A1_HP * mpmath.log(3) / 4), rel=1e-13)
    assert lower_f1(consts, 3.0) == pytest.approx(float(A1_HP * mpmath.log(2) / 3), rel=1e-13)
    assert abs(lower_f1(consts, 4.0) - 0.9783) < 1e-4
    assert abs(lower_f1(consts, 3.0) - 0.8230) < 1e-4


def test_upper_F1_values(consts):
    assert upper_F1(consts, 1.0) == pytest.approx(float(A1_HP), rel=1e-13)
    assert upper_F1(consts, 3.0) == pytest.approx(float(A1_HP / 3), rel=1e-13)
    assert abs(upper_F1(consts, 1.0) - 3.5621) < 1e-4
    assert abs(upper_F1(consts, 3.0) - 1.1874) < 1e-4
    assert upper_F1(consts, 2.0) > upper_F1(consts, 3.0)


def test_upper_F2_values(consts):
    assert upper_F2(consts, 1.0) == 43.496
    edge = consts.beta2 + 1
    assert upper_F2(consts, edge) == pytest.approx(
        float(mpmath.mpf("43.496") / mpmath.mpf("5.8333") ** 2), rel=1e-13)
    assert abs(upper_F2(consts, edge) - 1.2784) < 5e-4
    assert abs(upper_F2(consts, 2.0) - 10.874) < 5e-4


@pytest.mark.parametrize("fn,s", [
    (lower_f1, 1.999), (lower_f1, 4.001),
    (upper_F1, 0.0), (upper_F1, -1.0), (upper_F1, 3.0001),
    (upper_F2, 0.0), (upper_F2, 5.84),
])
def test_out_of_range(consts, fn, s):
    with pytest.raises(RangeUnavailable):
        fn(consts, s)


@given(st.floats(2.0, 3.0))
def test_lower_below_upper(s):
    c = SieveConstants()
    assert 0.0 <= lower_f1(c, s) < upper_F1(c, s)


@given(st.floats(1e-3, 3.0), st.floats(1e-3, 3.0))
def test_F1_decreasing(s1, s2):
    c = SieveConstants()
    if s1 < s2:
        assert upper_F1(c, s1) > upper_F1(c, s2) > 0


@given(st.floats(1e-3, 5.8333), st.floats(1e-3, 5.8333))
def test_F2_decreasing(s1, s2):
    c = SieveConstants()
    if s1 < s2:
        assert upper_F2(c, s1) > upper_F2(c, s2) > 0


@given(st.floats(2.0, 4.0))
def test_f1_zero_only_at_two(s):
    c = SieveConstants()
    v = lower_f1(c, s)
    assert (v == 0.0) == (s == 2.0)
