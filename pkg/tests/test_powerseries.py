from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from binomdiv.powerseries import PowerSeries, compose_polynomial

coeff_lists = st.lists(st.fractions(max_denominator=20).map(Fraction), min_size=1, max_size=8)


def test_geometric_inverse():
    one_minus_x = PowerSeries([1, -1], 10)
    assert one_minus_x.inverse().coeffs == [1] * 10


def test_truncation_follows_smaller_order():
    a = PowerSeries([1, 2, 3], 3)
    b = PowerSeries([1, 1, 1, 1, 1], 5)
    assert (a * b).order == 3 and (a + b).order == 3


def test_zero_constant_not_invertible():
    with pytest.raises(ZeroDivisionError):
        PowerSeries.x(5).inverse()


def test_valuation_and_pow():
    x = PowerSeries.x(8)
    assert (x**3).valuation() == 3
    assert ((1 + x) ** 4).coeffs[:5] == [1, 4, 6, 4, 1]


def test_compose_polynomial():
    x = PowerSeries.x(6)
    assert compose_polynomial([1, 0, 1], 1 + x).coeffs == [2, 2, 1, 0, 0, 0]


@given(coeff_lists, coeff_lists)
def test_mul_commutes(a, b):
    assert (PowerSeries(a, 8) * PowerSeries(b, 8)).coeffs == (PowerSeries(b, 8) * PowerSeries(a, 8)).coeffs


@given(coeff_lists.filter(lambda c: c[0] != 0))
def test_inverse_roundtrip(a):
    s = PowerSeries(a, 8)
    assert (s * s.inverse()).coeffs == [1] + [0] * 7
