from fractions import Fraction
from math import isqrt

import mpmath
import pytest
from hypothesis import given, strategies as st

from binomdiv.precision import (HighPrecisionReal, SeriesSpec, az_zeta3_series, bauer_series, check_constant_series,
                                check_genfun_identities, check_identity, check_pi_series, check_zeta3_series,
                                eval_series, genfun_cos_check, genfun_sin_check, partial_sum, pi_hp, poly_from_roots,
                                s_over_108, s_over_108_weighted, sqrt_hp, tail_certificate, zeta3_hp)
from binomdiv.sequences import t_sequence


def mp_fraction(x):
    man, exp = x.man_exp
    return Fraction(man) * Fraction(2) ** exp


def test_reference_constants_against_mpmath():
    with mpmath.workdps(60):
        assert pi_hp(40).contains(mp_fraction(+mpmath.pi))
        assert zeta3_hp(40).contains(mp_fraction(mpmath.zeta(3)))
        assert sqrt_hp(3, 40).contains(mp_fraction(mpmath.sqrt(3)))


def test_interval_arithmetic_encloses():
    a = HighPrecisionReal(Fraction(3), Fraction(1, 100))
    b = HighPrecisionReal(Fraction(-2), Fraction(1, 50))
    for x in (Fraction(299, 100), Fraction(301, 100)):
        for y in (Fraction(-101, 50), Fraction(-99, 50)):
            assert (a * b).contains(x * y)
            assert (a / b).contains(x / y)
            assert (a - b).contains(x - y)


def test_sqrt_encloses():
    r = HighPrecisionReal.exact(2).sqrt(30)
    lo = Fraction(isqrt(2 * 10**60), 10**30)
    assert r.contains(lo) or r.contains(lo + Fraction(1, 10**30))
    assert r.rad <= Fraction(1, 10**30)


def test_geometric_calibration():
    spec = SeriesSpec("geometric", lambda k: Fraction(1, 2**k), [Fraction(1, 2)], [1])
    assert eval_series(spec, 30).value.contains(2)


def test_rejects_divergent_and_low_precision():
    spec = SeriesSpec("harmonic", lambda k: Fraction(1, k), [0, 1], [1, 1], start=1)
    with pytest.raises(ValueError):
        eval_series(spec, 20)
    grow = SeriesSpec("2^k", lambda k: Fraction(2**k), [2], [1])
    with pytest.raises(ValueError):
        eval_series(grow, 20)
    with pytest.raises(ValueError):
        eval_series(s_over_108(), 5)


def test_s_constants():
    v = eval_series(s_over_108(), 30).value
    assert v.to_decimal(10) == "0.6495190528"
    assert v.agrees(sqrt_hp(3, 40) * Fraction(3, 8), 30)
    assert eval_series(s_over_108_weighted(), 30).value.agrees(sqrt_hp(3, 40) * Fraction(27, 256), 30)
    assert check_constant_series(30).status == "pass"


def test_ratio_polynomials_match_terms():
    for spec in (s_over_108(), s_over_108_weighted(), bauer_series(), az_zeta3_series()):
        for k in range(spec.start, spec.start + 30):
            r = Fraction(sum(c * k**i for i, c in enumerate(spec.ratio_num)),
                         1) / sum(Fraction(c) * k**i for i, c in enumerate(spec.ratio_den))
            assert spec.term(k + 1) == spec.term(k) * r


def test_t_ratio_matches_solver():
    t = t_sequence(40).terms
    for k in range(1, 40):
        assert t[k] * (k + 1) * (2 * k + 1) == t[k - 1] * 24 * (3 * k - 1) * (3 * k + 1)


def test_pi_series():
    assert partial_sum(bauer_series(), 0) == 1
    report = check_pi_series(30)
    assert report.status == "pass" and report.proven


def test_zeta3_series():
    assert az_zeta3_series().term(1) == Fraction(-77, 32)
    assert check_identity("zeta3-az", 30).value.to_decimal(7) == "-2.4041138"
    report = check_zeta3_series(30)
    assert report.status == "pass"


def test_genfun_points():
    assert genfun_sin_check(Fraction(1, 200), 20).holds
    zero = genfun_cos_check(0, 20)
    assert zero.value.mid == Fraction(1, 24) and zero.holds
    assert genfun_cos_check(Fraction(1, 20), 20).holds
    with pytest.raises(ValueError):
        genfun_sin_check(Fraction(1, 108), 20)
    with pytest.raises(ValueError):
        genfun_cos_check(Fraction(1, 10), 20)
    assert check_genfun_identities(1, 20).status == "pass"


def test_halving_precision_keeps_leading_digits():
    for spec in (s_over_108(), bauer_series()):
        fine = eval_series(spec, 30).value
        coarse = eval_series(spec, 15).value
        assert fine.difference_bound(coarse) <= coarse.rad + fine.rad + abs(coarse.mid - fine.mid)
        assert abs(coarse.mid - fine.mid) <= coarse.rad + fine.rad


def test_certificate_error_is_honest():
    # the certified tail of a series with a known sum must enclose the true tail
    spec = s_over_108()
    N = 64
    cert = tail_certificate(spec, N, Fraction(1, 10**12))
    assert cert is not None
    true_tail = sqrt_hp(3, 50) * Fraction(3, 8) - partial_sum(spec, N - 1)
    assert abs(true_tail.mid - cert.estimate) <= cert.error + true_tail.rad


@given(st.fractions(min_value=Fraction(1, 10**4), max_value=Fraction(1, 120), max_denominator=10**4))
def test_sine_identity_random_points(x):
    assert genfun_sin_check(x, 15).holds


def test_poly_from_roots():
    assert poly_from_roots(2, [1, -1]) == [-2, 0, 2]
