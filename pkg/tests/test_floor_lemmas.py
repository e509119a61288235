from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from binomdiv.exact_arith import sieve_primes
from binomdiv.floor_lemmas import (catalan_excess, excess_sums, frac_part_m, is_exceptional, q_excess,
                                   q_valuation_direct, q_valuation_sum, triple_excess, verify_catalan_inequality,
                                   verify_q_inequality, verify_triple_inequality)


@pytest.mark.parametrize("x, m, expected", [(7, 4, 3), (-1, 4, 3), (Fraction(5, 2), 2, Fraction(1, 2))])
def test_frac_part_m(x, m, expected):
    assert frac_part_m(x, m) == expected


@pytest.mark.parametrize("m, n, expected", [(2, 1, 0), (7, 0, 0), (5, 3, 0)])
def test_q_excess(m, n, expected):
    assert q_excess(m, n) == expected


def test_q_excess_needs_modulus_two():
    with pytest.raises(ValueError):
        q_excess(1, 3)


def test_triple_examples():
    out = triple_excess(2, 0, 1)
    assert out.value == -1 and out.exceptional
    assert all(triple_excess(m, 0, 0).value == 0 for m in range(3, 20))
    out = triple_excess(3, 4, 2)
    assert out.value >= 0 and not out.exceptional


def test_catalan_examples():
    out = catalan_excess(2, 0, 1)
    assert out.value == -1 and out.exceptional
    assert all(catalan_excess(m, 0, 0).value >= 0 for m in range(1, 20))
    out = catalan_excess(4, 1, 2)
    assert out.value == -1 and out.exceptional


def test_modulus_one_has_no_exceptions():
    assert triple_excess(1, 0, 0).value >= 0
    assert not is_exceptional(1, 0, 0)


def test_catalan_exceptional_set_at_two():
    for n in range(2):
        for k in range(2):
            out = catalan_excess(2, n, k)
            assert out.exceptional == (k % 2 == (n + 1) % 2 == 1)
            if out.exceptional:
                assert out.value == -1


@pytest.mark.parametrize("verify", [verify_q_inequality, verify_triple_inequality, verify_catalan_inequality])
@pytest.mark.parametrize("m_max", [2, 64])
def test_inequalities_hold(verify, m_max):
    report = verify(m_max)
    assert report.status == "pass" and report.proven and report.checked > 0


@given(st.integers(2, 40), st.integers(-100, 100), st.integers(-100, 100))
def test_periodic_in_residues(m, n, k):
    assert q_excess(m, n) == q_excess(m, n + m)
    assert triple_excess(m, n, k) == triple_excess(m, n + m, k - m)
    assert catalan_excess(m, n, k) == catalan_excess(m, n - m, k + m)


@given(st.integers(1, 150), st.sampled_from([2, 3, 5, 7, 11, 13]))
def test_valuation_sum_matches_factorials(n, p):
    assert q_valuation_sum(n, p) == q_valuation_direct(n, p)


def test_vectorised_sums_match_scalar():
    n = 13
    ks = np.arange(0, n + 2)
    primes = sieve_primes(4 * n + 2 * (n + 1) + 2)
    limit = 4 * n + 2 * (n + 1) + 2
    sums = excess_sums("catalan", n, ks, primes, limit)
    for i, k in enumerate(ks):
        for j, p in enumerate(primes):
            expected, q = 0, p
            while q <= limit:
                expected += catalan_excess(q, n, int(k)).value
                q *= p
            assert sums[i, j] == expected
