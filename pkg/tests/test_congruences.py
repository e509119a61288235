from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from binomdiv.congruences import (PrimePowerRing, bernoulli, bernoulli_mod, bernoulli_numbers,
                                  check_205_supercongruences, check_28k_supercongruences, check_s_weighted_sum,
                                  check_sp_congruence, check_t_prime_residue, congruence_205_full,
                                  congruence_205_half, congruence_28k_full, congruence_28k_half, euler_number,
                                  euler_numbers, harmonic_mod, legendre_symbol)
from binomdiv.exact_arith import NotInvertibleError, binomial, sieve_primes
from binomdiv.sequences import s_term


def test_bernoulli_mod():
    assert bernoulli_mod(2, PrimePowerRing(7, 1)) == 6
    assert bernoulli_mod(4, PrimePowerRing(7, 1)) == 3
    assert bernoulli_mod(1, PrimePowerRing(5, 1)) == 2


def test_bernoulli_mod_bad_denominator():
    with pytest.raises(NotInvertibleError):
        bernoulli_mod(2, PrimePowerRing(3, 2))


@pytest.mark.parametrize("i, expected", [(2, -1), (4, 5), (6, -61)])
def test_euler(i, expected):
    assert euler_number(i) == expected


def test_harmonic():
    assert harmonic_mod(5, PrimePowerRing(5, 1)) == 0
    assert harmonic_mod(3, PrimePowerRing(3, 1)) == 0
    assert harmonic_mod(7, PrimePowerRing(7, 2)) == 0


def test_legendre():
    assert legendre_symbol(-1, 5) == 1
    assert legendre_symbol(-1, 7) == -1
    assert legendre_symbol(3, 3) == 0


def test_sp_congruence():
    assert s_term(3) % 27 == 465 % 27
    assert s_term(5) % 125 == 115 == 1365 % 125
    assert check_sp_congruence(97).status == "pass"


def test_weighted_sum_branches():
    report = check_s_weighted_sum(13)
    assert report.status == "pass" and report.checked == 4   # p = 5, 7, 11, 13


def test_t_prime_residue():
    report = check_t_prime_residue(5)
    assert report.status == "pass" and report.checked == 3
    assert 1792 % 3 == 1 and 9371648 % 5 == 3


def test_205_congruences():
    lhs, rhs = congruence_205_half(5)
    assert lhs == rhs
    for fn in (congruence_205_half, congruence_205_full):
        lhs, rhs = fn(7)
        assert lhs == rhs
    lhs, rhs = congruence_205_full(3)
    assert lhs == rhs
    with pytest.raises(ValueError):
        congruence_205_half(3)
    with pytest.raises(ValueError):
        congruence_205_full(5)
    assert check_205_supercongruences(37).status == "pass"


def test_28k_congruences():
    for p in (3, 5):
        for fn in (congruence_28k_full, congruence_28k_half):
            lhs, rhs = fn(p)
            assert lhs == rhs
    assert check_28k_supercongruences(37).status == "pass"


@given(st.integers(1, 40))
def test_bernoulli_recurrence(m):
    b = bernoulli_numbers(m)
    assert sum(binomial(m + 1, j) * b[j] for j in range(m + 1)) == 0


@given(st.integers(1, 30))
def test_euler_recurrence(n):
    e = euler_numbers(2 * n)
    assert sum(binomial(2 * n, 2 * k) * e[2 * k] for k in range(n + 1)) == 0


@given(st.integers(1, 30))
def test_von_staudt_clausen(n):
    # B_2n + sum_{(p-1) | 2n} 1/p is an integer
    frac = bernoulli(2 * n) + sum(Fraction(1, p) for p in sieve_primes(2 * n + 1) if (2 * n) % (p - 1) == 0)
    assert frac.denominator == 1


@given(st.sampled_from([p for p in sieve_primes(150) if p >= 5]))
def test_wolstenholme(p):
    assert harmonic_mod(p, PrimePowerRing(p, 2)) == 0
    assert binomial(2 * p - 1, p - 1) % p**3 == 1
