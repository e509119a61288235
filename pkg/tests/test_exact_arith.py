from fractions import Fraction
from math import prod

import pytest
from hypothesis import given, strategies as st

from binomdiv.exact_arith import (NotInvertibleError, binomial, binomial_valuation, carry_count, catalan,
                                  factorial_valuation, factorize_binomial, is_prime, mod_inverse, rational_valuation,
                                  reconstruct, reduce_mod, sieve_primes, valuation)


def trial_division(m):
    out, p = {}, 2
    while p * p <= m:
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
        p += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


@pytest.mark.parametrize("limit, expected", [
    (10, [2, 3, 5, 7]),
    (2, [2]),
    (30, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]),
    (1, []),
])
def test_sieve(limit, expected):
    assert sieve_primes(limit) == expected


def test_sieve_against_trial_division():
    assert sieve_primes(1000) == [n for n in range(2, 1001) if trial_division(n) == {n: 1}]


@pytest.mark.parametrize("m, p, expected", [(10, 2, 8), (0, 7, 0), (6, 3, 2)])
def test_factorial_valuation(m, p, expected):
    assert factorial_valuation(m, p) == expected


def test_factorial_valuation_rejects_composite():
    with pytest.raises(ValueError):
        factorial_valuation(10, 4)


@pytest.mark.parametrize("n, k, expected", [(2, 1, 2), (6, 3, 20), (3, 5, 0), (3, -1, 0)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


@pytest.mark.parametrize("n, k, p, expected", [(4, 2, 2, 1), (6, 3, 2, 2), (5, 2, 3, 0)])
def test_binomial_valuation(n, k, p, expected):
    assert binomial_valuation(n, k, p) == expected


def test_binomial_valuation_rejects_k_above_n():
    with pytest.raises(ValueError):
        binomial_valuation(3, 5, 2)


@pytest.mark.parametrize("n, expected", [(0, 1), (3, 5), (5, 42)])
def test_catalan(n, expected):
    assert catalan(n) == expected


@pytest.mark.parametrize("n, k, expected", [(6, 3, {2: 2, 5: 1}), (4, 2, {2: 1, 3: 1}), (1, 0, {})])
def test_factorize_binomial(n, k, expected):
    assert factorize_binomial(n, k) == expected


def test_factorize_binomial_needs_enough_primes():
    with pytest.raises(ValueError):
        factorize_binomial(20, 10, primes=[2, 3, 5])


@pytest.mark.parametrize("a, m, expected", [(3, 7, 5), (108, 5, 2)])
def test_mod_inverse(a, m, expected):
    assert mod_inverse(a, m) == expected


def test_mod_inverse_not_coprime():
    with pytest.raises(NotInvertibleError):
        mod_inverse(2, 4)


def test_reduce_mod():
    assert reduce_mod(Fraction(1, 2), 7) == 4
    assert reduce_mod(-3, 7) == 4


@given(st.integers(0, 200), st.integers(0, 200))
def test_pascal(n, k):
    assert binomial(n + 1, k + 1) == binomial(n, k) + binomial(n, k + 1)


@given(st.integers(1, 200), st.data())
def test_valuation_matches_trial_division(n, data):
    k = data.draw(st.integers(0, n))
    factors = trial_division(binomial(n, k))
    for p in sieve_primes(n):
        assert binomial_valuation(n, k, p) == factors.get(p, 0)


@given(st.integers(0, 300), st.data())
def test_factorization_reconstructs(n, data):
    k = data.draw(st.integers(0, n))
    assert reconstruct(factorize_binomial(n, k)) == binomial(n, k)


@given(st.integers(0, 300), st.data(), st.sampled_from([2, 3, 5, 7, 11]))
def test_kummer(n, data, p):
    k = data.draw(st.integers(0, n))
    assert binomial_valuation(n, k, p) == carry_count(k, n - k, p)


@given(st.integers(0, 500))
def test_catalan_times_n_plus_one(n):
    assert catalan(n) * (n + 1) == binomial(2 * n, n)


@given(st.integers(1, 10**6), st.sampled_from([2, 3, 5, 7]))
def test_valuation_divides_exactly(m, p):
    v = valuation(m, p)
    assert m % p**v == 0 and m % p ** (v + 1) != 0


@given(st.fractions().filter(lambda x: x != 0), st.sampled_from([2, 3, 5]))
def test_rational_valuation_additive(x, p):
    assert rational_valuation(x * p, p) == rational_valuation(x, p) + 1


@given(st.integers(2, 2000))
def test_is_prime_agrees_with_sieve(n):
    assert is_prime(n) == (n in sieve_primes(n))


@given(st.integers(1, 60))
def test_factorial_valuation_legendre(m):
    f = prod(range(1, m + 1))
    for p in sieve_primes(m):
        assert factorial_valuation(m, p) == valuation(f, p)
