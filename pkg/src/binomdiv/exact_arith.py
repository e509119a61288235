"""Exact integer arithmetic: primes, binomials, factorizations and p-adic valuations.

Python's ``int`` and :class:`fractions.Fraction` serve as the arbitrary-precision
natural and rational types. Everything here is pure and deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, isqrt, prod
from typing import Iterable

__all__ = [
    "NotInvertibleError",
    "sieve_primes",
    "is_prime",
    "factorial_valuation",
    "binomial",
    "binomial_valuation",
    "carry_count",
    "catalan",
    "factorize_binomial",
    "reconstruct",
    "valuation",
    "rational_valuation",
    "mod_inverse",
    "reduce_mod",
]


class NotInvertibleError(ValueError):
    """Raised when a residue has no inverse modulo the requested modulus."""


def sieve_primes(limit: int) -> list[int]:
    """Primes ``<= limit`` in increasing order (empty for ``limit < 2``)."""
    return list(_sieve(int(limit)))


@lru_cache(maxsize=32)
def _sieve(limit: int) -> tuple[int, ...]:
    if limit < 2:
        return ()
    flags = bytearray(b"\x01") * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return tuple(i for i, f in enumerate(flags) if f)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    return all(n % d for d in range(3, isqrt(n) + 1, 2))


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def factorial_valuation(m: int, p: int) -> int:
    """Exponent of the prime ``p`` in ``m!`` (Legendre's formula)."""
    _require_prime(p)
    if m < 0:
        raise ValueError("factorial of a negative integer")
    total = 0
    power = p
    while power <= m:
        total += m // power
        power *= p
    return total


def binomial(n: int, k: int) -> int:
    """``C(n, k)``; zero whenever ``k < 0`` or ``k > n`` (including ``n < 0``)."""
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def binomial_valuation(n: int, k: int, p: int) -> int:
    """Exponent of ``p`` in ``C(n, k)`` via differences of factorial valuations."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return factorial_valuation(n, p) - factorial_valuation(k, p) - factorial_valuation(n - k, p)


def carry_count(a: int, b: int, p: int) -> int:
    """Number of carries when adding ``a`` and ``b`` in base ``p`` (Kummer)."""
    carries = carry = 0
    while a or b or carry:
        s = a % p + b % p + carry
        carry = 1 if s >= p else 0
        carries += carry
        a //= p
        b //= p
    return carries


def catalan(n: int) -> int:
    """The Catalan number ``C(2n, n) / (n + 1)``, cross-checked against ``C(2n,n) - C(2n,n+1)``."""
    central = binomial(2 * n, n)
    q, r = divmod(central, n + 1)
    assert r == 0 and q == central - binomial(2 * n, n + 1)
    return q


def factorize_binomial(n: int, k: int, primes: Iterable[int] | None = None) -> dict[int, int]:
    """Prime factorization ``{p: e}`` of ``C(n, k)`` built from Legendre exponents.

    ``primes`` must contain every prime ``<= n``; when omitted a sieve is used.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    if primes is None:
        plist = sieve_primes(n)
    else:
        plist = sorted(primes)
        if [p for p in plist if p <= n] != sieve_primes(n):
            raise ValueError(f"prime list does not cover all primes <= {n}")
    factors = {}
    for p in plist:
        if p > n:
            break
        e = binomial_valuation(n, k, p)
        if e:
            factors[p] = e
    return factors


def reconstruct(factors: dict[int, int]) -> int:
    return prod(p**e for p, e in factors.items())


def valuation(m: int, p: int) -> int:
    """``nu_p(m)`` for a nonzero integer ``m`` by repeated division."""
    if m == 0:
        raise ValueError("valuation of zero is infinite")
    m = abs(m)
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


def rational_valuation(x: Fraction, p: int) -> int:
    x = Fraction(x)
    return valuation(x.numerator, p) - valuation(x.denominator, p)


def mod_inverse(a: int, m: int) -> int:
    """The inverse of ``a`` modulo ``m`` in ``(0, m)``."""
    if m < 2:
        raise ValueError("modulus must be at least 2")
    try:
        return pow(a, -1, m)
    except ValueError:
        raise NotInvertibleError(f"{a} is not invertible modulo {m}") from None


def reduce_mod(x: Fraction | int, m: int) -> int:
    """Image of a rational with denominator coprime to ``m`` in ``Z/mZ``."""
    x = Fraction(x)
    return x.numerator * mod_inverse(x.denominator, m) % m if x.denominator != 1 else x.numerator % m
