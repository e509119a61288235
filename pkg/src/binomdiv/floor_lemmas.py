"""Floor-function excess functions and their exhaustive residue verification.

Three integer-valued functions of a modulus ``m`` control the p-adic
valuations of the factorial ratios behind the central-binomial
divisibilities: summing a function over ``m = p, p^2, p^3, ...`` gives the
exponent of ``p`` in the corresponding ratio.

* :func:`q_excess` for ``n!(6n)! / ((2n)!(2n+1)!(3n)!)``
* :func:`triple_excess` for ``(4n+2k+2)!(k!)^2 / ((2n+k+1)!((2k)!)^2 n!(n-k+1)!)``
* :func:`catalan_excess` for ``(2n+1)!(2n+2k)!(k!)^2 / ((n!)^2(n+k)!((2k)!)^2(n-k+1)!)``

Each function depends only on the residues of its arguments modulo ``m``,
so checking ``0 <= n, k < m`` settles a modulus completely.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor

import numpy as np

from .exact_arith import factorial_valuation
from .report import ClaimReport

__all__ = [
    "LemmaOutcome",
    "frac_part_m",
    "is_exceptional",
    "q_excess",
    "triple_excess",
    "catalan_excess",
    "q_valuation_sum",
    "q_valuation_direct",
    "verify_q_inequality",
    "verify_triple_inequality",
    "verify_catalan_inequality",
    "prime_power_table",
    "excess_sums",
]


@dataclass(frozen=True)
class LemmaOutcome:
    value: int
    exceptional: bool


def frac_part_m(x, m: int) -> Fraction:
    """``m * {x/m}``, i.e. ``x mod m`` extended to rationals, in ``[0, m)``."""
    if m < 1:
        raise ValueError("m must be positive")
    x = Fraction(x)
    return x - m * floor(x / m)


def is_exceptional(m: int, n: int, k: int) -> bool:
    """True when ``m`` is even and ``k = n + 1 = m/2`` modulo ``m``."""
    if m % 2:
        return False
    half = m // 2
    return k % m == half and (n + 1) % m == half


def q_excess(m: int, n: int) -> int:
    """``[n/m] + [6n/m] - [2n/m] - [(2n+1)/m] - [3n/m]``; never negative for ``m >= 2``."""
    if m < 2:
        raise ValueError("m must be at least 2")
    return n // m + 6 * n // m - 2 * n // m - (2 * n + 1) // m - 3 * n // m


def _triple_value(m: int, n: int, k: int) -> int:
    return ((4 * n + 2 * k + 2) // m - (2 * n + k + 1) // m + 2 * (k // m) - 2 * (2 * k // m)
            - n // m - (n - k + 1) // m)


def _catalan_value(m: int, n: int, k: int) -> int:
    return ((2 * n + 2 * k) // m - (n + k) // m + 2 * (k // m) - 2 * (2 * k // m)
            - 2 * (n // m) + (2 * n + 1) // m - (n - k + 1) // m)


def triple_excess(m: int, n: int, k: int) -> LemmaOutcome:
    if m < 1:
        raise ValueError("m must be positive")
    return LemmaOutcome(_triple_value(m, n, k), is_exceptional(m, n, k))


def catalan_excess(m: int, n: int, k: int) -> LemmaOutcome:
    if m < 1:
        raise ValueError("m must be positive")
    return LemmaOutcome(_catalan_value(m, n, k), is_exceptional(m, n, k))


def q_valuation_sum(n: int, p: int) -> int:
    """``sum_i q_excess(p^i, n)``, the exponent of ``p`` in the quotient Q(n)."""
    total = 0
    m = p
    while m <= 6 * n:
        total += q_excess(m, n)
        m *= p
    return total


def q_valuation_direct(n: int, p: int) -> int:
    """Exponent of ``p`` in ``n!(6n)!/((2n)!(2n+1)!(3n)!)`` from factorial valuations."""
    fv = factorial_valuation
    return fv(n, p) + fv(6 * n, p) - fv(2 * n, p) - fv(2 * n + 1, p) - fv(3 * n, p)


def verify_q_inequality(m_max: int) -> ClaimReport:
    """Check ``q_excess(m, n) >= 0`` for every ``2 <= m <= m_max`` and residue ``n``."""
    report = ClaimReport("ineq2.1", {"m_max": m_max}, proven=True)
    for m in range(2, m_max + 1):
        for n in range(m):
            report.checked += 1
            v = q_excess(m, n)
            if v < 0:
                report.add((m, n), f"value {v}")
    return report


def _verify_pairs(claim_id: str, m_max: int, value) -> ClaimReport:
    report = ClaimReport(claim_id, {"m_max": m_max}, proven=True)
    for m in range(1, m_max + 1):
        for n in range(m):
            for k in range(m):
                report.checked += 1
                v = value(m, n, k)
                exc = is_exceptional(m, n, k)
                if exc and v != -1:
                    report.add((m, n, k), f"exceptional class but value {v}")
                elif not exc and v < 0:
                    report.add((m, n, k), f"value {v} outside exceptional class")
    return report


def verify_triple_inequality(m_max: int) -> ClaimReport:
    """Nonnegativity of :func:`triple_excess` off the exceptional class, exactly -1 on it."""
    return _verify_pairs("ineq2.2", m_max, _triple_value)


def verify_catalan_inequality(m_max: int) -> ClaimReport:
    return _verify_pairs("ineq2.3", m_max, _catalan_value)


# Vectorized sums used by the large divisibility sweeps.

def prime_power_table(primes, limit: int) -> tuple[np.ndarray, np.ndarray]:
    """All prime powers ``p^i <= limit`` grouped by prime, plus each group's start index."""
    powers, starts = [], []
    for p in primes:
        if p > limit:
            break
        starts.append(len(powers))
        q = p
        while q <= limit:
            powers.append(q)
            q *= p
    return np.array(powers, dtype=np.int64), np.array(starts, dtype=np.int64)


def excess_sums(kind: str, n: int, ks: np.ndarray, primes, limit: int) -> np.ndarray:
    """Per-prime valuation sums, shape ``(len(ks), number of primes <= limit)``.

    ``kind`` is ``"triple"`` or ``"catalan"``. Entry ``[i, j]`` is
    ``sum_t excess(p_j^t, n, ks[i])``. Valid for ``0 <= k <= n + 1``.
    """
    powers, starts = prime_power_table(primes, limit)
    if len(powers) == 0:
        return np.zeros((len(ks), 0), dtype=np.int64)
    m = powers[None, :]
    k = np.asarray(ks, dtype=np.int64)[:, None]
    fd = np.floor_divide
    if kind == "triple":
        vals = (fd(4 * n + 2 * k + 2, m) - fd(2 * n + k + 1, m) + 2 * fd(k, m) - 2 * fd(2 * k, m)
                - fd(n, m) - fd(n - k + 1, m))
    elif kind == "catalan":
        vals = (fd(2 * n + 2 * k, m) - fd(n + k, m) + 2 * fd(k, m) - 2 * fd(2 * k, m)
                - 2 * fd(n, m) + fd(2 * n + 1, m) - fd(n - k + 1, m))
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return np.add.reduceat(vals, starts, axis=1)
