"""WZ pairs behind the Bauer (2/pi) and Ramanujan (8/pi) partial-sum divisibilities.

A WZ pair satisfies ``F(n,k-1) - F(n,k) = G(n+1,k) - G(n,k)``; summing over
``0 <= n <= N, 1 <= k <= N`` gives

    sum_{n<=N} F(n,0) - F(N,N) = sum_{k=1}^{N} G(N+1,k).

All values are exact rationals.

Two normalisation details differ from a literal transcription of the usual
formulas, and both are forced by the difference equation:

* Bauer ``G`` carries ``C(n-1+k, 2k) / (n-k)``, a removable ``0/0`` at
  ``n = k``. It is evaluated as ``C(n+k-1, 2k-1) / (2k)``, which agrees for
  ``n != k`` and equals ``1/(2k)`` on the diagonal.
* Ramanujan ``G`` needs the denominator ``2 * 4^(5n-4-k)``; with ``4^(5n-4-k)``
  alone the difference equation is off by a factor of two.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .exact_arith import binomial, catalan
from .report import ClaimReport

__all__ = [
    "WZPair",
    "TelescopeCheck",
    "bauer_F",
    "bauer_G",
    "ramanujan_F",
    "ramanujan_G",
    "BAUER",
    "RAMANUJAN",
    "check_wz_difference",
    "check_telescoping",
    "telescoping_report",
    "bauer_sum",
    "ramanujan_sum",
    "verify_bauer_divisibility",
    "verify_ramanujan_divisibility",
    "verify_parity_facts",
    "verify_g_bookkeeping",
    "sum_28k",
    "verify_28k_divisibility",
    "verify_a_integrality",
]


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def _pow4(e: int) -> Fraction:
    return Fraction(4**e) if e >= 0 else Fraction(1, 4 ** (-e))


def bauer_F(n: int, k: int) -> Fraction:
    if n < k or n < 0 or k < 0:
        return Fraction(0)
    c = binomial
    num = _sign(n + k) * (4 * n + 1) * c(2 * n, n) ** 2 * c(2 * n + 2 * k, n + k) * c(n + k, 2 * k)
    return Fraction(num, c(2 * k, k)) / _pow4(3 * n - k)


def bauer_G(n: int, k: int) -> Fraction:
    if n < k or n < 1 or k < 1:
        return Fraction(0)
    c = binomial
    num = (_sign(n + k) * (2 * n - 1) ** 2 * c(2 * n - 2, n - 1) ** 2
           * c(2 * (n - 1 + k), n - 1 + k) * c(n + k - 1, 2 * k - 1))
    return Fraction(num, 2 * 2 * k * c(2 * k, k)) / _pow4(3 * (n - 1) - k)


def ramanujan_F(n: int, k: int) -> Fraction:
    if n < k or n < 0 or k < 0:
        return Fraction(0)
    c = binomial
    num = (_sign(n + k) * (20 * n - 2 * k + 3) * c(2 * n, n) * c(4 * n + 2 * k, 2 * n + k)
           * c(2 * n + k, 2 * k) * c(2 * n - k, n))
    return Fraction(num, c(2 * k, k)) / _pow4(5 * n - k)


def ramanujan_G(n: int, k: int) -> Fraction:
    if n < k or n < 1 or k < 0:
        return Fraction(0)
    c = binomial
    num = (_sign(n + k) * n * c(2 * n, n) * c(4 * n + 2 * k - 2, 2 * n + k - 1)
           * c(2 * n + k - 1, 2 * k) * c(2 * n - k - 1, n - 1))
    return Fraction(num, 2 * c(2 * k, k)) / _pow4(5 * n - 4 - k)


@dataclass(frozen=True)
class WZPair:
    name: str
    F: Callable[[int, int], Fraction]
    G: Callable[[int, int], Fraction]
    summand: Callable[[int], Fraction]          # F(n, 0) written directly
    diagonal: Callable[[int], Fraction]         # F(N, N) written directly


@dataclass(frozen=True)
class TelescopeCheck:
    N: int
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def _bauer_summand(n: int) -> Fraction:
    return Fraction((4 * n + 1) * binomial(2 * n, n) ** 3, (-64) ** n)


def _bauer_diagonal(N: int) -> Fraction:
    return Fraction((4 * N + 1) * binomial(2 * N, N) * binomial(4 * N, 2 * N), 4 ** (2 * N))


def _ramanujan_summand(n: int) -> Fraction:
    return Fraction((20 * n + 3) * binomial(2 * n, n) ** 2 * binomial(4 * n, 2 * n), (-1024) ** n)


def _ramanujan_diagonal(N: int) -> Fraction:
    return Fraction((18 * N + 3) * binomial(6 * N, 3 * N) * binomial(3 * N, N), 2 ** (8 * N))


BAUER = WZPair("I", bauer_F, bauer_G, _bauer_summand, _bauer_diagonal)
RAMANUJAN = WZPair("II", ramanujan_F, ramanujan_G, _ramanujan_summand, _ramanujan_diagonal)


def check_wz_difference(pair: WZPair, n_max: int, k_max: int) -> ClaimReport:
    report = ClaimReport(f"wz-{pair.name}", {"n_max": n_max, "k_max": k_max}, proven=True)
    F, G = pair.F, pair.G
    for n in range(n_max + 1):
        for k in range(1, k_max + 1):
            report.checked += 1
            lhs = F(n, k - 1) - F(n, k)
            rhs = G(n + 1, k) - G(n, k)
            if lhs != rhs:
                report.add((n, k), f"F-difference {lhs} != G-difference {rhs}")
    return report


def check_telescoping(pair: WZPair, N: int) -> TelescopeCheck:
    """Both sides of the summed difference equation at ``N``.

    The left side is built from the direct summand and diagonal formulas,
    which are first checked against ``F(n, 0)`` and ``F(N, N)``.
    """
    if N < 1:
        raise ValueError("N must be positive")
    direct = sum((pair.summand(n) for n in range(N + 1)), Fraction(0))
    via_f = sum((pair.F(n, 0) for n in range(N + 1)), Fraction(0))
    if direct != via_f or pair.diagonal(N) != pair.F(N, N):
        raise ArithmeticError(f"closed forms of F disagree with F at N={N}")
    lhs = direct - pair.diagonal(N)
    rhs = sum((pair.G(N + 1, k) for k in range(1, N + 1)), Fraction(0))
    return TelescopeCheck(N, lhs, rhs)


def telescoping_report(pair: WZPair, N_max: int) -> ClaimReport:
    report = ClaimReport(f"wz-{pair.name}-telescope", {"N_max": N_max}, proven=True)
    for N in range(1, N_max + 1):
        report.checked += 1
        t = check_telescoping(pair, N)
        if not t.holds:
            report.add((N,), f"lhs {t.lhs} != rhs {t.rhs}")
    return report


def _alternating_sums(term: Callable[[int], int], base: int, N_max: int) -> list[int]:
    """``sum_{k<=N} term(k) * base^(N-k)`` for ``N = 0..N_max`` by Horner's rule."""
    out, acc = [], 0
    for N in range(N_max + 1):
        acc = acc * base + term(N)
        out.append(acc)
    return out


def bauer_sum(N: int) -> int:
    """``sum_{k=0}^{N} (4k+1) C(2k,k)^3 (-64)^(N-k)``."""
    return _alternating_sums(lambda k: (4 * k + 1) * binomial(2 * k, k) ** 3, -64, N)[N]


def ramanujan_sum(N: int) -> int:
    """``sum_{k=0}^{N} (20k+3) C(2k,k)^2 C(4k,2k) (-2^10)^(N-k)``."""
    return _alternating_sums(lambda k: (20 * k + 3) * binomial(2 * k, k) ** 2 * binomial(4 * k, 2 * k), -1024, N)[N]


def _verify_div(claim_id: str, term, base: int, N_max: int) -> ClaimReport:
    report = ClaimReport(claim_id, {"N_max": N_max}, proven=True)
    sums = _alternating_sums(term, base, N_max)
    for N in range(1, N_max + 1):
        report.checked += 1
        modulus = 4 * (2 * N + 1) * binomial(2 * N, N)
        r = sums[N] % modulus
        if r:
            report.add((N,), f"sum mod {modulus} = {r}")
    return report


def verify_bauer_divisibility(N_max: int) -> ClaimReport:
    """``4(2N+1) C(2N,N)`` divides :func:`bauer_sum` for ``1 <= N <= N_max``."""
    return _verify_div("thm1.2-1.4", lambda k: (4 * k + 1) * binomial(2 * k, k) ** 3, -64, N_max)


def verify_ramanujan_divisibility(N_max: int) -> ClaimReport:
    return _verify_div("thm1.2-1.5",
                       lambda k: (20 * k + 3) * binomial(2 * k, k) ** 2 * binomial(4 * k, 2 * k), -1024, N_max)


def verify_parity_facts(N_max: int) -> ClaimReport:
    """The two closed forms used to show the ``k = 1`` bookkeeping terms are even.

    ``C(2N,N) Cat(N+1) C(N+2,2) / 2 = 2 (2N+1) C(2N-1,N-1)^2`` and
    ``C(4N+4,2N+2) C(2N+2,2) C(2N,N) / 2 = 2 C(4N+3,2N+1) C(2N+2,2) C(2N-1,N-1)``.
    """
    report = ClaimReport("wz-parity", {"N_max": N_max}, proven=True)
    c = binomial
    for N in range(1, N_max + 1):
        report.checked += 2
        lhs = Fraction(c(2 * N, N) * catalan(N + 1) * c(N + 2, 2), 2)
        rhs = 2 * (2 * N + 1) * c(2 * N - 1, N - 1) ** 2
        if lhs != rhs:
            report.add((N, "bauer"), f"{lhs} != {rhs}")
        lhs = Fraction(c(4 * N + 4, 2 * N + 2) * c(2 * N + 2, 2) * c(2 * N, N), 2)
        rhs = 2 * c(4 * N + 3, 2 * N + 1) * c(2 * N + 2, 2) * c(2 * N - 1, N - 1)
        if lhs != rhs:
            report.add((N, "ramanujan"), f"{lhs} != {rhs}")
    return report


def verify_g_bookkeeping(pair: WZPair, N_max: int) -> ClaimReport:
    """``base^N * sum_{k=1}^{N} G(N+1,k)`` is an integer multiple of ``4(2N+1)C(2N,N)``.

    Also checks that the right-hand side equals the binomial-ratio form
    ``c (2N+1) C(2N,N) / base^N * sum_k (-4)^(k-1) X_k`` with ``X_k`` the Catalan
    ratio (Bauer, ``c = 2``) or the triple ratio (Ramanujan, ``c = 1``).
    """
    from .central_divisibility import catalan_ratio, triple_ratio

    if pair is BAUER:
        base, x, c = -64, catalan_ratio, 2
    else:
        base, x, c = -1024, triple_ratio, 1
    report = ClaimReport(f"wz-{pair.name}-bookkeeping", {"N_max": N_max}, proven=True)
    for N in range(1, N_max + 1):
        report.checked += 1
        g = sum((pair.G(N + 1, k) for k in range(1, N + 1)), Fraction(0))
        central = binomial(2 * N, N)
        inner = sum((Fraction((-4) ** (k - 1)) * x(N, k) for k in range(1, N + 1)), Fraction(0))
        if g != c * (2 * N + 1) * central * inner / Fraction(base) ** N:
            report.add((N, "form"), "G-sum differs from its binomial-ratio form")
        scaled = g * Fraction(base) ** N / (4 * (2 * N + 1) * central)
        if scaled.denominator != 1:
            report.add((N, "div"), f"scaled G-sum / modulus = {scaled}")
    return report


def sum_28k(n: int) -> int:
    """``sum_{k=0}^{n-1} (28k^2+18k+3) C(2k,k)^4 C(3k,k) (-64)^(n-1-k)``."""
    acc = 0
    for k in range(n):
        acc = acc * -64 + (28 * k * k + 18 * k + 3) * binomial(2 * k, k) ** 4 * binomial(3 * k, k)
    return acc


def verify_28k_divisibility(n_max: int) -> ClaimReport:
    """Conjectured: ``(2n+1) n^2 C(2n,n)^2`` divides :func:`sum_28k` for ``2 <= n <= n_max``."""
    report = ClaimReport("conj1.4ii-div", {"n_max": n_max}, proven=False)
    acc = 0
    for n in range(1, n_max + 1):
        k = n - 1
        acc = acc * -64 + (28 * k * k + 18 * k + 3) * binomial(2 * k, k) ** 4 * binomial(3 * k, k)
        if n < 2:
            continue
        report.checked += 1
        modulus = (2 * n + 1) * n * n * binomial(2 * n, n) ** 2
        if acc % modulus:
            report.add((n,), f"sum mod {modulus} = {acc % modulus}")
    return report


def verify_a_integrality(n_max: int) -> ClaimReport:
    """Conjectured: every ``a_n`` (alternating ``205k^2+160k+32`` sum) is a positive integer."""
    from .sequences import a_terms_closed

    report = ClaimReport("conj1.3i", {"n_max": n_max}, proven=False)
    for n, a in enumerate(a_terms_closed(n_max), start=1):
        report.checked += 1
        if a.denominator != 1 or a <= 0:
            report.add((n,), f"a_{n} = {a}")
    return report
