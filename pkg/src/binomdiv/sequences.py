"""The integer sequences S, T and a, with cross-derivations and b-file export.

``S_n = C(6n,3n) C(3n,n) / (2 (2n+1) C(2n,n))``.

``T_n`` comes from the power series

    y(x) = 1/24 + sum_{k>=0} S_k x^(2k+1) - sum_{k>=1} T_k x^(2k),   S_0 = 1/2,

conjectured to equal ``cos(2/3 arccos(6 sqrt(3) x)) / 12``. Writing
``cos 3t = 4 cos^3 t - 3 cos t`` with ``3t = 2 arccos(6 sqrt(3) x)`` turns this
into the cubic ``6912 y^3 - 36 y + 1 - 216 x^2 = 0``. At ``x = 0`` the value
``1/24`` is a double root, so the series is not obtained by plain Newton on
``y``. Substituting ``y = 1/24 + (s^2 - 1)/8`` reduces the cubic to

    s^3 - s - 4x = 0,   s(0) = 1,

whose derivative at ``s = 1`` is 2; Newton iteration on ``s`` doubles the
number of correct coefficients per step. The odd coefficients must reproduce
``S_k``, which validates the solver independently of the T values.

``a_n = (1 / (8 n^2 C(2n,n)^2)) sum_{k<n} (205k^2+160k+32) (-1)^(n-1-k) C(2k,k)^5``,
also produced by the recurrence
``4 (2n+1)^2 a_{n+1} + n^2 a_n = (205n^2+160n+32) C(2n-1,n)^3`` from ``a_1 = 1``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction

from .exact_arith import binomial
from .floor_lemmas import q_valuation_sum
from .powerseries import PowerSeries
from .report import ClaimReport, OracleMismatch

__all__ = [
    "TheoremViolation",
    "SequenceTable",
    "s_term",
    "s_terms",
    "a_term",
    "a_terms_closed",
    "a_sequence_recurrence",
    "cubic_series_solve",
    "cubic_residual",
    "t_sequence",
    "s_sequence",
    "check_s_parity_and_mod",
    "stirling_ratio",
    "export_bfile",
]


class TheoremViolation(ArithmeticError):
    """A proven statement failed on a concrete instance."""


@dataclass
class SequenceTable:
    name: str
    terms: list
    method: str
    offset: int = 1
    findings: list[str] = field(default_factory=list)

    def __getitem__(self, n: int):
        return self.terms[n - self.offset]

    def __len__(self) -> int:
        return len(self.terms)

    def items(self):
        return enumerate(self.terms, start=self.offset)


def s_term(n: int) -> int:
    if n < 1:
        raise ValueError("S_n is defined for n >= 1")
    q, r = divmod(binomial(6 * n, 3 * n) * binomial(3 * n, n), 2 * (2 * n + 1) * binomial(2 * n, n))
    if r:
        raise TheoremViolation(f"S_{n} is not an integer")
    return q


def s_terms(count: int) -> list[int]:
    return [s_term(n) for n in range(1, count + 1)]


def s_sequence(count: int) -> SequenceTable:
    return SequenceTable("S", s_terms(count), "formula")


def a_term(n: int) -> Fraction:
    """Exact value of the alternating-sum definition of ``a_n``."""
    if n < 1:
        raise ValueError("a_n is defined for n >= 1")
    total = sum((205 * k * k + 160 * k + 32) * (-1) ** (n - 1 - k) * binomial(2 * k, k) ** 5 for k in range(n))
    return Fraction(total, 8 * n * n * binomial(2 * n, n) ** 2)


def a_terms_closed(count: int) -> list[Fraction]:
    """``a_1 .. a_count`` from the definition, sharing the alternating partial sums."""
    out = []
    acc = 0
    for n in range(1, count + 1):
        k = n - 1
        acc = -acc + (205 * k * k + 160 * k + 32) * binomial(2 * k, k) ** 5
        out.append(Fraction(acc, 8 * n * n * binomial(2 * n, n) ** 2))
    return out


def _as_int_if_integral(x: Fraction):
    return x.numerator if x.denominator == 1 else x


def a_sequence_recurrence(count: int) -> SequenceTable:
    """``a_1 .. a_count`` by the three-term recurrence, checked against the definition."""
    if count < 1:
        raise ValueError("count must be positive")
    vals = [Fraction(1)]
    for n in range(1, count):
        rhs = (205 * n * n + 160 * n + 32) * binomial(2 * n - 1, n) ** 3
        vals.append((rhs - n * n * vals[-1]) / (4 * (2 * n + 1) ** 2))
    closed = a_terms_closed(count)
    for n, (r, c) in enumerate(zip(vals, closed), start=1):
        if r != c:
            raise OracleMismatch(f"a_{n}: recurrence gives {r}, definition gives {c}")
    table = SequenceTable("a", [_as_int_if_integral(v) for v in vals], "recurrence")
    for n, v in enumerate(vals, start=1):
        if v.denominator != 1 or v <= 0:
            table.findings.append(f"a_{n} = {v} is not a positive integer")
    return table


def cubic_series_solve(order: int) -> PowerSeries:
    """Power-series root of ``6912 y^3 - 36 y + 1 - 216 x^2`` with ``y(0) = 1/24``, mod ``x^order``.

    The branch with positive ``x`` coefficient (``+1/2``) is returned.
    """
    if order < 2:
        raise ValueError("order must be at least 2")
    s = PowerSeries([1], 1)
    prec = 1
    while prec < order:
        prec = min(2 * prec, order)
        s = PowerSeries(s.coeffs, prec)
        x = PowerSeries.x(prec)
        f = s * s * s - s - 4 * x
        df = 3 * (s * s) - 1
        s = s - f / df
    z = (s * s - 1) / 8
    y = z + Fraction(1, 24)
    if not cubic_residual(y).is_zero():
        raise OracleMismatch("cubic residual does not vanish to the truncation order")
    return y


def cubic_residual(y: PowerSeries) -> PowerSeries:
    x = PowerSeries.x(y.order)
    return 6912 * (y * y * y) - 36 * y + 1 - 216 * (x * x)


def t_sequence(count: int) -> SequenceTable:
    """``T_1 .. T_count`` as negated even coefficients of the cubic's series root.

    The odd coefficients are compared with :func:`s_term`; any disagreement
    means the solver is wrong and raises. Non-positive or non-integral ``T``
    values are recorded as findings.
    """
    if count < 1:
        raise ValueError("count must be positive")
    y = cubic_series_solve(2 * count + 2)
    if y[0] != Fraction(1, 24) or y[1] != Fraction(1, 2):
        raise OracleMismatch(f"unexpected leading coefficients {y[0]}, {y[1]}")
    for k in range(1, count + 1):
        if y[2 * k + 1] != s_term(k):
            raise OracleMismatch(f"odd coefficient x^{2 * k + 1} = {y[2 * k + 1]} differs from S_{k}")
    terms = [-y[2 * k] for k in range(1, count + 1)]
    table = SequenceTable("T", [_as_int_if_integral(t) for t in terms], "series-oracle")
    for k, t in enumerate(terms, start=1):
        if t.denominator != 1 or t <= 0:
            table.findings.append(f"T_{k} = {t} is not a positive integer")
    return table


def _is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def check_s_parity_and_mod(n_max: int, mod_n_max: int | None = None) -> ClaimReport:
    """``S_n`` odd exactly for powers of two, and ``2n+3 | 3 S_n``.

    Parity is computed from the exact ``S_n`` and from the 2-adic excess sum
    (``nu_2(S_n) = nu_2(Q) - 1``); the two routes must agree.
    """
    if mod_n_max is None:
        mod_n_max = n_max
    report = ClaimReport("conj1.1i", {"parity_n_max": n_max, "mod_n_max": mod_n_max}, proven=False)
    for n in range(1, max(n_max, mod_n_max) + 1):
        s = s_term(n)
        if n <= n_max:
            report.checked += 1
            odd = s % 2 == 1
            if odd != (q_valuation_sum(n, 2) == 1):
                raise OracleMismatch(f"parity of S_{n} disagrees with its 2-adic excess sum")
            if odd != _is_power_of_two(n):
                report.add((n, "parity"), f"S_{n} is {'odd' if odd else 'even'}")
        if n <= mod_n_max:
            report.checked += 1
            if 3 * s % (2 * n + 3):
                report.add((n, "mod"), f"3*S_{n} mod {2 * n + 3} = {3 * s % (2 * n + 3)}")
    return report


def stirling_ratio(n: int, digits: int = 30):
    """``S_n * 8n sqrt(n pi) / 108^n`` as a :class:`~binomdiv.precision.HighPrecisionReal`."""
    from .precision import pi_hp

    if n < 1:
        raise ValueError("n must be positive")
    scale = Fraction(s_term(n) * 8 * n, 108**n)
    root = (pi_hp(digits + 10) * n).sqrt(digits + 10)
    return (root * scale).rounded(digits)


def export_bfile(table: SequenceTable, path: str | os.PathLike) -> None:
    """Write ``index value`` lines (ASCII, LF) for every term of ``table``."""
    if not len(table):
        raise ValueError("empty table")
    lines = "".join(f"{i} {v}\n" for i, v in table.items())
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(lines)
