"""Truncated power series with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class PowerSeries:
    """A power series known modulo ``x**order``.

    Arithmetic between series truncates at the smaller order, so results
    never claim more precision than their inputs carry.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs)
        self.order = order
        self.coeffs = (cs + [Fraction(0)] * order)[:order]

    @classmethod
    def x(cls, order: int) -> "PowerSeries":
        return cls([0, 1], order)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < self.order else Fraction(0)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:6])
        return f"PowerSeries([{shown}{', ...' if self.order > 6 else ''}], order={self.order})"

    def _coerce(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries([other], self.order)

    def truncate(self, order: int) -> "PowerSeries":
        return PowerSeries(self.coeffs[:order], min(order, self.order))

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return PowerSeries([self.coeffs[i] + other.coeffs[i] for i in range(n)], n)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            c = Fraction(other)
            return PowerSeries([c * a for a in self.coeffs], self.order)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        nz = [(i, a[i]) for i in range(n) if a[i]]
        out = [Fraction(0)] * n
        for j in range(n):
            bj = b[j]
            if not bj:
                continue
            for i, ai in nz:
                if i + j >= n:
                    break
                out[i + j] += ai * bj
        return PowerSeries(out, n)

    __rmul__ = __mul__

    def inverse(self) -> "PowerSeries":
        a = self.coeffs
        if not a or a[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        n = self.order
        inv0 = 1 / a[0]
        out = [inv0]
        for m in range(1, n):
            s = sum((a[i] * out[m - i] for i in range(1, m + 1) if a[i]), Fraction(0))
            out.append(-s * inv0)
        return PowerSeries(out, n)

    def __truediv__(self, other):
        if not isinstance(other, PowerSeries):
            return self * (1 / Fraction(other))
        return self * other.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = PowerSeries([1], self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def valuation(self) -> int:
        """Index of the first nonzero coefficient, or ``order`` if none is known."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return self.order


def compose_polynomial(poly: Sequence, series: PowerSeries) -> PowerSeries:
    """Evaluate a polynomial (coefficients low to high) at a series by Horner's rule."""
    acc = PowerSeries([0], series.order)
    for c in reversed(poly):
        acc = acc * series + c
    return acc
