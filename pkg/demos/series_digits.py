"""
Thirty certified digits from slowly converging series
=====================================================

sum S_k/108^k has terms ~ k^(-3/2) and the 2/pi series alternates with terms
~ k^(-1/2). The tail after N terms is t_N f(N) with f an asymptotic solution
of f(k) - r(k) f(k+1) = 1; the leftover is bounded explicitly.
"""

from fractions import Fraction

from binomdiv.precision import bauer_series, check_identity, eval_series, s_over_108, sqrt_hp

v = eval_series(s_over_108(), 30)
print(v.terms, "terms, expansion order", v.certificate.order)
print(v.value.to_decimal(32))
print((sqrt_hp(3, 40) * Fraction(3, 8)).to_decimal(32))

b = eval_series(bauer_series(), 30)
print(b.terms, "terms for the 2/pi series, error", float(b.certificate.error))

for ident in ("pi-ramanujan", "zeta3-az", "zeta3-conj", "const-27sqrt3-256"):
    c = check_identity(ident, 30)
    print(ident, c.value.to_decimal(30), c.holds)
