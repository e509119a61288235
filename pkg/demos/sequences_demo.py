"""
The sequences S, T and a
========================

T is read off the power-series root of 6912y^3 - 36y + 1 - 216x^2 = 0; its odd
coefficients must be S, which checks the solver.
"""

from binomdiv.sequences import a_sequence_recurrence, cubic_series_solve, s_sequence, stirling_ratio, t_sequence

print(s_sequence(8).terms)     # note S_3 = 14586
print(t_sequence(8).terms)
print(a_sequence_recurrence(6).terms)

y = cubic_series_solve(10)
print([str(c) for c in y.coeffs])

# 3 S_3 mod 27 equals 15 - 30*3 + 60*9 mod 27
print(14586 % 27, (15 - 90 + 540) % 27)

for n in (1, 10, 100, 1000):
    print(n, stirling_ratio(n).to_decimal(8))
