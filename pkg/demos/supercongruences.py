"""
Supercongruences modulo p^5, p^6, p^7
=====================================

Exact sums are reduced and compared to Bernoulli/Euler-number expressions.
"""

from binomdiv.congruences import (PrimePowerRing, bernoulli, bernoulli_mod, check_205_supercongruences,
                                  check_28k_supercongruences, congruence_205_full, congruence_28k_half, euler_number)

print(bernoulli(10), euler_number(10))
print(bernoulli_mod(8, PrimePowerRing(11, 6)))

for p in (7, 11, 13):
    print(p, congruence_205_full(p), congruence_28k_half(p))

print(check_205_supercongruences(61).summary())
print(check_28k_supercongruences(61).summary())
