"""
Why 2(2n+1)C(2n,n) divides C(6n,3n)C(3n,n)
=========================================

The quotient is a ratio of factorials, so its exponent at a prime p is a sum
of floor-function excesses over the powers of p. Each excess is >= 0.
"""

import numpy as np

from binomdiv.central_divisibility import central_quotient, verify_quotient_even
from binomdiv.exact_arith import rational_valuation, sieve_primes
from binomdiv.floor_lemmas import q_excess, q_valuation_sum

# the first few quotients; all even integers
for n in range(1, 9):
    print(n, central_quotient(n))

# the excess for m = 12 across one full period of n
print([q_excess(12, n) for n in range(12)])

# valuation of Q(40) prime by prime, once from floors and once from the number itself
q = central_quotient(40)
table = np.array([(p, q_valuation_sum(40, p), rational_valuation(q, p)) for p in sieve_primes(240)])
print(table[table[:, 1] > 0])

# 2-adic valuation is exactly 1 at powers of two, so S_n = Q/2 is odd there
print([n for n in range(1, 130) if q_valuation_sum(n, 2) == 1])

print(verify_quotient_even(300).summary())
