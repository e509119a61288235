"""
Partial sums of Ramanujan-type series via WZ pairs
==================================================

F(n,k-1) - F(n,k) = G(n+1,k) - G(n,k) telescopes into
sum_{n<=N} F(n,0) - F(N,N) = sum_k G(N+1,k); both sides are exact rationals.
"""

from fractions import Fraction

from binomdiv.wz import (BAUER, RAMANUJAN, bauer_G, bauer_sum, check_telescoping, ramanujan_F, ramanujan_G,
                         ramanujan_sum, verify_bauer_divisibility)

# G on the diagonal: the 0/0 in C(n-1+k,2k)/(n-k) is removable
print([bauer_G(k, k) for k in range(1, 5)])

# the companion for the 8/pi series: the difference equation pins down its scale
n, k = 3, 2
lhs = ramanujan_F(n, k - 1) - ramanujan_F(n, k)
print(lhs, ramanujan_G(n + 1, k) - ramanujan_G(n, k))
print("doubled G would give", 2 * (ramanujan_G(n + 1, k) - ramanujan_G(n, k)))

for N in (1, 2, 3):
    print(N, check_telescoping(BAUER, N).holds, check_telescoping(RAMANUJAN, N).holds)

# integer partial sums and their divisibility by 4(2N+1)C(2N,N) and 24
print(bauer_sum(1), ramanujan_sum(1), Fraction(ramanujan_sum(5), 24))
print(verify_bauer_divisibility(200).summary())
