"""
Floor excesses and the one exceptional residue class
=====================================================

For the two product divisibilities the excess functions can be -1, but only
when m is even and k = n+1 = m/2 (mod m). Those cases are absorbed by the
extra 2 in C(2k,k) = 2 C(2k-1,k-1).
"""

import numpy as np

from binomdiv.floor_lemmas import catalan_excess, triple_excess, verify_catalan_inequality

m = 8
grid = np.array([[catalan_excess(m, n, k).value for k in range(m)] for n in range(m)])
print(grid)                       # rows n, columns k
print(np.argwhere(grid < 0))      # only (n, k) = (3, 4): k = 4 = m/2, n + 1 = 4

print(triple_excess(2, 0, 1))     # value -1, exceptional
print(verify_catalan_inequality(64).summary())
