"""
Multidimensional permutations
=============================

A d-dimensional n-permutation is a stack of ``d-1`` permutations, one per
row. The same greedy rule produces a matrix whose ``n``-column windows cover
every such stack once.
"""

# %%
# d = 3, n = 2
# ------------
import numpy as np

from ucycles import greedy
from ucycles.verify import verify_multiperm_ucycle

trace = greedy.greedy_uword(3, 2)
print(np.array(trace.final_uword.rows))
print(np.array(trace.final_ucycle.rows))

# %%
# d = 3, n = 3 has 36 columns.
U = greedy.greedy_ucycle(3, 3)
print(np.array(U.rows))
print(verify_multiperm_ucycle(U, 3, 3).summary())

# %%
# Complements
# -----------
# Replacing every value ``v`` of a row by ``m + 1 - v`` reverses the order in
# that row, which maps the set of windows onto itself. Any subset of rows can
# be complemented, giving ``2^(d-1)`` cycles.
family = greedy.complement_family(U)
print(len(family), all(verify_multiperm_ucycle(V, 3, 3).verdict for V in family))

# %%
# Growth
# ------
for d, n in [(3, 4), (4, 3), (5, 2)]:
    V = greedy.greedy_ucycle(d, n)
    print(f"d={d} n={n}: {V.m} columns, rows={V.depth}")
