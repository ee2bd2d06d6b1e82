"""
Greedy universal cycles for permutations
========================================

Every permutation of ``1..n`` appears exactly once, up to order-isomorphism,
as ``n`` consecutive entries of a cycle of length ``n!``. The greedy builder
keeps appending the smallest extension that creates a new pattern.
"""

# %%
# The run for n = 3
# -----------------
# Each step relabels the word so the new value fits, so every prefix is itself
# a permutation. ``prefixes`` replays those relabelled words.
from ucycles import greedy
from ucycles.verify import verify_multiperm_ucycle

trace = greedy.greedy_uword(2, 3)
for U in trace.prefixes():
    print("".join(map(str, U.rows[0])))

# %%
# Dropping the last ``n-1`` entries and reducing gives the cycle.
U3 = trace.final_ucycle
print("cycle:", U3.rows[0], verify_multiperm_ucycle(U3, 2, 3).verdict)

# %%
# The run always ends on the identity pattern, so the final window repeats
# the starting one and trimming closes the cycle.
print("last window:", greedy.termination_window(trace).reduced_rows)

# %%
# Larger n
# --------
# The construction is linear in the cycle length.
import time

for n in range(4, 8):
    t = time.perf_counter()
    U = greedy.greedy_ucycle(2, n)
    dt = time.perf_counter() - t
    print(f"n={n}: {U.m} columns in {dt:.3f}s")

# %%
# Extensions
# ----------
# The i-th extension appends one value per row and shifts the existing values
# to make room for it.
from ucycles.patterns import PermMatrix

base = PermMatrix.of([(4, 2, 5), (2, 6, 1), (4, 1, 2)])
print(greedy.extend(base, 2).rows)
idx = greedy.ExtensionIndex.from_rank(31, base.m, base.depth)
print(idx.tuple, greedy.extend(base, idx).rows)
