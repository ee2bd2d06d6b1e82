"""
Greedy set-partition words
==========================

Two words describe the same set partition when they have the same equality
pattern. A greedy run extends a start word with the smallest letter giving a
new pattern. Only some starts manage to cover all Bell(n) partitions.
"""

# %%
# A successful run
# ----------------
from ucycles import setpartition
from ucycles.verify import verify_partition_ucycle

run = setpartition.greedy_partition_uword(4, (1, 2, 4))
print("".join(map(str, run.word)), f"{run.covered}/{run.total}")

# %%
# For a cycle the word must also end where it started.
res = setpartition.greedy_partition_ucycle(4, (1, 2, 4))
print(res.status, "".join(map(str, res.ucycle)))
print(verify_partition_ucycle(res.ucycle, 4).summary())

# %%
# Searching starts
# ----------------
# Every start of distinct letters is tried. u-words use letters ``1..n-1``
# and u-cycles use ``1..n``.
for n in range(3, 7):
    words = setpartition.search_starts(n, "uword")
    cycles = setpartition.search_starts(n, "ucycle")
    print(f"n={n}: {words.count} u-word starts, u-cycle starts "
          f"{[''.join(map(str, s)) for s in cycles.starts]}")

# %%
# The n = 6 cycle has 203 letters.
res6 = setpartition.greedy_partition_ucycle(6, (2, 1, 4, 3, 6))
print("".join(map(str, res6.ucycle)))

# %%
# Alternating greedy
# ------------------
# Alternating between the smallest and largest admissible letter on ordinary
# words gets stuck early.
alt = setpartition.alternating_greedy_words(2, 3, (2,))
print("".join(map(str, alt.word)), f"stalled={alt.stalled} covered {alt.covered}/{alt.total}")
