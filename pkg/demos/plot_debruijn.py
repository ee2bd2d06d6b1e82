"""
De Bruijn sequences two ways
============================

A de Bruijn sequence of order ``n`` over ``k`` letters lists every length-``n``
word exactly once as a cyclic window. We build one with the prefer-smallest
greedy rule and another from an Eulerian circuit of the de Bruijn graph, then
check both with the independent verifier.
"""

# %%
# Greedy construction
# -------------------
# The run starts from ``n-1`` copies of the largest letter and always appends
# the smallest letter that creates an unseen window.
from ucycles import debruijn
from ucycles.verify import verify_debruijn

w = debruijn.martin(2, 3)
print("greedy B(2,3):", "".join(map(str, w)))
print(verify_debruijn(w, 2, 3).summary())

# %%
# A custom start can stall. The exception carries the partial word.
from ucycles.errors import GreedyStall

try:
    debruijn.martin(3, 2, start=(0, 0))
except GreedyStall as exc:
    print(f"stalled after covering {exc.covered}/{exc.total}: {exc.word}")

# %%
# Eulerian route
# --------------
# Every vertex of B(n-1, k) is balanced and the graph is strongly connected,
# so it has an Eulerian circuit. Reading one letter per edge gives an order-n
# sequence.
g = debruijn.debruijn_graph(2, 2)
print("balanced:", g.is_balanced(), "strongly connected:", g.is_strongly_connected())
w3 = debruijn.debruijn_via_euler(3, 2)
print("euler B(3,2):", "".join(map(str, w3)), verify_debruijn(w3, 3, 2).verdict)

# %%
# The line graph of B(2,2) is B(3,2): edges become vertices.
lg = debruijn.line_graph(g)
print(sorted(lg.vertices) == sorted(debruijn.debruijn_graph(3, 2).vertices))

# %%
# Matrix u-cycles
# ---------------
# Treat each ``2 x 1`` slice over ``{1, 2}`` as one letter of a 4-letter
# alphabet. A de Bruijn sequence over those letters spells every ``2 x 2``
# matrix exactly once as two consecutive slices.
import numpy as np

from ucycles.verify import verify_matrix_ucycle

spec = debruijn.MatrixUCycleSpec((2, 2), 2)
slices = debruijn.matrix_ucycle(spec)
print(np.hstack(slices))
print(verify_matrix_ucycle(slices, spec).summary())
