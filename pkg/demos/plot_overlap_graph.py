"""
The overlap graph route
=======================

Permutations are joined when the tail of one matches the head of the next up
to order. A Hamiltonian cycle in that graph fixes a set of comparisons
between positions of a would-be cycle; if those comparisons are consistent,
assigning longest-chain levels produces an actual universal cycle.
"""

# %%
# The graph for n = 3
# -------------------
from ucycles import overlap
from ucycles.debruijn import format_label

g = overlap.build_overlap_graph(2, 3)
print(len(g.vertices), "vertices,", len(g.edges), "edges")
print(g.to_dot(name="P3"))

# %%
# Vertices sharing a head pattern form a cluster.
for sig, members in overlap.cluster_by_signature(g).items():
    print(format_label(sig), [format_label(g.vertices[i]) for i in members])

# %%
# From a cycle to values
# ----------------------
cycle = [(1, 3, 2), (3, 1, 2), (1, 2, 3), (2, 3, 1), (3, 2, 1), (2, 1, 3)]
order = overlap.implied_order(cycle, 2, 3)
print(sorted(order.named(order.cover_relations())))
print("values:", overlap.linearize(order)[0])

# %%
# Search finds a cycle on its own as well.
for d, n in [(2, 4), (3, 3), (2, 5)]:
    G = overlap.build_overlap_graph(d, n)
    res = overlap.hamiltonian_cycle(G)
    order = overlap.implied_order([G.vertices[i] for i in res.cycle], d, n)
    print(f"d={d} n={n}: {res.status} after {res.expansions} expansions, acyclic={order.is_acyclic}")

# %%
# Keys, heads and rotations
# -------------------------
# Each key spawns heads by swapping adjacent values; each head spawns its
# rotations. Together they reach every permutation once.
print(overlap.keys(5))
print(overlap.heads((1, 2, 3, 4)))

# %%
# For n = 4 the two key parts are separate 12-cycles. Exchanging the
# successors of 2134 and 2143 joins them.
print(" ".join(format_label(p) for p in overlap.s4_switch()))

# %%
# In three dimensions the same idea works for some key pairs only.
for k2, k3 in [((1, 2, 3), (1, 3, 2)), ((1, 2, 3), (2, 3, 1))]:
    print(k2, k3, overlap.d3_keygroup_cycle_check(k2, k3).ok)
