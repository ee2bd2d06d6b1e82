"""Graphs of overlapping (multi-dimensional) permutations.

Vertices of ``P_d(n)`` are ``(d-1)``-tuples of ``n``-permutations; there is
an edge ``X -> Y`` when, row by row, the last ``n - 1`` entries of ``X``
are order-isomorphic to the first ``n - 1`` entries of ``Y``. ``P(n)`` is
the case ``d = 2``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter
from itertools import permutations, product
from math import factorial
from typing import Sequence

from .debruijn import TransitionGraph
from .errors import BudgetExceeded, CyclicOrder, InvalidInput
from .patterns import reduce_word

VERTEX_BUDGET = 10**5
EXPANSION_BUDGET = 10**7

Perm = tuple[int, ...]
Multi = tuple[Perm, ...]


def _as_multi(x) -> Multi:
    x = tuple(x)
    if x and isinstance(x[0], int):
        return (tuple(x),)
    return tuple(tuple(r) for r in x)


def overlaps(x, y) -> bool:
    """True if ``x -> y`` is an edge of ``P_d(n)``."""
    x, y = _as_multi(x), _as_multi(y)
    return all(reduce_word(a[1:]) == reduce_word(b[:-1]) for a, b in zip(x, y))


@dataclass
class OverlapGraph(TransitionGraph):
    d: int = 2
    n: int = 1


def multiperms(d: int, n: int) -> list[Multi]:
    """All d-dimensional n-permutations (top row omitted), lexicographically."""
    perms = list(permutations(range(1, n + 1)))
    return list(product(perms, repeat=d - 1))


def build_overlap_graph(d: int, n: int, budget: int = VERTEX_BUDGET) -> OverlapGraph:
    if d < 2 or n < 1:
        raise InvalidInput("need d >= 2 and n >= 1")
    size = factorial(n) ** (d - 1)
    if size > budget:
        raise BudgetExceeded(f"P_{d}({n}) has {size} vertices, above the budget {budget}")
    verts = multiperms(d, n)
    g = OverlapGraph(vertices=list(verts), d=d, n=n)
    by_prefix: dict[Multi, list[int]] = {}
    for i, v in enumerate(verts):
        by_prefix.setdefault(tuple(reduce_word(r[:-1]) for r in v), []).append(i)
    for i, v in enumerate(verts):
        for j in by_prefix.get(tuple(reduce_word(r[1:]) for r in v), ()):
            g.add_edge(i, j)
    return g


def cluster_by_signature(g: OverlapGraph) -> dict[Multi, list[int]]:
    """Vertex indices grouped by the reduced form of their first ``n - 1`` columns."""
    out: dict[Multi, list[int]] = {}
    for i, v in enumerate(g.vertices):
        out.setdefault(tuple(reduce_word(r[:-1]) for r in v), []).append(i)
    return dict(sorted(out.items()))


@dataclass(frozen=True)
class HamiltonianResult:
    """``status`` is ``"found"``, ``"none"`` (search exhausted) or ``"unknown"`` (budget hit)."""

    status: str
    cycle: list[int] | None
    expansions: int


def is_hamiltonian_cycle(g: TransitionGraph, cycle: Sequence[int]) -> bool:
    if sorted(cycle) != list(range(len(g.vertices))):
        return False
    return all(g.has_edge(a, b) for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]))


def hamiltonian_cycle(g: TransitionGraph, budget: int = EXPANSION_BUDGET) -> HamiltonianResult:
    """Depth-first backtracking from vertex 0, neighbours in index order."""
    N = len(g.vertices)
    if N == 0:
        return HamiltonianResult("none", None, 0)
    if N == 1:
        return HamiltonianResult("found", [0], 0) if g.has_edge(0, 0) else HamiltonianResult("none", None, 0)
    succ = [sorted(set(g.successors(v)) - {v}) for v in range(N)]
    closes = [0 in s for s in succ]
    on = [False] * N
    on[0] = True
    path, ptr = [0], [0]
    expansions = 0
    while path:
        v = path[-1]
        if len(path) == N:
            if closes[v]:
                assert is_hamiltonian_cycle(g, path)
                return HamiltonianResult("found", list(path), expansions)
        elif ptr[-1] < len(succ[v]):
            w = succ[v][ptr[-1]]
            ptr[-1] += 1
            if not on[w]:
                expansions += 1
                if expansions > budget:
                    return HamiltonianResult("unknown", None, expansions)
                on[w] = True
                path.append(w)
                ptr.append(0)
            continue
        on[path.pop()] = False
        ptr.pop()
    return HamiltonianResult("none", None, expansions)


def symbol_name(i: int) -> str:
    """``a, b, ..., z, a1, b1, ...``"""
    q, r = divmod(i, 26)
    return chr(ord("a") + r) + (str(q) if q else "")


@dataclass
class ImpliedOrder:
    """Strict inequalities forced on the positions of a candidate u-cycle.

    ``per_row[r]`` holds pairs ``(x, y)`` meaning ``x < y`` for row ``r``;
    positions are 0-based.
    """

    elements: int
    per_row: list[frozenset[tuple[int, int]]]
    acyclic: list[bool] = field(default_factory=list)

    def __post_init__(self):
        if not self.acyclic:
            self.acyclic = [_find_cycle(self.elements, rel) is None for rel in self.per_row]

    @property
    def relations(self) -> frozenset[tuple[int, int]]:
        if len(self.per_row) != 1:
            raise ValueError("relations is only defined for one-row orders; use per_row")
        return self.per_row[0]

    @property
    def is_acyclic(self) -> bool:
        return all(self.acyclic)

    def cover_relations(self, row: int = 0) -> frozenset[tuple[int, int]]:
        """Transitive reduction (Hasse diagram) of one acyclic row order."""
        rel = self.per_row[row]
        up = {x: set() for x in range(self.elements)}
        for x, y in rel:
            up[x].add(y)
        reach = {}
        for x in range(self.elements):
            seen, stack = set(), list(up[x])
            while stack:
                z = stack.pop()
                if z not in seen:
                    seen.add(z)
                    stack.extend(up[z])
            reach[x] = seen
        return frozenset(
            (x, y) for x, y in rel if not any(y in reach[z] for z in up[x] if z != y)
        )

    def named(self, pairs) -> set[str]:
        return {f"{symbol_name(x)}<{symbol_name(y)}" for x, y in pairs}


def _find_cycle(size, rel):
    ts = TopologicalSorter({x: set() for x in range(size)})
    for x, y in rel:
        ts.add(y, x)
    try:
        tuple(ts.static_order())
    except CycleError as exc:
        return exc.args[1]
    return None


def implied_order(cycle: Sequence, d: int, n: int) -> ImpliedOrder:
    """Relations implied by laying the cycle's vertices on consecutive windows.

    Vertex ``t`` of ``cycle`` (a permutation, or a tuple of ``d - 1`` rows)
    occupies positions ``t, t+1, ..., t+n-1`` modulo the cycle length.
    """
    verts = [_as_multi(v) for v in cycle]
    L = len(verts)
    rows = [set() for _ in range(d - 1)]
    for t, v in enumerate(verts):
        if len(v) != d - 1 or any(len(r) != n for r in v):
            raise InvalidInput(f"vertex {v} is not a {d}-dimensional {n}-permutation")
        for r, perm in enumerate(v):
            for a in range(n):
                for b in range(n):
                    if perm[a] < perm[b]:
                        rows[r].add(((t + a) % L, (t + b) % L))
    return ImpliedOrder(L, [frozenset(r) for r in rows])


def linearize(order: ImpliedOrder) -> tuple[tuple[int, ...], ...]:
    """Assign each position its longest-chain level, one row per order row."""
    out = []
    for r, rel in enumerate(order.per_row):
        witness = _find_cycle(order.elements, rel)
        if witness is not None:
            raise CyclicOrder(r, witness)
        below = {x: [] for x in range(order.elements)}
        for x, y in rel:
            below[y].append(x)
        level = {}
        for x in TopologicalSorter({x: set(below[x]) for x in below}).static_order():
            level[x] = 1 + max((level[z] for z in below[x]), default=0)
        out.append(tuple(level[x] for x in range(order.elements)))
    return tuple(out)


def keys(n: int) -> list[Perm]:
    """Keys for ``S_n``: the heads for ``S_(n-1)`` with ``n`` appended."""
    if n < 2:
        raise InvalidInput("keys are defined for n >= 2")
    if n == 2:
        return [(1, 2)]
    return [h + (n,) for k in keys(n - 1) for h in heads(k)]


def _displace(rows: list[list[int]], i: int) -> None:
    # swap the positions holding values i+1 and i in rows[0], all rows in lockstep
    p, q = rows[0].index(i + 1), rows[0].index(i)
    for r in rows:
        r[p], r[q] = r[q], r[p]


def _head_group(rows: Sequence[Perm]) -> list[tuple[Perm, ...]]:
    n = len(rows[0])
    cur = [list(r) for r in rows]
    out = [tuple(tuple(r) for r in cur)]
    for i in range(n - 1, 1, -1):
        _displace(cur, i)
        out.append(tuple(tuple(r) for r in cur))
    return out


def _is_key(p) -> bool:
    n = len(p)
    return sorted(p) == list(range(1, n + 1)) and p[0] == 1 and p[-1] == n


def heads(key: Sequence[int]) -> list[Perm]:
    """Heads generated from ``key`` by displacement, key first.

    Values ``i+1`` and ``i`` are swapped for ``i = n-1, ..., 2``; the final
    swap of 2 and 1 is not performed.
    """
    key = tuple(key)
    if not _is_key(key):
        raise InvalidInput(f"{key} is not a key")
    return [g[0] for g in _head_group([key])]


def rotations(head: Sequence[int]) -> list[Perm]:
    """The ``n`` cyclic left shifts of ``head``, starting with ``head``."""
    h = tuple(head)
    return [h[i:] + h[:i] for i in range(len(h))]


def key_part(key: Sequence[int]) -> list[Perm]:
    """Rotations of every head of ``key``, read head by head."""
    return [r for h in heads(key) for r in rotations(h)]


def s4_switch() -> list[Perm]:
    """Hamiltonian cycle on P(4) obtained by switching 2134 and 2143.

    The two key parts (keys 1234 and 1324) are closed cycles; swapping
    ``a = 2134`` and ``b = 2143`` between them, using the edges
    ``a' -> b`` and ``b' -> a``, joins them into a single cycle.
    """
    g = build_overlap_graph(2, 4)
    idx = lambda p: g.index((p,))
    parts = [key_part(k) for k in keys(4)]
    for part in parts:
        if not all(overlaps(x, y) for x, y in zip(part, part[1:] + part[:1])):
            raise AssertionError(f"key part {part[0]} is not a cycle")
    a, b = (2, 1, 3, 4), (2, 1, 4, 3)
    first, second = parts
    ia, ib = first.index(a), second.index(b)
    a_prev, b_prev = first[ia - 1], second[ib - 1]
    for x, y in ((a_prev, b), (b_prev, a)):
        if not g.has_edge(idx(x), idx(y)):
            raise AssertionError(f"missing switching edge {x} -> {y}")
    cycle = first[:ia] + [b] + second[ib + 1:] + second[:ib] + [a] + first[ia + 1:]
    if not is_hamiltonian_cycle(g, [idx(p) for p in cycle]):
        raise AssertionError("switched cycle is not Hamiltonian")
    return cycle


@dataclass(frozen=True)
class KeyGroupCheck:
    ok: bool
    elements: list[Multi]
    failing: tuple[Multi, Multi] | None


def d3_keygroup_cycle_check(key2: Sequence[int], key3: Sequence[int]) -> KeyGroupCheck:
    """Does the 3-dimensional key group of ``(key2, key3)`` close into a cycle?

    Heads come from displacing ``key2`` while applying the same position
    swaps to ``key3``; each head is then rotated with both rows in lockstep.
    The elements, read head by head, must be consecutive edges of P_3(n).
    """
    key2, key3 = tuple(key2), tuple(key3)
    n = len(key2)
    if n < 3 or len(key3) != n or sorted(key3) != list(range(1, n + 1)) or not _is_key(key2):
        raise InvalidInput("key2 must be a key and key3 a permutation of the same length")
    elements = []
    for h2, h3 in _head_group([key2, key3]):
        elements.extend(zip(rotations(h2), rotations(h3)))
    for x, y in zip(elements, elements[1:] + elements[:1]):
        if not overlaps(x, y):
            return KeyGroupCheck(False, elements, (x, y))
    return KeyGroupCheck(True, elements, None)
