"""De Bruijn sequences, de Bruijn graphs and u-cycles for matrices.

Word-level operations use the alphabet ``0..k-1``; matrix entries use
``1..k``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import prod
from typing import Callable, Hashable, Sequence

import numpy as np

from .errors import GreedyStall, InvalidInput, NotEulerian
from .patterns import check_budget


@dataclass
class TransitionGraph:
    """Directed multigraph with labelled vertices and edges.

    Loops and parallel edges are allowed. ``adjacency[v]`` lists the
    indices of the out-edges of vertex ``v`` in insertion order.
    """

    vertices: list[Hashable] = field(default_factory=list)
    edges: list[tuple[int, int, Hashable]] = field(default_factory=list)
    adjacency: list[list[int]] = field(default_factory=list)

    def __post_init__(self):
        self._index = {label: i for i, label in enumerate(self.vertices)}
        if not self.adjacency:
            self.adjacency = [[] for _ in self.vertices]

    def add_vertex(self, label) -> int:
        if label in self._index:
            raise InvalidInput(f"duplicate vertex label {label!r}")
        self._index[label] = len(self.vertices)
        self.vertices.append(label)
        self.adjacency.append([])
        return len(self.vertices) - 1

    def add_edge(self, tail: int, head: int, label=None) -> int:
        self.edges.append((tail, head, label))
        self.adjacency[tail].append(len(self.edges) - 1)
        return len(self.edges) - 1

    def index(self, label) -> int:
        return self._index[label]

    def out_degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def in_degrees(self) -> list[int]:
        deg = [0] * len(self.vertices)
        for _, h, _ in self.edges:
            deg[h] += 1
        return deg

    def successors(self, v: int) -> list[int]:
        return [self.edges[e][1] for e in self.adjacency[v]]

    def has_edge(self, tail: int, head: int) -> bool:
        return any(self.edges[e][1] == head for e in self.adjacency[tail])

    def is_balanced(self) -> bool:
        ins = self.in_degrees()
        return all(len(a) == i for a, i in zip(self.adjacency, ins))

    def _reach(self, start: int, reverse: bool) -> set[int]:
        nbrs = [[] for _ in self.vertices]
        for t, h, _ in self.edges:
            if reverse:
                nbrs[h].append(t)
            else:
                nbrs[t].append(h)
        seen = {start}
        stack = [start]
        while stack:
            for w in nbrs[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    def is_strongly_connected(self) -> bool:
        if not self.vertices:
            return True
        everyone = set(range(len(self.vertices)))
        return self._reach(0, False) == everyone and self._reach(0, True) == everyone

    def to_dot(self, fmt: Callable[[Hashable], str] = None, name: str = "G") -> str:
        """Render as Graphviz DOT, one line per edge."""
        fmt = fmt or format_label
        lines = [f"digraph {name} {{"]
        for t, h, label in self.edges:
            tail, head = fmt(self.vertices[t]), fmt(self.vertices[h])
            edge_label = "" if label is None else f' [label="{fmt(label)}"]'
            lines.append(f'  "{tail}" -> "{head}"{edge_label};')
        lines.append("}")
        return "\n".join(lines) + "\n"


def format_label(label) -> str:
    """Compact text for word and matrix labels: ``010``, ``132/213``."""
    if isinstance(label, tuple) and label and isinstance(label[0], tuple):
        return "/".join(format_label(r) for r in label)
    if isinstance(label, tuple):
        sep = "" if all(0 <= x <= 9 for x in label) else ","
        return sep.join(map(str, label))
    return str(label)


def least_rotation(word: Sequence) -> tuple:
    """Lexicographically least rotation of a cyclic word."""
    w = tuple(word)
    if not w:
        return w
    return min(w[i:] + w[:i] for i in range(len(w)))


def martin(n: int, k: int, start: Sequence[int] | None = None) -> tuple[int, ...]:
    """De Bruijn sequence of order ``n`` over ``0..k-1`` by Martin's greedy rule.

    Starting from ``(k-1)^(n-1)``, the smallest letter keeping all length-``n``
    factors distinct is appended until none fits; the ``n - 1`` rightmost
    letters are then dropped. Raises :class:`GreedyStall` if the run ends
    before all ``k**n`` words are covered (only possible for custom starts).
    """
    if n < 1 or k < 1:
        raise InvalidInput("martin needs n >= 1 and k >= 1")
    check_budget(k**n + n - 1, "de Bruijn sequence")
    word = [k - 1] * (n - 1) if start is None else [int(x) for x in start]
    if len(word) != n - 1 or any(not 0 <= x < k for x in word):
        raise InvalidInput(f"start must be {n - 1} letters from 0..{k - 1}")
    seen = set()
    top = k ** (n - 1)
    # radix-k code of the last n-1 letters
    suffix = 0
    for x in word:
        suffix = suffix * k + x
    while True:
        for x in range(k):
            code = suffix * k + x
            if code not in seen:
                seen.add(code)
                word.append(x)
                suffix = code % top if n > 1 else 0
                break
        else:
            break
    if len(seen) != k**n:
        raise GreedyStall(len(seen), k**n, word)
    return tuple(word[: len(word) - (n - 1)])


def debruijn_graph(n: int, k: int) -> TransitionGraph:
    """The de Bruijn graph B(n, k) on length-``n`` words over ``0..k-1``.

    Vertices are listed lexicographically and each edge ``x1..xn -> x2..x(n+1)``
    carries the label ``x1..x(n+1)``; out-edges are ordered by label.
    """
    if n < 0 or k < 1:
        raise InvalidInput("debruijn_graph needs n >= 0 and k >= 1")
    check_budget(k ** (n + 1), "de Bruijn graph")
    words = list(product(range(k), repeat=n))
    g = TransitionGraph(vertices=list(words))
    for v, w in enumerate(words):
        for x in range(k):
            g.add_edge(v, g.index((w + (x,))[1:]), w + (x,))
    return g


def line_graph(g: TransitionGraph) -> TransitionGraph:
    """Line graph: one vertex per edge of ``g``, labelled by that edge's label.

    Vertex ``i`` of the result corresponds to edge ``i`` of ``g``. There is
    an edge ``e -> f`` whenever the head of ``e`` is the tail of ``f``; it
    is labelled with the pair of the two edge labels.
    """
    lg = TransitionGraph(vertices=[label for _, _, label in g.edges])
    for i, (_, head, label) in enumerate(g.edges):
        for j in g.adjacency[head]:
            lg.add_edge(i, j, (label, g.edges[j][2]))
    return lg


def eulerian_cycle(g: TransitionGraph) -> list[int]:
    """Edge indices of an Eulerian cycle, found with Hierholzer's algorithm.

    The walk starts at vertex 0 and consumes out-edges in adjacency order,
    so the output is deterministic.
    """
    if not g.edges:
        raise NotEulerian("disconnected", "graph has no edges")
    ins = g.in_degrees()
    for v, (outs, i) in enumerate(zip(g.adjacency, ins)):
        if len(outs) != i:
            raise NotEulerian("unbalanced", f"vertex {g.vertices[v]!r} has out-degree {len(outs)}, in-degree {i}")
    active = [v for v in range(len(g.vertices)) if g.adjacency[v]]
    # balanced + weakly connected (on non-isolated vertices) suffices
    undirected = [set() for _ in g.vertices]
    for t, h, _ in g.edges:
        undirected[t].add(h)
        undirected[h].add(t)
    seen = {active[0]}
    stack = [active[0]]
    while stack:
        for w in undirected[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if any(v not in seen for v in active):
        raise NotEulerian("disconnected")

    ptr = [0] * len(g.vertices)
    stack = [(active[0], None)]
    circuit = []
    while stack:
        v, e = stack[-1]
        if ptr[v] < len(g.adjacency[v]):
            nxt = g.adjacency[v][ptr[v]]
            ptr[v] += 1
            stack.append((g.edges[nxt][1], nxt))
        else:
            stack.pop()
            if e is not None:
                circuit.append(e)
    circuit.reverse()
    return circuit


def debruijn_via_euler(n: int, k: int) -> tuple[int, ...]:
    """De Bruijn sequence read off an Eulerian cycle of B(n-1, k)."""
    if n < 1:
        raise InvalidInput("debruijn_via_euler needs n >= 1")
    g = debruijn_graph(n - 1, k)
    return tuple(g.edges[e][2][0] for e in eulerian_cycle(g))


@dataclass(frozen=True)
class MatrixUCycleSpec:
    """Shape ``n_1 x ... x n_d`` and alphabet size ``k`` of matrix u-cycles."""

    dims: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(x) for x in self.dims))
        if not self.dims or any(x < 1 for x in self.dims) or self.k < 1:
            raise InvalidInput("need at least one dimension, all dims >= 1 and k >= 1")

    @property
    def slice_shape(self) -> tuple[int, ...]:
        return self.dims[:-1]

    @property
    def letters(self) -> int:
        """Number of distinct slices, ``k ** (n_1 * ... * n_(d-1))``."""
        return self.k ** prod(self.slice_shape)

    @property
    def total(self) -> int:
        return self.letters ** self.dims[-1]


def slice_of_letter(letter: int, spec: MatrixUCycleSpec) -> np.ndarray:
    """The ``letter``-th slice (0-based) in lexicographic order, entries in ``1..k``."""
    size = prod(spec.slice_shape)
    digits = np.empty(size, dtype=np.int64)
    for i in range(size - 1, -1, -1):
        letter, digits[i] = divmod(letter, spec.k)
    return (digits + 1).reshape(spec.slice_shape)


def matrix_ucycle(spec: MatrixUCycleSpec) -> list[np.ndarray]:
    """Cyclic slice sequence covering every ``n_1 x ... x n_d`` matrix once.

    Slices are treated as letters of a ``K``-letter alphabet (lexicographic
    labelling) and spelled along a de Bruijn sequence of order ``n_d``.
    """
    check_budget(spec.letters, "slice alphabet")
    check_budget(spec.total, "matrix u-cycle")
    word = martin(spec.dims[-1], spec.letters)
    cache = {}
    out = []
    for x in word:
        if x not in cache:
            cache[x] = slice_of_letter(x, spec)
        out.append(cache[x])
    return out
