"""Greedy u-words and u-cycles for d-dimensional permutations.

A d-dimensional n-permutation is stored without its top row, as a
``(d - 1) x n`` matrix whose rows are permutations of ``1..n``. The greedy
run starts from ``I_{d;n-1}`` and keeps appending the lexicographically
smallest extension whose last ``n`` columns have not been covered yet.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

from .errors import InvalidInput
from .patterns import PermMatrix, ReducedWindow, as_matrix, check_budget, reduce_word


@dataclass(frozen=True)
class ExtensionIndex:
    """Position ``rank`` (1-based) of ``tuple`` in lexicographic order of ``{1..m+1}^(d-1)``."""

    tuple: tuple[int, ...]
    rank: int
    m: int

    @classmethod
    def from_rank(cls, rank: int, m: int, depth: int) -> "ExtensionIndex":
        base = m + 1
        if not 1 <= rank <= base**depth:
            raise InvalidInput(f"rank {rank} not in 1..{base ** depth}")
        digits = []
        r = rank - 1
        for _ in range(depth):
            r, dgt = divmod(r, base)
            digits.append(dgt + 1)
        return cls(tuple(reversed(digits)), rank, m)

    @classmethod
    def from_tuple(cls, idx, m: int) -> "ExtensionIndex":
        idx = tuple(int(x) for x in idx)
        if any(not 1 <= x <= m + 1 for x in idx):
            raise InvalidInput(f"extension index {idx} has entries outside 1..{m + 1}")
        rank = 0
        for x in idx:
            rank = rank * (m + 1) + (x - 1)
        return cls(idx, rank + 1, m)

    @classmethod
    def largest(cls, m: int, depth: int) -> "ExtensionIndex":
        return cls.from_tuple((m + 1,) * depth, m)


def extend(Pi, idx) -> PermMatrix:
    """The extension ``C_B(Pi) B`` of ``Pi`` selected by ``idx``.

    ``idx`` may be an :class:`ExtensionIndex`, a 1-based rank or a tuple.
    Entry ``b_j`` of the new column is the ``i_j``-th smallest entry of row
    ``j`` (or the row maximum plus one when ``i_j = m + 1``), and every entry
    of row ``j`` that is ``>= b_j`` is increased by one.

    >>> extend([[1, 2]], 3).rows
    ((1, 2, 3),)
    """
    Pi = as_matrix(Pi)
    Pi.check()
    m = Pi.m
    if isinstance(idx, int):
        idx = ExtensionIndex.from_rank(idx, m, Pi.depth)
    elif not isinstance(idx, ExtensionIndex):
        idx = ExtensionIndex.from_tuple(idx, m)
    if idx.m != m or len(idx.tuple) != Pi.depth:
        raise InvalidInput(f"extension index {idx.tuple} does not fit a {Pi.depth}x{m} matrix")
    rows = []
    for row, i in zip(Pi.rows, idx.tuple):
        b = sorted(row)[i - 1] if i <= m else max(row, default=0) + 1
        rows.append(tuple(x + 1 if x >= b else x for x in row) + (b,))
    return PermMatrix(tuple(rows))


def _extend_reduced(row: tuple[int, ...], i: int) -> tuple[int, ...]:
    # on a reduced row the i-th smallest entry is i itself
    return tuple(x + 1 if x >= i else x for x in row) + (i,)


def _drop_first(row: tuple[int, ...]) -> tuple[int, ...]:
    f = row[0]
    return tuple(x - 1 if x > f else x for x in row[1:])


@dataclass(frozen=True)
class GreedyStep:
    """One extension: ``U'_{k}`` became ``U'_{k+1}`` using extension ``rank``.

    ``column`` is the appended column expressed by its per-row extension
    index; ``window`` is the newly covered reduced window ``sigma_{k+1}``.
    """

    k: int
    rank: int
    column: tuple[int, ...]
    window: tuple[tuple[int, ...], ...]


@dataclass
class GreedyTrace:
    d: int
    n: int
    steps: list[GreedyStep]
    final_uword: PermMatrix
    final_ucycle: PermMatrix = field(init=False)

    def __post_init__(self):
        self.final_ucycle = trim(self.final_uword, self.n)

    def prefixes(self) -> list[PermMatrix]:
        """Every intermediate u-word ``U'_{d;n,k}``, relabelled step by step.

        Quadratic in the final length; meant for inspecting small runs.
        """
        out = [PermMatrix.identity(self.d - 1, self.n - 1)]
        for step in self.steps:
            out.append(_apply_step(out[-1], step.column, self.n))
        return out


def _apply_step(U: PermMatrix, column, n: int) -> PermMatrix:
    rows = []
    for row, i in zip(U.rows, column):
        suffix = row[len(row) - (n - 1):] if n > 1 else ()
        b = sorted(suffix)[i - 1] if i <= n - 1 else max(suffix, default=0) + 1
        rows.append(tuple(x + 1 if x >= b else x for x in row) + (b,))
    return PermMatrix(tuple(rows))


def _check_params(d: int, n: int) -> int:
    if d < 2 or n < 1:
        raise InvalidInput("greedy construction needs d >= 2 and n >= 1")
    total = factorial(n) ** (d - 1)
    check_budget(total + n - 1, f"U'_(d={d};n={n})")
    return total


def greedy_uword(d: int, n: int) -> GreedyTrace:
    """Run the greedy algorithm and return the full trace.

    The search works on the reduced ``(n-1)``-column suffix only; the
    relative order of all values is kept in one linked list per row, and
    concrete values are assigned once the run is over.
    """
    total = _check_params(d, n)
    depth = d - 1
    size = total + n - 1
    nxt = [[-1] * size for _ in range(depth)]
    prv = [[-1] * size for _ in range(depth)]
    head = [0 if n > 1 else -1] * depth
    for j in range(depth):
        for c in range(n - 2):
            nxt[j][c] = c + 1
            prv[j][c + 1] = c

    suffix = tuple(tuple(range(1, n)) for _ in range(depth))
    seen = set()
    steps = []
    n_cands = n**depth
    # Every window whose reduced prefix is s was chosen while the suffix was s,
    # and those choices come in increasing rank, so the smallest uncovered
    # extension of s is simply the next rank after the ones already used there.
    visits: dict = {}
    c = n - 1
    while True:
        rank = visits.get(suffix, 0) + 1
        if rank > n_cands:
            break
        visits[suffix] = rank
        idx = ExtensionIndex.from_rank(rank, n - 1, depth).tuple
        win = tuple(_extend_reduced(row, i) for row, i in zip(suffix, idx))
        if win in seen or c >= size:
            raise AssertionError("greedy run revisited a window or overran its length bound")
        seen.add(win)
        steps.append(GreedyStep(len(steps), rank, idx, win))
        for j, (row, i) in enumerate(zip(suffix, idx)):
            nx, pv = nxt[j], prv[j]
            if not row:
                head[j] = c
            elif i <= n - 1:
                # new value sits just below the i-th smallest suffix entry
                at = c - (n - 1) + row.index(i)
                before = pv[at]
                pv[c], nx[c] = before, at
                pv[at] = c
                if before < 0:
                    head[j] = c
                else:
                    nx[before] = c
            else:
                at = c - (n - 1) + row.index(n - 1)
                after = nx[at]
                pv[c], nx[c] = at, after
                nx[at] = c
                if after >= 0:
                    pv[after] = c
        suffix = tuple(_drop_first(r) for r in win)
        c += 1

    identity = tuple(tuple(range(1, n + 1)) for _ in range(depth))
    if len(steps) != total or steps[-1].window != identity:
        raise AssertionError(f"greedy run for d={d}, n={n} ended after {len(steps)} steps")

    rows = []
    for j in range(depth):
        vals = [0] * size
        v, x = 1, head[j]
        while x >= 0:
            vals[x] = v
            v += 1
            x = nxt[j][x]
        rows.append(tuple(vals))
    return GreedyTrace(d, n, steps, PermMatrix(tuple(rows)))


def trim(uword, n: int) -> PermMatrix:
    """Drop the last ``n - 1`` columns and reduce each row."""
    U = as_matrix(uword)
    keep = U.m - (n - 1)
    return PermMatrix(tuple(reduce_word(r[:keep]) for r in U.rows))


def greedy_ucycle(d: int, n: int) -> PermMatrix:
    """The greedy u-cycle ``U_{d;n}`` with ``(n!)^(d-1)`` columns."""
    return greedy_uword(d, n).final_ucycle


def termination_window(trace: GreedyTrace) -> ReducedWindow:
    """Reduced form of the last ``n`` columns of the final u-word."""
    return ReducedWindow(trace.steps[-1].window)


def complement_row(U, row: int) -> PermMatrix:
    """Replace entry ``v`` of row ``row`` (1-based) by ``m + 1 - v``."""
    U = as_matrix(U)
    if not 1 <= row <= U.depth:
        raise InvalidInput(f"row {row} not in 1..{U.depth}")
    m = U.m
    target = U.rows[row - 1]
    if sorted(target) != list(range(1, m + 1)):
        raise InvalidInput(f"row {row} is not a permutation of 1..{m}")
    rows = list(U.rows)
    rows[row - 1] = tuple(m + 1 - v for v in target)
    return PermMatrix(tuple(rows))


def complement_family(U) -> list[PermMatrix]:
    """All ``2^(d-1)`` row-subset complements of ``U``, identity first.

    Member ``s`` complements the rows whose bit is set in ``s`` (row 1 is
    the least significant bit).
    """
    U = as_matrix(U)
    out = []
    for mask in range(2**U.depth):
        V = U
        for r in range(U.depth):
            if mask >> r & 1:
                V = complement_row(V, r + 1)
        out.append(V)
    return out
