"""Order-isomorphism primitives for words and row-matrices.

All values exposed by this module are 1-based. A matrix is stored as a
tuple of rows; the implicit top row ``1 2 ... m`` of a multi-dimensional
permutation is never stored.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterable, Sequence

from .errors import BudgetExceeded, InvalidInput

VALUE_LIMIT = 2**32 - 1

Row = tuple[int, ...]


def reduce_word(w: Sequence[int]) -> Row:
    """Return the permutation of ``1..len(w)`` order-isomorphic to ``w``.

    >>> reduce_word((4, 2, 8, 5))
    (2, 1, 4, 3)
    """
    order = sorted(range(len(w)), key=w.__getitem__)
    out = [0] * len(w)
    for rank, pos in enumerate(order, 1):
        out[pos] = rank
    for a, b in zip(order, order[1:]):
        if w[a] == w[b]:
            raise InvalidInput(f"duplicate letter {w[a]} in {tuple(w)}")
    return tuple(out)


def lehmer_rank(perm: Sequence[int]) -> int:
    """Lexicographic rank (0-based) of a permutation of ``1..len(perm)``."""
    n = len(perm)
    rank = 0
    for i, x in enumerate(perm):
        smaller = sum(1 for y in perm[i + 1:] if y < x)
        rank += smaller * factorial(n - 1 - i)
    return rank


def window_key(rows: Sequence[Sequence[int]]) -> int:
    """Collision-free integer key for a tuple of reduced rows.

    Rows are ranked by their Lehmer code and packed in mixed radix
    ``w!``; the row count and width occupy the low 64 bits, so keys of
    windows with different shapes never coincide.
    """
    width = len(rows[0]) if rows else 0
    radix = factorial(width)
    packed = 0
    for row in rows:
        packed = packed * radix + lehmer_rank(row)
    return (packed << 64) | (len(rows) << 32) | width


@dataclass(frozen=True)
class ReducedWindow:
    """Row-wise reduced form of a block of consecutive columns."""

    reduced_rows: tuple[Row, ...]

    @property
    def key(self) -> int:
        return window_key(self.reduced_rows)

    @property
    def width(self) -> int:
        return len(self.reduced_rows[0]) if self.reduced_rows else 0

    def __str__(self):
        return "\n".join(" ".join(map(str, r)) for r in self.reduced_rows)


@dataclass(frozen=True)
class PermMatrix:
    """A matrix with ``d - 1`` rows of pairwise-distinct positive integers."""

    rows: tuple[Row, ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise InvalidInput("a PermMatrix needs at least one row")
        m = len(rows[0])
        if any(len(r) != m for r in rows):
            raise InvalidInput("rows have different lengths")

    @classmethod
    def of(cls, rows: Iterable[Iterable[int]]) -> "PermMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def empty(cls, depth: int) -> "PermMatrix":
        return cls(tuple(() for _ in range(depth)))

    @classmethod
    def identity(cls, depth: int, m: int) -> "PermMatrix":
        return cls(tuple(tuple(range(1, m + 1)) for _ in range(depth)))

    @property
    def depth(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        return len(self.rows[0])

    @property
    def d(self) -> int:
        return self.depth + 1

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        return list(zip(*self.rows)) if self.m else []

    def check(self) -> None:
        """Raise :class:`InvalidInput` unless rows and columns are distinct."""
        for i, r in enumerate(self.rows, 1):
            if len(set(r)) != len(r):
                raise InvalidInput(f"row {i} has repeated entries")
            if r and (min(r) < 1 or max(r) > VALUE_LIMIT):
                raise InvalidInput(f"row {i} has entries outside 1..{VALUE_LIMIT}")
        cols = self.columns()
        if len(set(cols)) != len(cols):
            raise InvalidInput("columns are not pairwise distinct")

    def select(self, start: int, stop: int) -> "PermMatrix":
        return PermMatrix(tuple(r[start:stop] for r in self.rows))

    def __str__(self):
        return "\n".join(" ".join(map(str, r)) for r in self.rows)


def as_matrix(M) -> PermMatrix:
    if isinstance(M, PermMatrix):
        return M
    return PermMatrix.of(M)


def reduce_matrix(M) -> ReducedWindow:
    """Reduce every row of ``M`` independently."""
    M = as_matrix(M)
    return ReducedWindow(tuple(reduce_word(r) for r in M.rows))


def windows(M, width: int, cyclic: bool = False) -> list[ReducedWindow]:
    """Reduced forms of all ``width``-column blocks of ``M``.

    Linear mode yields ``m - width + 1`` windows, cyclic mode yields ``m``
    windows, the last ``width - 1`` of which wrap around to the start.
    """
    M = as_matrix(M)
    m = M.m
    if width < 1 or width > m:
        raise InvalidInput(f"window width {width} not in 1..{m}")
    count = m if cyclic else m - width + 1
    out = []
    for s in range(count):
        idx = [(s + t) % m for t in range(width)]
        out.append(ReducedWindow(tuple(reduce_word([r[i] for i in idx]) for r in M.rows)))
    return out


def check_budget(columns: int, what: str = "instance") -> None:
    if columns > VALUE_LIMIT:
        raise BudgetExceeded(f"{what} needs {columns} values, above the limit {VALUE_LIMIT}")
