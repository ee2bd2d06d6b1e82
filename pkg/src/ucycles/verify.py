"""Exhaustive exactly-once coverage checks.

Universes are enumerated by brute force (``itertools``) and windows are
canonicalised with helpers local to this module, so a verdict never
depends on the generators being checked.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import permutations, product
from math import factorial, prod
from typing import Hashable, Iterable, Sequence

import numpy as np

from .debruijn import MatrixUCycleSpec
from .errors import InvalidInput

REPORT_CAP = 20


@dataclass
class CoverageReport:
    """Result of an exactly-once check.

    ``duplicates`` maps covered objects to the window start positions that
    hit them more than once; ``unexpected`` lists windows that are not in the
    universe at all. Both lists, and ``missing``, are capped at
    :data:`REPORT_CAP` entries; the ``n_*`` fields hold full counts.
    """

    total_expected: int
    covered: int
    duplicates: list[tuple[Hashable, list[int]]] = field(default_factory=list)
    missing: list[Hashable] = field(default_factory=list)
    unexpected: list[tuple[Hashable, int]] = field(default_factory=list)
    n_duplicates: int = 0
    n_missing: int = 0
    n_unexpected: int = 0

    @property
    def verdict(self) -> bool:
        return (
            self.n_duplicates == 0
            and self.n_missing == 0
            and self.n_unexpected == 0
            and self.covered == self.total_expected
        )

    def __bool__(self):
        return self.verdict

    def summary(self) -> str:
        state = "verified" if self.verdict else "FAILED"
        return (
            f"{state}: covered {self.covered}/{self.total_expected}, "
            f"{self.n_duplicates} duplicated, {self.n_missing} missing, {self.n_unexpected} unexpected"
        )


def _report(universe: Iterable[Hashable], hits: Iterable[tuple[int, Hashable]]) -> CoverageReport:
    expected = set(universe)
    where = defaultdict(list)
    unexpected = []
    for pos, obj in hits:
        if obj in expected:
            where[obj].append(pos)
        else:
            unexpected.append((obj, pos))
    dups = sorted(((o, p) for o, p in where.items() if len(p) > 1), key=lambda t: t[1][0])
    missing = sorted(expected - where.keys(), key=repr)
    return CoverageReport(
        total_expected=len(expected),
        covered=len(where),
        duplicates=dups[:REPORT_CAP],
        missing=missing[:REPORT_CAP],
        unexpected=unexpected[:REPORT_CAP],
        n_duplicates=len(dups),
        n_missing=len(missing),
        n_unexpected=len(unexpected),
    )


def _starts(length: int, n: int, cyclic: bool) -> range:
    return range(length if cyclic else max(length - n + 1, 0))


def verify_word_ucycle(w: Sequence, S: Iterable[Sequence], cyclic: bool = True) -> CoverageReport:
    """Check that the length-``n`` factors of ``w`` are exactly the words of ``S``."""
    S = [tuple(s) for s in S]
    lengths = {len(s) for s in S}
    if len(lengths) > 1:
        raise InvalidInput("all words of S must have the same length")
    n = lengths.pop() if lengths else 0
    w = tuple(w)
    L = len(w)
    hits = ((i, tuple(w[(i + j) % L] for j in range(n))) for i in _starts(L, n, cyclic))
    return _report(S, hits)


def verify_debruijn(w: Sequence[int], n: int, k: int, cyclic: bool = True) -> CoverageReport:
    return verify_word_ucycle(w, product(range(k), repeat=n), cyclic)


def _order_type(values: Sequence[int]):
    # local rank computation; a tagged tuple marks a window with repeated values
    if len(set(values)) != len(values):
        return ("repeated",) + tuple(values)
    srt = sorted(values)
    return tuple(srt.index(v) + 1 for v in values)


def verify_multiperm_ucycle(U, d: int, n: int, cyclic: bool = True) -> CoverageReport:
    """Every d-dimensional n-permutation occurs exactly once as n consecutive columns."""
    rows = [tuple(r) for r in (U.rows if hasattr(U, "rows") else U)]
    if len(rows) != d - 1:
        raise InvalidInput(f"expected {d - 1} rows, got {len(rows)}")
    L = len(rows[0]) if rows else 0
    if any(len(r) != L for r in rows):
        raise InvalidInput("rows have different lengths")
    universe = product(permutations(range(1, n + 1)), repeat=d - 1)

    def hits():
        for i in _starts(L, n, cyclic):
            idx = [(i + j) % L for j in range(n)]
            yield i, tuple(_order_type([r[t] for t in idx]) for r in rows)

    return _report(universe, hits())


def _rgs(w: Sequence[int]) -> tuple[int, ...]:
    first = []
    for x in w:
        if x not in first:
            first.append(x)
    return tuple(first.index(x) + 1 for x in w)


def restricted_growth_strings(n: int) -> list[tuple[int, ...]]:
    """All RGS of length ``n`` by brute-force filtering of ``{1..n}^n``."""
    out = []
    for w in product(range(1, n + 1), repeat=n):
        if _rgs(w) == w:
            out.append(w)
    return out


def verify_partition_ucycle(w: Sequence[int], n: int, cyclic: bool = True) -> CoverageReport:
    """Every set partition of an n-set occurs exactly once as an equality pattern."""
    w = tuple(w)
    L = len(w)
    hits = ((i, _rgs([w[(i + j) % L] for j in range(n)])) for i in _starts(L, n, cyclic))
    return _report(restricted_growth_strings(n), hits)


def verify_matrix_ucycle(slices: Sequence, spec: MatrixUCycleSpec, cyclic: bool = True) -> CoverageReport:
    """Every ``n_1 x ... x n_d`` matrix over ``1..k`` occurs once as ``n_d`` consecutive slices."""
    arrs = [np.asarray(s) for s in slices]
    shape = spec.slice_shape
    for a in arrs:
        if a.shape != shape:
            raise InvalidInput(f"slice shape {a.shape} does not match {shape}")
    nd = spec.dims[-1]
    L = len(arrs)
    size = prod(shape)
    universe = product(range(1, spec.k + 1), repeat=size * nd)
    flat = [tuple(int(x) for x in a.reshape(-1)) for a in arrs]
    # a matrix is identified by its slices in order along the last axis
    hits = ((i, sum((flat[(i + j) % L] for j in range(nd)), ())) for i in _starts(L, nd, cyclic))
    return _report(universe, hits)


def universe_sizes(d: int = 2, n: int = 1, k: int = 1, dims=(1,)) -> dict[str, int]:
    """Closed-form universe sizes used to cross-check enumerations."""
    from .setpartition import bell

    return {
        "words": k**n,
        "multiperms": factorial(n) ** (d - 1),
        "partitions": bell(n),
        "matrices": (k ** prod(dims[:-1])) ** dims[-1],
    }
