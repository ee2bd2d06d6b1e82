"""Greedy words for set partitions.

A word over ``1, 2, ...`` of length ``n`` encodes the partition of
``{1..n}`` whose blocks are the positions sharing a letter. Windows are
compared by their restricted growth string (RGS).
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from itertools import product
from typing import Sequence

from .errors import InvalidInput

log = logging.getLogger(__name__)

SEARCH_LIMIT = 7


def partition_pattern(w: Sequence[int]) -> tuple[int, ...]:
    """Restricted growth string of ``w``: blocks labelled by first appearance.

    >>> partition_pattern((2, 7, 2, 5, 4, 5, 5, 2))
    (1, 2, 1, 3, 4, 3, 3, 1)
    """
    labels = {}
    return tuple(labels.setdefault(x, len(labels) + 1) for x in w)


def bell_numbers(n: int) -> list[int]:
    """``[B_0, ..., B_n]`` from the Bell triangle."""
    out = [1]
    row = [1]
    for _ in range(n):
        out.append(row[-1])
        new = [row[-1]]
        for x in row:
            new.append(new[-1] + x)
        row = new
    return out[: n + 1]


def bell(n: int) -> int:
    return bell_numbers(n)[n]


@dataclass(frozen=True)
class PartitionRun:
    """Outcome of one greedy run from a fixed start."""

    n: int
    start: tuple[int, ...]
    word: tuple[int, ...]
    covered: int
    total: int

    @property
    def complete(self) -> bool:
        return self.covered == self.total

    @property
    def closed(self) -> bool:
        """True when the word ends with its own start."""
        k = self.n - 1
        if not self.complete:
            return False
        return k == 0 or self.word[len(self.word) - k:] == self.start


def greedy_partition_uword(n: int, start: Sequence[int]) -> PartitionRun:
    """Append the smallest letter that keeps every window's partition new.

    Letters above ``M + 1`` (``M`` the largest letter so far) behave like
    ``M + 1`` in every window, so only ``1..M+1`` are tried. A stall is
    reported through ``covered < total``, not raised.
    """
    start = tuple(int(x) for x in start)
    if n < 1:
        raise InvalidInput("n must be positive")
    if len(start) != n - 1 or any(x < 1 for x in start):
        raise InvalidInput(f"start must be {n - 1} positive letters")
    total = bell(n)
    word = list(start)
    top = max(word, default=0)
    seen = set()
    while True:
        tail = word[len(word) - n + 1:] if n > 1 else []
        labels = {}
        for x in tail:
            labels.setdefault(x, len(labels) + 1)
        base = tuple(labels[x] for x in tail)
        fresh = len(labels) + 1
        tried_fresh = False
        for x in range(1, top + 2):
            label = labels.get(x)
            if label is None:
                if tried_fresh:
                    continue
                tried_fresh = True
                label = fresh
            key = base + (label,)
            if key not in seen:
                seen.add(key)
                word.append(x)
                top = max(top, x)
                break
        else:
            break
    return PartitionRun(n, start, tuple(word), len(seen), total)


def _cyclic_distinct(word: Sequence[int], n: int, total: int) -> bool:
    L = len(word)
    if L != total:
        return False
    pats = {partition_pattern([word[(i + j) % L] for j in range(n)]) for i in range(L)}
    return len(pats) == total


@dataclass(frozen=True)
class PartitionCycleResult:
    """Outcome of turning a greedy u-word into a u-cycle.

    ``status`` is ``"ok"`` (the u-word closes on its start, so dropping the
    last ``n - 1`` letters gives a u-cycle), ``"stalled"`` (no u-word),
    ``"not-closed"`` (u-word found but it does not end with its start) or
    ``"not-cyclic"`` (neither closed nor universal after trimming).
    ``trimmed_universal`` records the plain trim-and-check verdict.
    """

    run: PartitionRun
    status: str
    ucycle: tuple[int, ...] | None
    trimmed_universal: bool

    @property
    def ok(self) -> bool:
        return self.status == "ok"


def greedy_partition_ucycle(n: int, start: Sequence[int]) -> PartitionCycleResult:
    run = greedy_partition_uword(n, start)
    if not run.complete:
        return PartitionCycleResult(run, "stalled", None, False)
    trimmed = run.word[: len(run.word) - (n - 1)]
    universal = _cyclic_distinct(trimmed, n, run.total)
    if run.closed:
        return PartitionCycleResult(run, "ok", trimmed, universal)
    return PartitionCycleResult(run, "not-closed" if universal else "not-cyclic", None, universal)


@dataclass(frozen=True)
class SearchResult:
    n: int
    mode: str
    alphabet_max: int
    starts: list[tuple[int, ...]]
    # u-cycle mode only: starts whose trimmed u-word is cyclic-universal
    # without closing on the start
    trimmed_only: list[tuple[int, ...]]

    @property
    def count(self) -> int:
        return len(self.starts)


def default_alphabet(n: int, mode: str) -> int:
    """Start alphabet ``1..a`` that reproduces the published start counts."""
    return n - 1 if mode == "uword" else n


def _judge(start, n, mode):
    if mode == "uword":
        return greedy_partition_uword(n, start).complete, False
    res = greedy_partition_ucycle(n, start)
    return res.ok, res.status == "not-closed"


def search_starts(
    n: int,
    mode: str = "uword",
    alphabet_max: int | None = None,
    allow_heavy: bool = False,
    jobs: int = 1,
) -> SearchResult:
    """Try every start in ``{1..alphabet_max}^(n-1)`` and keep the successful ones.

    Successes are listed in lexicographic order. ``n`` above
    :data:`SEARCH_LIMIT` is refused unless ``allow_heavy`` is set.
    """
    if mode not in ("uword", "ucycle"):
        raise InvalidInput(f"unknown mode {mode!r}")
    if n < 1:
        raise InvalidInput("n must be positive")
    if n > SEARCH_LIMIT and not allow_heavy:
        a = alphabet_max or default_alphabet(n, mode)
        raise InvalidInput(
            f"search for n={n} would run {a ** (n - 1)} greedy runs of length ~{bell(n)}; "
            "pass allow_heavy to run it anyway"
        )
    a = alphabet_max or default_alphabet(n, mode)
    starts = list(product(range(1, a + 1), repeat=n - 1))
    judge = partial(_judge, n=n, mode=mode)
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            verdicts = list(pool.map(judge, starts, chunksize=256))
    else:
        verdicts = list(map(judge, starts))
    good = sorted(s for s, (ok, _) in zip(starts, verdicts) if ok)
    loose = sorted(s for s, (_, alt) in zip(starts, verdicts) if alt)
    log.info("n=%d mode=%s: %d of %d starts succeed", n, mode, len(good), len(starts))
    return SearchResult(n, mode, a, good, loose)


@dataclass(frozen=True)
class AlternatingRun:
    word: tuple[int, ...]
    covered: int
    total: int
    ucycle: tuple[int, ...] | None

    @property
    def stalled(self) -> bool:
        return self.ucycle is None


def alternating_greedy_words(n: int, k: int, start: Sequence[int] = ()) -> AlternatingRun:
    """Extend alternately with the smallest and the largest unused-factor letter.

    Words are over ``0..k-1``. The run stops when no letter yields a new
    length-``n`` factor; it succeeds if all ``k**n`` words were covered and
    dropping the last ``n - 1`` letters leaves a cyclic de Bruijn word.
    """
    word = [int(x) for x in start]
    if n < 1 or k < 1 or len(word) != n - 1 or any(not 0 <= x < k for x in word):
        raise InvalidInput(f"start must be {n - 1} letters from 0..{k - 1}")
    seen = set()
    smallest = True
    while True:
        tail = tuple(word[len(word) - n + 1:]) if n > 1 else ()
        order = range(k) if smallest else range(k - 1, -1, -1)
        for x in order:
            if tail + (x,) not in seen:
                seen.add(tail + (x,))
                word.append(x)
                break
        else:
            break
        smallest = not smallest
    total = k**n
    ucycle = None
    if len(seen) == total:
        trimmed = tuple(word[: len(word) - (n - 1)])
        L = len(trimmed)
        cyc = {tuple(trimmed[(i + j) % L] for j in range(n)) for i in range(L)}
        if len(cyc) == total == L:
            ucycle = trimmed
    return AlternatingRun(tuple(word), len(seen), total, ucycle)
