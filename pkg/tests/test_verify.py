import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from ucycles.debruijn import MatrixUCycleSpec, martin, matrix_ucycle
from ucycles.errors import InvalidInput
from ucycles.greedy import greedy_ucycle
from ucycles.setpartition import bell
from ucycles.verify import (
    REPORT_CAP,
    restricted_growth_strings,
    universe_sizes,
    verify_debruijn,
    verify_matrix_ucycle,
    verify_multiperm_ucycle,
    verify_partition_ucycle,
    verify_word_ucycle,
)

import golden
from golden import digits


def test_debruijn_ok():
    rep = verify_debruijn(digits("001122021"), 2, 3)
    assert rep.verdict and rep.covered == 9 and bool(rep)
    assert rep.summary().startswith("verified")


def test_debruijn_word_form():
    assert verify_debruijn(digits("0011220210"), 2, 3, cyclic=False).verdict
    assert not verify_debruijn(digits("001122021"), 2, 3, cyclic=False).verdict


def test_detects_duplicates_and_missing():
    rep = verify_debruijn((0, 0, 0, 1), 2, 2)
    assert not rep.verdict
    assert rep.n_duplicates == 1 and rep.duplicates[0] == ((0, 0), [0, 1])
    assert rep.missing == [(1, 1)]
    assert "FAILED" in rep.summary()


def test_detects_unexpected():
    rep = verify_debruijn((0, 1, 2, 0), 1, 2)
    assert rep.n_unexpected == 1 and rep.unexpected == [((2,), 2)]
    assert not rep.verdict


def test_report_caps():
    rep = verify_debruijn([0] * 50, 4, 3)
    assert rep.n_missing == 80 and len(rep.missing) == REPORT_CAP


def test_word_ucycle_generic():
    assert verify_word_ucycle("abc", ["ab", "bc", "ca"]).verdict
    with pytest.raises(InvalidInput):
        verify_word_ucycle("abc", ["a", "bc"])


@pytest.mark.parametrize("d, n", [(2, 3), (2, 4), (3, 2), (3, 3)])
def test_greedy_cycles_verify(d, n):
    assert verify_multiperm_ucycle(greedy_ucycle(d, n), d, n).verdict


def test_multiperm_detects_repeated_values():
    rep = verify_multiperm_ucycle([(1, 1, 2)], 2, 2)
    assert rep.n_unexpected > 0 and not rep.verdict


def test_multiperm_row_checks():
    with pytest.raises(InvalidInput):
        verify_multiperm_ucycle([(1, 2, 3)], 3, 2)
    with pytest.raises(InvalidInput):
        verify_multiperm_ucycle([(1, 2, 3), (1, 2)], 3, 2)


def test_corrupted_ucycle_fails():
    rows = [list(golden.U4)]
    rows[0][0], rows[0][1] = rows[0][1], rows[0][0]
    assert not verify_multiperm_ucycle(rows, 2, 4).verdict


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 5), (4, 15), (5, 52), (6, 203)])
def test_rgs_counts(n, count):
    assert len(restricted_growth_strings(n)) == count == bell(n)


def test_partition_displayed_cycle():
    assert verify_partition_ucycle(digits(golden.PARTITION_6_CYCLE), 6).verdict


def test_partition_failure():
    rep = verify_partition_ucycle(digits("1234"), 4)
    assert not rep.verdict and rep.n_missing == 14


def test_matrix_ucycle_round_trip():
    spec = MatrixUCycleSpec((2, 2), 2)
    assert verify_matrix_ucycle(matrix_ucycle(spec), spec).verdict


def test_matrix_shape_mismatch():
    spec = MatrixUCycleSpec((2, 2), 2)
    with pytest.raises(InvalidInput):
        verify_matrix_ucycle([np.zeros((3,))], spec)


def test_universe_sizes():
    sizes = universe_sizes(d=3, n=3, k=2, dims=(2, 3))
    assert sizes == {"words": 8, "multiperms": 36, "partitions": 5, "matrices": 64}


@given(st.integers(1, 3), st.integers(2, 3), st.randoms(use_true_random=False))
def test_rotation_preserves_verdict(n, k, rnd):
    w = martin(n, k)
    r = rnd.randrange(len(w))
    assert verify_debruijn(w[r:] + w[:r], n, k).verdict


@given(st.lists(st.integers(0, 1), min_size=1, max_size=12))
def test_verdict_matches_brute_definition(w):
    n = 2
    windows = [tuple(w[(i + j) % len(w)] for j in range(n)) for i in range(len(w))]
    expected = sorted(windows) == sorted(itertools.product(range(2), repeat=n))
    assert verify_debruijn(w, n, 2).verdict == expected
