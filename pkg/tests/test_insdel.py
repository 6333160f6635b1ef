from fractions import Fraction
from functools import lru_cache

import numpy as np
import pytest
from hypothesis import given, strategies as st

from covbound.codes import Code, LinearCode, min_distance
from covbound.exceptions import BadParams, TrivialCode
from covbound.families import hamming_code, repetition
from covbound.insdel import (closed_form_exponent, code_insdel_distance, has_all_ones,
                             insdel_distance, insdel_report, insdel_size_bounds, lcs_length,
                             lcs_lengths)

words = st.lists(st.integers(0, 2), min_size=0, max_size=8)


def edit_indel(a, b):
    # insertions and deletions only, by direct recursion
    @lru_cache(maxsize=None)
    def go(i, j):
        if i == len(a):
            return len(b) - j
        if j == len(b):
            return len(a) - i
        if a[i] == b[j]:
            return go(i + 1, j + 1)
        return 1 + min(go(i + 1, j), go(i, j + 1))
    return go(0, 0)


def test_lcs_examples():
    assert lcs_length("ABCBDAB", "BDCABA") == 4
    assert lcs_length([], [1, 2]) == 0
    assert insdel_distance([0, 1, 1, 0], [1, 1, 0, 0]) == 2


@given(words, words)
def test_insdel_matches_recursion(a, b):
    assert insdel_distance(a, b) == edit_indel(tuple(a), tuple(b))


@given(st.integers(1, 8), st.integers(1, 12), st.integers(0, 2 ** 32 - 1))
def test_batched_lcs_matches_scalar(n, P, seed):
    rng = np.random.default_rng(seed)
    a, b = rng.integers(0, 3, (P, n)), rng.integers(0, 3, (P, n))
    assert lcs_lengths(a, b).tolist() == [lcs_length(x, y) for x, y in zip(a, b)]


@given(words, words, words)
def test_metric_axioms(a, b, c):
    dab = insdel_distance(a, b)
    assert dab == insdel_distance(b, a)
    assert (dab == 0) == (a == b)
    assert dab <= insdel_distance(a, c) + insdel_distance(c, b)


@given(st.integers(1, 10), st.integers(0, 2 ** 32 - 1))
def test_insdel_at_most_twice_hamming(n, seed):
    rng = np.random.default_rng(seed)
    a, b = rng.integers(0, 3, n), rng.integers(0, 3, n)
    assert insdel_distance(a, b) <= 2 * int(np.count_nonzero(a != b))


def test_code_distance_and_trivial():
    assert code_insdel_distance(repetition(2, 5)) == 10
    with pytest.raises(TrivialCode):
        code_insdel_distance(Code(2, [[0, 1]]))


def test_all_ones_detection():
    assert has_all_ones(hamming_code(2, 3))
    assert not has_all_ones(LinearCode(2, [[1, 1, 0, 0]]))
    assert has_all_ones(Code(3, [[1, 1], [0, 2]]))


def test_report_gates():
    rep = insdel_report(hamming_code(2, 3))
    assert rep.code_insdel_distance == 2
    assert rep.half_singleton_ok is None and rep.improved_half_singleton_ok is None
    assert rep.direct_singleton_ok
    rep = insdel_report(LinearCode(2, [[1, 1, 1, 1, 1, 1]]))
    assert rep.code_insdel_distance == 12
    assert rep.half_singleton_ok is True
    assert rep.improved_half_singleton_ok is None


def test_report_explicit_code_k():
    rep = insdel_report(Code(2, [[0, 0, 0, 0], [1, 1, 0, 0], [0, 0, 1, 1]]))
    assert (rep.k, rep.k_exact) == (1, False)


@given(st.integers(4, 8), st.integers(1, 3), st.integers(0, 2 ** 32 - 1))
def test_half_singleton_random_linear(n, k, seed):
    rng = np.random.default_rng(seed)
    try:
        code = LinearCode(2, rng.integers(0, 2, (k, n)))
    except BadParams:
        return
    rep = insdel_report(code)
    assert rep.code_insdel_distance <= 2 * min_distance(code)
    if rep.code_insdel_distance >= 4:
        assert rep.half_singleton_ok
        if not rep.has_all_ones:
            assert rep.improved_half_singleton_ok


def test_closed_form_exponent():
    assert closed_form_exponent(14, 3, 10) == Fraction(13, 2)


def test_size_bounds_are_tagged():
    res = insdel_size_bounds(2, 14, 10, m=3)
    assert all(r.name.startswith("insdel_") for r in res)
    assert all(any("ceil(d_insdel/2) = 5" in a for a in r.assumptions) for r in res)
    hamming_wrap = next(r for r in res if r.name == "insdel_block_hamming")
    assert str(hamming_wrap.value) == "2^8"
