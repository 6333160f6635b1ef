import numpy as np
import pytest
from hypothesis import given, strategies as st

from covbound._space import all_vectors, distances_to
from covbound.codes import Code
from covbound.covering import greedy_covering_search
from covbound.exceptions import BadParams, RadiusTooLarge
from covbound.families import hamming_code, repetition
from covbound.listdecode import ball_counts, max_list_size, verify_covering_bound


def brute_counts(code, radius):
    pts = all_vectors(code.q, code.n)
    return (distances_to(pts, code.codewords(), code.q) <= radius).sum(axis=1)


def random_code(q, n, size, seed):
    rng = np.random.default_rng(seed)
    words = np.unique(rng.integers(0, q, (size, n)), axis=0)
    return Code(q, words)


def test_perfect_code_has_unit_lists():
    prof = max_list_size(hamming_code(2, 3), 1)
    assert prof.max_count == 1 and prof.decodable(1)
    assert prof.witness_center == (0,) * 7


def test_hamming_list_at_radius_two():
    # e_1 is within 2 of 0 and of the three weight-3 words through coordinate 1
    prof = max_list_size(hamming_code(2, 3), 2)
    assert prof.max_count == 4
    assert not prof.decodable(3)


def test_repetition_lists():
    assert max_list_size(repetition(3, 4), 2).max_count == 2
    assert max_list_size(repetition(3, 4), 3).max_count == 3


def test_negative_radius():
    with pytest.raises(BadParams):
        ball_counts(hamming_code(2, 3), -1)


@given(st.sampled_from([2, 3]), st.integers(2, 6), st.integers(2, 20), st.integers(0, 4),
       st.integers(0, 2 ** 32 - 1))
def test_counts_match_bruteforce(q, n, size, radius, seed):
    code = random_code(q, n, size, seed)
    radius = min(radius, n)
    assert np.array_equal(ball_counts(code, radius), brute_counts(code, radius))
    prof = max_list_size(code, radius)
    counts = brute_counts(code, radius)
    first = int(np.nonzero(counts == counts.max())[0][0])
    assert prof.witness_center == tuple(all_vectors(q, n)[first])


@given(st.integers(4, 9), st.integers(1, 2), st.integers(2, 40), st.integers(0, 2 ** 32 - 1))
def test_covering_bound_holds(n, radius, size, seed):
    cover = greedy_covering_search(2, n, radius, seed=seed % 7)
    code = random_code(2, n, size, seed)
    verdict = verify_covering_bound(code, cover, radius)
    assert verdict.holds
    assert verdict.code_size <= verdict.list_size * verdict.cover_size


def test_cover_radius_must_fit():
    with pytest.raises(RadiusTooLarge):
        verify_covering_bound(hamming_code(2, 3).to_code(), hamming_code(2, 3), 0)
