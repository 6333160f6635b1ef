from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, strategies as st

from covbound.codes import Code, LinearCode
from covbound.exceptions import BadParams, DegenerateCoordinate, MissingParam
from covbound.families import reed_solomon
from covbound.lrc import (classify_optimal, locality_profile, lrc_bounds, measured_locality,
                          punctured_distance, verify_r_delta)

REPLICATION = LinearCode(2, [[1, 1, 0, 0], [0, 0, 1, 1]])


def brute_locality(code):
    # smallest r such that every coordinate is a function of some r others
    words = code.codewords()
    n = code.n
    worst = 0
    for j in range(n):
        if not words[:, j].any():
            continue
        rest = [i for i in range(n) if i != j]
        found = None
        for size in range(0, n):
            for S in combinations(rest, size):
                table = {}
                if all(table.setdefault(tuple(w[list(S)]), w[j]) == w[j] for w in words):
                    found = size
                    break
            if found is not None:
                break
        if found is None:
            return None
        worst = max(worst, found)
    return worst


def random_linear(q, k, n, seed):
    rng = np.random.default_rng(seed)
    for _ in range(50):
        try:
            return LinearCode(q, rng.integers(0, q, (k, n)))
        except BadParams:
            continue
    return LinearCode(q, np.eye(k, n, dtype=np.int64))


@pytest.mark.parametrize("code, r", [
    (REPLICATION, 1),
    (LinearCode(2, [[1, 0, 1], [0, 1, 1]]), 2),
    (reed_solomon(5, 4, 2), 2),
])
def test_locality_examples(code, r):
    prof = locality_profile(code)
    assert prof.r == r == brute_locality(code)
    for j, cert in enumerate(prof.per_coordinate):
        assert j in cert.S and len(cert.helpers) <= r


def test_r_delta_examples():
    pairs = [[0, 1], [0, 1], [2, 3], [2, 3]]
    assert verify_r_delta(REPLICATION, 1, 2, pairs).ok
    bad = verify_r_delta(REPLICATION, 1, 3)
    assert not bad.ok and bad.witness == 0
    tight = verify_r_delta(REPLICATION, 1, 2, [[0, 1, 2], [0, 1, 2], [2, 3], [2, 3]])
    assert not tight.ok and tight.reason == "cardinality"


def test_certificates_by_membership():
    assert verify_r_delta(REPLICATION, 1, 2, [[0, 1], [2, 3]]).ok
    missing = verify_r_delta(REPLICATION, 1, 2, [[0, 1]])
    assert not missing.ok and missing.witness == 2


def test_degenerate_coordinates():
    code = LinearCode(2, [[1, 1, 0, 0, 0], [0, 0, 1, 1, 0]])
    prof = locality_profile(code)
    assert prof.degenerate == [4] and prof.r == 1
    with pytest.raises(DegenerateCoordinate):
        locality_profile(code, strict=True)
    opt = classify_optimal(code)
    assert (opt.optimal, opt.defect, opt.ceiling) == (False, 1, 3)


def test_classify_optimal():
    assert classify_optimal(REPLICATION).optimal
    rs = classify_optimal(reed_solomon(5, 4, 2))
    assert rs.optimal and rs.r == 2 and rs.ceiling == 3


def test_punctured_distance():
    assert punctured_distance(REPLICATION, [0, 1]) == 2
    assert punctured_distance(LinearCode(2, [[1, 1, 0]]), [2]) is None


def test_nonlinear_code_rejected():
    with pytest.raises(BadParams):
        locality_profile(Code(2, [[0, 0, 0], [1, 1, 0], [0, 1, 1], [1, 1, 1]]))


def test_lrc_bounds():
    res = {r.name: r for r in lrc_bounds(4, 2, 1)}
    assert int(res["lrc_singleton"].value) == 2
    res = {r.name: r for r in lrc_bounds(7, 3, 3)}
    assert int(res["lrc_singleton"].value) == 5
    res = {r.name: r for r in lrc_bounds(10, 2, 1, q=3, R=2)}
    assert int(res["lrc_length_block"].value) == 80
    assert not res["lrc_length_constant"].applicable
    with pytest.raises(MissingParam):
        lrc_bounds(10, 2, 1, R=2)


@given(st.integers(2, 12), st.integers(1, 8), st.integers(1, 8))
def test_r_delta_ceiling_matches_plain_at_delta_two(n, k, r):
    if k > n:
        return
    res = {x.name: x for x in lrc_bounds(n, k, r)}
    a, b = res["lrc_singleton"], res["r_delta_singleton"]
    if a.applicable and b.applicable:
        assert int(a.value) == int(b.value)


@given(st.sampled_from([2, 3]), st.integers(1, 3), st.integers(3, 7), st.integers(0, 2 ** 32 - 1))
def test_profile_matches_bruteforce(q, k, n, seed):
    code = random_linear(q, min(k, n - 1), n, seed)
    assert locality_profile(code).r == brute_locality(code)


@given(st.sampled_from([2, 3]), st.integers(1, 3), st.integers(3, 7), st.integers(0, 2 ** 32 - 1))
def test_delta_two_agrees_with_plain_locality(q, k, n, seed):
    code = random_linear(q, min(k, n - 1), n, seed)
    plain = locality_profile(code).r
    via = next((r for r in range(n + 1) if verify_r_delta(code, r, 2).ok), None)
    assert via == plain
    if plain is not None:
        assert measured_locality(code, 2) == plain
