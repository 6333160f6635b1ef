import numpy as np
import pytest
from hypothesis import given, strategies as st

from covbound._space import ball_volume
from covbound.codes import Code, LinearCode
from covbound.config import budget_limit
from covbound.covering import (K_TABLE, covering_radius, delsarte_bound, distance_to_code,
                               greedy_covering_search, min_feasible_length, table_lookup)
from covbound.exceptions import BadParams, BudgetExceeded, MethodInapplicable, NotFound
from covbound.families import golay_ternary, hamming_code, reed_muller1, reed_solomon


def random_linear(q, k, n, seed):
    rng = np.random.default_rng(seed)
    while True:
        try:
            return LinearCode(q, rng.integers(0, q, (k, n)))
        except BadParams:
            continue


@pytest.mark.parametrize("code, radius", [
    (hamming_code(2, 3), 1),
    (hamming_code(3, 2), 1),
    (golay_ternary(), 2),
    (reed_solomon(5, 5, 2), 3),
    (reed_muller1(3), 2),
])
def test_radius_routes_agree(code, radius):
    coset = covering_radius(code, method="coset_leader")
    brute = covering_radius(code.to_code(), method="exhaustive")
    assert coset.radius == brute.radius == radius
    assert coset.exact and brute.exact
    assert distance_to_code([coset.witness], code)[0] == radius


@given(st.sampled_from([2, 3]), st.integers(1, 4), st.integers(3, 7), st.integers(0, 2 ** 32 - 1))
def test_radius_linear_matches_exhaustive(q, k, n, seed):
    c = random_linear(q, min(k, n), n, seed)
    assert covering_radius(c).radius == covering_radius(c.to_code(), method="exhaustive").radius


@given(st.sampled_from([2, 3]), st.integers(1, 4), st.integers(3, 7), st.integers(0, 2 ** 32 - 1))
def test_delsarte_bounds_radius(q, k, n, seed):
    c = random_linear(q, min(k, n - 1), n, seed)
    assert covering_radius(c).radius <= delsarte_bound(c)


def test_coset_leader_needs_linear():
    with pytest.raises(MethodInapplicable):
        covering_radius(Code(2, [[0, 0, 0], [1, 1, 1]]), method="coset_leader")


def test_budget_enforced_and_estimate_flagged():
    c = hamming_code(2, 4)
    with budget_limit(100):
        with pytest.raises(BudgetExceeded):
            covering_radius(c)
    est = covering_radius(c.to_code(), budget=200_000, allow_estimate=True, samples=64)
    assert not est.exact and est.radius <= 1


@given(st.integers(3, 8), st.integers(1, 3), st.integers(0, 50))
def test_greedy_covers_space(n, R, seed):
    R = min(R, n - 1)
    code = greedy_covering_search(2, n, R, seed=seed, restarts=1)
    assert covering_radius(code, method="exhaustive").radius <= R
    assert code.size >= -(-2 ** n // ball_volume(2, n, R))


def test_greedy_is_deterministic():
    a = greedy_covering_search(3, 4, 1, seed=5, restarts=3)
    b = greedy_covering_search(3, 4, 1, seed=5, restarts=3)
    assert np.array_equal(a.words, b.words)


def test_table_lookup():
    assert table_lookup("K", (2, 15, 3)).value == 112
    assert table_lookup("K", (2, 16, 3)).exact is False
    assert len(K_TABLE) == 4
    with pytest.raises(NotFound):
        table_lookup("K", (2, 10, 1))


def test_min_feasible_length_sphere_covering():
    # 2^r >= 1 + n + C(n,2) needed for a radius-2 [n, n-r] cover
    assert min_feasible_length(2, 6, 2) >= 1
