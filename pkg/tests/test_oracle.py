import pytest

from covbound import bounds as B
from covbound._space import ball_volume
from covbound.codes import min_distance
from covbound.covering import covering_radius, greedy_covering_search
from covbound.exceptions import BudgetExceeded
from covbound.families import hamming_code
from covbound.oracle import exact_A, exact_K, in_cap_grid, lexicode

# exact values from the branch-and-bound oracle, frozen
A_VALUES = {
    (2, 3, 3): 2, (2, 4, 3): 2, (2, 5, 3): 4, (2, 6, 3): 8, (2, 7, 3): 16, (2, 8, 3): 20,
    (2, 6, 4): 4, (2, 7, 4): 8, (2, 8, 4): 16, (2, 8, 5): 4, (2, 9, 5): 6,
    (3, 4, 3): 9, (3, 5, 3): 18, (3, 6, 4): 18, (4, 4, 3): 16, (5, 4, 3): 25,
    (2, 5, 1): 32, (3, 4, 2): 27,
}
K_VALUES = {
    (2, 3, 1): 2, (2, 4, 1): 4, (2, 5, 1): 7, (2, 7, 1): 16, (2, 7, 2): 7,
    (3, 3, 1): 5, (3, 4, 1): 9, (2, 6, 6): 1,
}


@pytest.mark.parametrize("cell, value", sorted(A_VALUES.items()))
def test_exact_A_frozen(cell, value):
    res = exact_A(*cell)
    assert res.value == value == res.witness.size
    if res.value >= 2:
        assert min_distance(res.witness, method="pairwise") >= cell[2]


@pytest.mark.parametrize("cell, value", sorted(K_VALUES.items()))
def test_exact_K_frozen(cell, value):
    q, n, R = cell
    res = exact_K(q, n, R)
    assert res.value == value == res.witness.size
    assert covering_radius(res.witness, method="exhaustive").radius <= R
    assert res.value >= -(-q ** n // ball_volume(q, n, R))
    assert res.value <= greedy_covering_search(q, n, R).size


def test_hamming_is_a_K_witness_size():
    assert exact_K(2, 7, 1).value == hamming_code(2, 3).size


def test_cap_is_enforced():
    with pytest.raises(BudgetExceeded):
        exact_A(2, 10, 3)
    with pytest.raises(BudgetExceeded):
        exact_K(4, 5, 1)
    assert exact_A(2, 10, 9, cap=1024).value == 2


def test_node_limit_is_enforced():
    with pytest.raises(BudgetExceeded):
        exact_A(2, 8, 3, node_limit=100)
    with pytest.raises(BudgetExceeded):
        exact_K(2, 6, 1, node_limit=5)


def test_lexicode_is_a_code():
    idx = lexicode(2, 7, 3)
    assert len(idx) == 16 and idx[0] == 0


@pytest.mark.parametrize("q, n", [(2, n) for n in range(3, 8)] + [(3, n) for n in range(3, 6)])
def test_ladder_sound_against_oracle(q, n):
    for d in range(1, n + 1):
        truth = exact_A(q, n, d).value
        for res in B.bound_ladder(B.CodeParams(q, n, d=d)):
            if res.applicable and res.quantity == "size":
                assert int(res.value) >= truth, (q, n, d, res.name)


def test_in_cap_grid_shape():
    grid = in_cap_grid(cap=27)
    assert (3, 3, 2) in grid and (2, 4, 1) in grid and (2, 5, 1) not in grid
    assert all(q ** n <= 27 and 1 <= d <= n for q, n, d in grid)
    assert {q for q, _, _ in grid} == {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27}
