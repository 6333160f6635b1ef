import numpy as np
import pytest
from hypothesis import given, strategies as st

from covbound.algebra import (factor_prime_power, field_make, matmul, nullspace, rref,
                              row_basis, span_equal)
from covbound.exceptions import BadParams, NotPrimePower

FIELDS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27]


@pytest.mark.parametrize("q, expected", [(2, (2, 1)), (8, (2, 3)), (9, (3, 2)), (49, (7, 2)),
                                         (243, (3, 5))])
def test_factor_prime_power(q, expected):
    assert factor_prime_power(q) == expected


@pytest.mark.parametrize("q", [0, 1, 6, 12, 100])
def test_factor_rejects_non_prime_powers(q):
    with pytest.raises(NotPrimePower):
        factor_prime_power(q)


def test_field_order_cap():
    with pytest.raises(BadParams):
        field_make(257)


@pytest.mark.parametrize("q", FIELDS)
def test_field_axioms(q):
    f = field_make(q)
    a = np.arange(q)
    assert np.array_equal(f.add[0], a)
    assert np.array_equal(f.mul[1], a)
    assert np.all(f.add == f.add.T) and np.all(f.mul == f.mul.T)
    assert np.all(f.add[a, f.neg] == 0)
    nz = a[1:]
    assert np.all(f.mul[nz, f.inv[nz]] == 1)
    # every row of the multiplication table on nonzeros is a permutation
    assert all(sorted(f.mul[x, 1:]) == list(range(1, q)) for x in nz)
    assert sorted(f.exp_table.tolist()) == list(range(1, q))


@pytest.mark.parametrize("q", FIELDS)
def test_distributive(q):
    f = field_make(q)
    a, b, c = np.meshgrid(np.arange(q), np.arange(q), np.arange(q), indexing="ij")
    assert np.array_equal(f.mul[a, f.add[b, c]], f.add[f.mul[a, b], f.mul[a, c]])


def test_gf4_known_products():
    f = field_make(4)
    # x * x = x + 1 in GF(2)[x]/(x^2+x+1); index 2 is x, index 3 is x+1
    assert f.mul[2, 2] == 3
    assert f.mul[2, 3] == 1
    assert f.add[2, 3] == 1


def test_field_power_and_characteristic():
    f = field_make(9)
    assert f.power(0, 0) == 1
    assert all(f.power(x, 8) == 1 for x in range(1, 9))
    assert all(f.add[x, f.add[x, x]] == 0 for x in range(9))


@given(st.sampled_from([2, 3, 4, 5, 7]), st.integers(1, 5), st.integers(1, 7), st.integers(0, 2 ** 32 - 1))
def test_nullspace_is_orthogonal_complement(q, k, n, seed):
    f = field_make(q)
    m = np.random.default_rng(seed).integers(0, q, (k, n))
    _, rank = rref(m, f)
    h = nullspace(m, f)
    assert h.shape[0] == n - rank
    if h.size:
        assert not matmul(m, h.T, f).any()
        assert rref(h, f)[1] == n - rank


@given(st.sampled_from([2, 3, 4, 5]), st.integers(0, 2 ** 32 - 1))
def test_row_basis_spans_same_space(q, seed):
    f = field_make(q)
    m = np.random.default_rng(seed).integers(0, q, (4, 6))
    assert span_equal(row_basis(m, f), m, f)
