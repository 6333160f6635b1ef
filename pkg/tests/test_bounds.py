from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from covbound import bounds as B
from covbound.covering import RadiusResult, table_lookup
from covbound.exceptions import (MissingAux, NotPerfect, NothingApplicable, OutOfRange, QEven,
                                 RadiusNotVerified,
                                 RadiusTooLarge)
from covbound.families import block_diagonal, golay_binary, golay_ternary, hamming_code


def value(results, name):
    r = next(r for r in results if r.name == name)
    return int(r.value) if r.applicable else None


def test_singleton_examples():
    assert int(B.singleton(B.CodeParams(2, 16, d=7)).value) == 2 ** 10
    assert int(B.singleton(B.CodeParams(2, 7, d=3)).value) == 32
    assert int(B.singleton(B.CodeParams(5, 6, d=6)).value) == 5


def test_list_singleton_examples():
    assert int(B.generalized_singleton_ST(B.CodeParams(2, 16, d_list=3, L=2)).value) == 8192
    assert int(B.generalized_singleton_ST(B.CodeParams(2, 16, d_list=3)).value) == 2 ** 10
    p = B.CodeParams(2, 10, d_list=3, L=4)
    assert int(B.generalized_singleton_ST(p).value) == int(B.redundancy_list_bound(p).value) == 4 * 2 ** 7


def test_redundancy_degenerate():
    assert int(B.redundancy_list_bound(B.CodeParams(3, 5, d_list=0)).value) == 3 ** 5


def test_sphere_packing_examples():
    assert int(B.sphere_packing_list(B.CodeParams(2, 16, d_list=3)).value) == 94
    assert int(B.sphere_packing_list(B.CodeParams(2, 23, d_list=3)).value) == 4096


@pytest.mark.parametrize("q, n, d, k", [(2, 7, 3, 4), (2, 16, 8, 5), (3, 9, 9, 1)])
def test_griesmer_max_k(q, n, d, k):
    assert B.griesmer_max_k(q, n, d) == k


def test_griesmer_needs_linear():
    assert not B.griesmer(B.CodeParams(2, 7, d=3)).applicable
    assert int(B.griesmer(B.CodeParams(2, 7, d=3, linear=True)).value) == 16


def test_covering_code_bound():
    assert int(B.covering_code_bound(golay_binary(), 3, 2).value) == 8192
    assert int(B.covering_code_bound(table_lookup("K", (2, 16, 3)), 3, 1).value) == 192


def test_covering_code_bound_rejects_too_large_radius():
    with pytest.raises(RadiusTooLarge):
        B.covering_code_bound(hamming_code(2, 3), 0, 1)


def test_list_size_lower_bound():
    assert [B.list_size_lower_bound(k, golay_binary()) for k in (12, 13, 16)] == [1, 2, 16]
    assert B.list_size_lower_bound(8, golay_ternary()) == 9
    with pytest.raises(NotPerfect):
        B.list_size_lower_bound(9, block_diagonal(2, 3, 2))


def test_implied_list_size():
    assert B.implied_list_size(2 ** 9, 192) == 3


def test_generalized_examples():
    assert str(value(B.paper_generalized_bounds(B.CodeParams(2, 14, d=5), m=3, u=2),
                     "block_hamming")) == str(2 ** 8)
    assert value(B.paper_generalized_bounds(B.CodeParams(2, 15, d=7), m=2),
                 "binary_few_weight_dual") == 2 ** 9
    assert value(B.paper_generalized_bounds(B.CodeParams(3, 8, d=5), m=1),
                 "odd_prime_few_weight_dual") == 3 ** 6


def test_cyclotomic_gate():
    with pytest.raises(MissingAux):
        B.cyclotomic_bound(B.CodeParams(3, 20, d=5), None)
    # q=3, m=2: N = gcd(8/2, a e) = gcd(4, 2) = 2
    aux = B.CyclotomicParams(m=2, e=2, a=1, deltas=(0, 1))
    assert aux.check(3) == ""
    assert aux.derived(3)["N"] == 2
    res = B.cyclotomic_bound(B.CodeParams(3, 20, d=5), aux)
    assert not res.applicable and res.reason == "N ≠ 1"


def test_length_ceilings_examples():
    res = B.length_ceilings(11, d=11)
    assert value(res, "small_field_length") == 1329
    assert all(r.quantity == "length" for r in res)
    assert value(B.length_ceilings(2, d=5, defect=1, linear=True), "de_boer") == 9
    assert value(B.length_ceilings(2, d=5, defect=1), "de_boer") is None
    assert value(B.length_ceilings(2, d=5, cover=block_diagonal(2, 3, 2)), "cover_length") == 13


def test_bush():
    assert int(B.bush_bound(3).value) == 25
    assert int(B.bush_bound(5).value) == 123
    with pytest.raises(QEven):
        B.bush_bound(2)


def test_entropy():
    assert B.entropy_q(2, 0.5) == pytest.approx(1.0)
    assert B.entropy_q(7, 0) == 0
    assert abs(B.entropy_q(2, 0.11) - 0.5) < 1e-3
    with pytest.raises(OutOfRange):
        B.entropy_q(2, 1.5)


@given(st.sampled_from([2, 3, 4, 5]), st.floats(0.01, 0.99))
def test_entropy_bounded_by_one(q, r):
    assert 0 <= B.entropy_q(q, r) <= 1 + 1e-12
    assert B.entropy_q(q, (q - 1) / q) == pytest.approx(1.0)


def test_ladder_2_16_7():
    ladder = B.bound_ladder(B.CodeParams(2, 16, d=7))
    best = B.tightest(ladder)
    assert (best.name, int(best.value)) == ("sphere_packing", 94)
    assert value(ladder, "covering_code") == 192
    assert value(ladder, "singleton") == 1024
    applicable = [int(r.value) for r in ladder if r.applicable]
    assert applicable == sorted(applicable)
    assert sum(r.tightest for r in ladder) == 1


def test_ladder_golay_length():
    assert int(B.tightest(B.bound_ladder(B.CodeParams(2, 23, d=7))).value) == 4096


def test_ladder_nothing_applicable():
    with pytest.raises(NothingApplicable):
        B.bound_ladder(B.CodeParams(2, 5))


def test_registry_needs_exact_radius():
    sampled = RadiusResult(1, "sample_lower", False)
    with pytest.raises(RadiusNotVerified):
        B.covering_code_bound(hamming_code(2, 3), 1, 1, radius=sampled)


def test_exponent_fraction():
    assert B.exponent_fraction(14, 3, 10) == Fraction(13, 2)


@given(st.sampled_from([2, 3, 4]), st.integers(1, 20), st.integers(0, 5))
def test_binomial_sum(q, n, r):
    r = min(r, n)
    assert B.binomial_sum(q, n, r) == sum(comb(n, j) * (q - 1) ** j for j in range(r + 1))


@given(st.sampled_from([2, 3]), st.integers(4, 14), st.integers(1, 3), st.integers(1, 4))
def test_list_bounds_monotone_in_L(q, n, d_list, L):
    a = B.CodeParams(q, n, d_list=d_list, L=L)
    b = B.CodeParams(q, n, d_list=d_list, L=L + 1)
    for f in (B.sphere_packing_list, B.redundancy_list_bound):
        assert int(f(a).value) <= int(f(b).value)


@given(st.sampled_from([2, 3]), st.integers(3, 16), st.integers(1, 3))
def test_sphere_packing_never_above_singleton_at_L1(q, n, d_list):
    d = 2 * d_list + 1
    if d > n:
        return
    p = B.CodeParams(q, n, d=d)
    assert int(B.sphere_packing_list(p).value) <= q ** n
    assert int(B.singleton(p).value) == q ** (n - d + 1)


def test_ladder_json_values():
    rows = [r.as_dict() for r in B.bound_ladder(B.CodeParams(2, 16, d=7))]
    assert set(rows[0]) == {"name", "value", "applicable", "reason", "citation", "assumptions"}
    assert all(isinstance(r["value"], (int, str, type(None))) for r in rows)
