"""Embedded claim records checked by ``covbound verify paper``.

Each claim recomputes a published value from scratch and compares it with
the expected value.  Claims are pure functions of their inputs, so the
report is identical for any worker count.
"""
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import log

import numpy as np

from . import bounds as B
from .codes import Code, LinearCode, dual, min_distance, singleton_defect, weight_distribution
from .covering import covering_radius, delsarte_bound, table_lookup
from .families import construct, golay_binary, golay_ternary
from .insdel import closed_form_exponent, code_insdel_distance, insdel_report, insdel_size_bounds
from .lrc import lrc_bounds


@dataclass(frozen=True)
class Claim:
    claim_id: str
    citation: str
    expected: str
    compute: object


@dataclass(frozen=True)
class ClaimRow:
    claim_id: str
    citation: str
    expected: str
    computed: str
    verdict: str
    ms: float

    def as_dict(self, with_time=False):
        out = {"claim_id": self.claim_id, "citation": self.citation, "expected": self.expected,
               "computed": self.computed, "verdict": self.verdict}
        if with_time:
            out["ms"] = round(self.ms, 3)
        return out


def _nkd(code):
    return f"[{code.n},{code.k},{min_distance(code)}]"


def _weights(code):
    wd = weight_distribution(code)
    return str(sorted(int(w) for w in np.nonzero(wd)[0] if w))


def _radius(code):
    res = covering_radius(code)
    return f"{res.radius} ({res.method})"


def _ladder_value(params, name):
    return str(next(int(r.value) for r in B.bound_ladder(params) if r.name == name and r.applicable))


def _bound(results, name):
    r = next(r for r in results if r.name == name)
    return str(r.value) if r.applicable else f"inapplicable: {r.reason}"


def _list_sizes(cover, ks):
    return str([B.list_size_lower_bound(k, cover) for k in ks])


def _table_value(kind, params):
    e = table_lookup(kind, params)
    tag = "exact" if e.exact else "upper"
    return f"{e.value} {tag}"


def _closed_length(q):
    return f"{table_lookup('l', (q, 5, 3)).value:.6f}"


def _half_singleton_all():
    rng = np.random.default_rng(7)
    bad = 0
    for _ in range(60):
        n = int(rng.integers(3, 8))
        k = int(rng.integers(1, n))
        try:
            code = LinearCode(2, rng.integers(0, 2, (k, n)))
        except Exception:
            continue
        rep = insdel_report(code)
        if rep.half_singleton_ok is False or not rep.direct_singleton_ok:
            bad += 1
    return f"violations={bad}"


def _insdel_vs_hamming():
    rng = np.random.default_rng(11)
    bad = 0
    for _ in range(40):
        n = int(rng.integers(3, 8))
        words = np.unique(rng.integers(0, 3, (6, n)), axis=0)
        code = Code(3, words)
        if code.size >= 2 and code_insdel_distance(code) > 2 * min_distance(code):
            bad += 1
    return f"violations={bad}"


def _all_ones_flag():
    rep = insdel_report(LinearCode(2, [[1, 1, 1, 1, 1], [0, 1, 0, 1, 0]]))
    return f"improved={rep.improved_half_singleton_ok} has_all_ones={rep.has_all_ones}"


def _insdel_closed(n, m, dins):
    wrap = _bound(insdel_size_bounds(2, n, dins, m=m), "insdel_block_hamming")
    return f"2^({closed_form_exponent(n, m, dins)}) wrapped={wrap}"


CLAIMS = (
    Claim("distance.hamming74", "perfect Hamming code [7,4,3]_2", "3",
          lambda: str(min_distance(construct("hamming", q=2, m=3)))),
    Claim("distance.golay23", "binary Golay [23,12,7]_2 perfect code", "7",
          lambda: str(min_distance(golay_binary()))),
    Claim("weights.kasami2", "three-weight Kasami code, m=2", "[6, 8, 10]",
          lambda: _weights(construct("kasami", m=2))),
    Claim("defect.rs73", "Reed-Solomon [n,k,n-k+1]_q codes are MDS", "0",
          lambda: str(singleton_defect(construct("reed_solomon", q=7, n=7, k=3)))),
    Claim("family.hamming23", "perfect Hamming code", "[7,4,3]",
          lambda: _nkd(construct("hamming", q=2, m=3))),
    Claim("family.golay_ternary", "ternary Golay [11,6,5]_3", "[11,6,5]",
          lambda: _nkd(golay_ternary())),
    Claim("family.kasami2", "three-weight Kasami code, m=2", "[15,6] [6, 8, 10]",
          lambda: (lambda c: f"[{c.n},{c.k}] {_weights(c)}")(construct("kasami", m=2))),
    Claim("family.rm1_4", "first-order Reed-Muller code, m=4", "[16,5,8]",
          lambda: _nkd(construct("reed_muller1", m=4))),
    Claim("family.block_diagonal", "block-diagonal Hamming parity check, sum of at most u columns",
          "[14,8] radius<=2",
          lambda: (lambda c: f"[{c.n},{c.k}] radius<={covering_radius(c).radius}")(
              construct("block_diagonal", q=2, m=3, u=2))),
    Claim("family.rs73", "Reed-Solomon code over GF(7)", "[7,3,5]",
          lambda: _nkd(construct("reed_solomon", q=7, n=7, k=3))),
    Claim("radius.hamming74", "perfect Hamming code", "1 (coset_leader)",
          lambda: _radius(construct("hamming", q=2, m=3))),
    Claim("radius.golay23", "binary Golay [23,12,7]_2 perfect code", "3 (coset_leader)",
          lambda: _radius(golay_binary())),
    Claim("radius.golay_ternary", "ternary Golay [11,6,5]_3 perfect code", "2 (coset_leader)",
          lambda: _radius(golay_ternary())),
    Claim("radius.rs73", "Reed-Solomon covering radius n-k for n <= q", "4 (coset_leader)",
          lambda: _radius(construct("reed_solomon", q=7, n=7, k=3))),
    Claim("radius.rm1_4", "Reed-Muller radius 2^(m-1) - 2^((m-2)/2), m=4", "6 (coset_leader)",
          lambda: _radius(construct("reed_muller1", m=4))),
    Claim("delsarte.kasami2_dual", "dual of a three-weight code has covering radius at most 3", "3",
          lambda: str(delsarte_bound(dual(construct("kasami", m=2))))),
    Claim("delsarte.hamming74", "Delsarte bound on the Hamming code via the one-weight simplex dual", "1 1",
          lambda: (lambda c: f"{delsarte_bound(c)} {covering_radius(c).radius}")(construct("hamming", q=2, m=3))),
    Claim("table.K_2_15_3", "K_2(15,3)=112", "112 exact", lambda: _table_value("K", (2, 15, 3))),
    Claim("table.K_2_16_3", "K_2(16,3) <= 192", "192 upper", lambda: _table_value("K", (2, 16, 3))),
    Claim("table.K_2_33_5", "K_2(33,5) <= 2^13 * 11", "90112 upper", lambda: _table_value("K", (2, 33, 5))),
    Claim("table.l_q_5_3", "l_q(5,3) < 2.884 q^(2/3) (ln q)^(1/3), q=64",
          f"{2.884 * 64 ** (2 / 3) * log(64) ** (1 / 3):.6f}", lambda: _closed_length(64)),
    Claim("bound.classical_singleton", "classical list Singleton |C| <= q^(n-2 d_list) at L=1", "2^10",
          lambda: str(B.generalized_singleton_ST(B.CodeParams(2, 16, d_list=3)).value)),
    Claim("bound.st_equals_redundancy", "list Singleton equals the redundancy bound when L >= d_list",
          "4*2^7 4*2^7",
          lambda: (lambda p: f"{B.generalized_singleton_ST(p).value} {B.redundancy_list_bound(p).value}")(
              B.CodeParams(2, 10, d_list=3, L=4))),
    Claim("bound.cover_golay_L2", "|C| <= L|C'| with the binary Golay cover, L=2", "8192",
          lambda: str(B.covering_code_bound(golay_binary(), 3, 2).value)),
    Claim("bound.cover_table_192", "|C| <= 192 L from K_2(16,3) <= 192", "192",
          lambda: _ladder_value(B.CodeParams(2, 16, d=7), "covering_code")),
    Claim("bound.implied_list_size", "[16,9,4] code at radius 3 needs list size at least 3", "3",
          lambda: str(B.implied_list_size(2 ** 9, table_lookup("K", (2, 16, 3)).value))),
    Claim("bound.list_golay", "L >= 2^(k-12) for binary [23,k] codes", str([2 ** (k - 12) for k in range(12, 24)]),
          lambda: _list_sizes(golay_binary(), range(12, 24))),
    Claim("bound.list_golay_ternary", "L >= 3^(k-6) for ternary [11,k] codes", str([3 ** (k - 6) for k in range(6, 12)]),
          lambda: _list_sizes(golay_ternary(), range(6, 12))),
    Claim("bound.block_hamming", "M <= q^(n-mu) for q=2, m=3, u=2, n=14", "2^8",
          lambda: _bound(B.paper_generalized_bounds(B.CodeParams(2, 14, d=5), m=3, u=2), "block_hamming")),
    Claim("bound.binary_few_weight", "M <= 2^(n-Rm) for R=3, m=2, n=15", "2^9",
          lambda: _bound(B.paper_generalized_bounds(B.CodeParams(2, 15, d=7), m=2), "binary_few_weight_dual")),
    Claim("bound.odd_prime", "M <= p^(n-Rm) for p=3, m=1, R=2, n=8", "3^6",
          lambda: _bound(B.paper_generalized_bounds(B.CodeParams(3, 8, d=5), m=1), "odd_prime_few_weight_dual")),
    Claim("length.small_field", "MDS or almost MDS length < q^3 - 1 for q=11, e=5", "1329",
          lambda: _bound(B.length_ceilings(11, d=11), "small_field_length")),
    Claim("length.cover_block_diagonal", "no MDS (n, 2^(n-4), 5)_2 code with n >= 14", "13",
          lambda: _bound(B.length_ceilings(2, d=5, cover=construct("block_diagonal", q=2, m=3, u=2)),
                         "cover_length")),
    Claim("insdel.le_twice_hamming", "d_insdel(C) <= 2 d(C)", "violations=0", _insdel_vs_hamming),
    Claim("insdel.half_singleton", "d_insdel <= 2(n-2k+2) for linear codes with d_insdel >= 4",
          "violations=0", _half_singleton_all),
    Claim("insdel.all_ones_skip", "improved half-Singleton needs a code without the all-ones word",
          "improved=None has_all_ones=True", _all_ones_flag),
    Claim("insdel.closed_form", "|C| <= q^(n - m d_insdel/4) with m=3, n=14, d_insdel=10",
          "2^(13/2) wrapped=2^8", lambda: _insdel_closed(14, 3, 10)),
    Claim("lrc.singleton_like", "d <= n-k+2-ceil(k/r) at n=4, k=2, r=1", "2",
          lambda: _bound(lrc_bounds(4, 2, 1), "lrc_singleton")),
    Claim("lrc.r_ge_k", "Singleton-like bound is the Singleton bound when r >= k", "5 5",
          lambda: f"{_bound(lrc_bounds(7, 3, 3), 'lrc_singleton')} {7 - 3 + 1}"),
    Claim("lrc.block_length", "n <= R(q^4-1)/(q-1) at R=2, q=3", "80",
          lambda: _bound(lrc_bounds(10, 2, 1, q=3, R=2), "lrc_length_block")),
)


def claim_ids():
    return [c.claim_id for c in CLAIMS]


def _run_one(claim_id):
    claim = next(c for c in CLAIMS if c.claim_id == claim_id)
    t0 = time.perf_counter()
    try:
        computed = claim.compute()
    except Exception as exc:  # a crashing claim is a failed claim, reported not raised
        computed = f"error: {type(exc).__name__}: {exc}"
    ms = (time.perf_counter() - t0) * 1000
    verdict = "pass" if computed == claim.expected else "fail"
    return ClaimRow(claim.claim_id, claim.citation, claim.expected, computed, verdict, ms)


def run_claims(only=None, workers=1):
    """Evaluate claims (all, or those whose id starts with ``only``) in registry order."""
    ids = [c for c in claim_ids() if only is None or c == only or c.startswith(only + ".")]
    if workers <= 1:
        return [_run_one(i) for i in ids]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_one, ids))
