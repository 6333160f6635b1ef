"""Brute-force ground truth: exact ``A_q(n,d)`` and ``K_q(n,R)`` for tiny spaces.

Both searches are exact branch and bound over all ``q**n`` vectors and
refuse spaces above the configured cap.  Witnesses are re-verified with
the codes and covering modules before they are returned.
"""
import time
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import _space
from .codes import Code, min_distance
from .config import DEFAULT_ORACLE_CAP, MAX_FIELD_ORDER, get_budget
from .covering import covering_radius, greedy_covering_search
from .exceptions import BadParams, BudgetExceeded, SelfCheckFailed


@dataclass
class OracleResult:
    """Exact optimum with an optimal code and search statistics."""

    value: int
    witness: Code
    stats: dict = dc_field(default_factory=dict)


def _check_space(q, n, cap):
    if q < 2 or n < 1:
        raise BadParams("need q >= 2 and n >= 1")
    cap = DEFAULT_ORACLE_CAP if cap is None else cap
    if q ** n > cap:
        raise BudgetExceeded(q ** n, cap, "oracle space size")


def _node_limit(cost, node_limit, budget):
    # each search node costs about ``cost`` elementary operations
    return node_limit if node_limit is not None else max(get_budget(budget) // cost, 1000)


def distance_matrix(q, n):
    pts = _space.all_vectors(q, n)
    if q == 2:
        return _space.distances_to(pts, pts, 2)
    return (pts[:, None, :] != pts[None, :, :]).sum(axis=2)


def lexicode(q, n, d, dist=None):
    """Greedy lexicographic code: scan F_q^n in order, keep every vector at distance >= d."""
    dist = distance_matrix(q, n) if dist is None else dist
    far = dist >= d
    keep = np.zeros(q ** n, dtype=bool)
    ok = np.ones(q ** n, dtype=bool)
    for v in range(q ** n):
        if ok[v]:
            keep[v] = True
            ok &= far[v]
    return np.nonzero(keep)[0].tolist()


def _orbit_signature(pts, S):
    # orbit label of every vector under the isometries fixing 0 that fix each
    # chosen vector in S: coordinate permutations preserving the column
    # patterns of S, and per-coordinate symbol permutations fixing 0
    cols = pts[np.asarray(S)].T
    n = cols.shape[0]
    pattern_ids = {}
    pid = np.empty(n, np.int64)
    label = np.zeros(pts.shape, np.int64)
    width = 2
    for i in range(n):
        relabel = {0: 1}
        canon = []
        for v in cols[i].tolist():
            relabel.setdefault(v, len(relabel) + 1)
            canon.append(relabel[v])
        pid[i] = pattern_ids.setdefault(tuple(canon), len(pattern_ids))
        width = max(width, len(relabel) + 1)
        for v, lab in relabel.items():
            label[pts[:, i] == v, i] = lab
    key = pid[None, :] * width + label
    sig = np.zeros((pts.shape[0], len(pattern_ids) * width), np.int64)
    rows = np.arange(pts.shape[0])
    for i in range(n):
        np.add.at(sig, (rows, key[:, i]), 1)
    return sig


def exact_A(q, n, d, cap=None, node_limit=None, budget=None, orbit_depth=5):
    """Largest code in F_q^n with minimum distance at least ``d``.

    A maximum clique search in the graph joining vectors at distance
    ``>= d``, seeded with the lexicode.  When the greedy-colouring bound on
    codes through ``0`` already matches the incumbent the search stops.

    Otherwise, any code with minimum distance ``w`` can be moved by a
    Hamming isometry (a translation followed by coordinate and symbol
    permutations) so that it contains ``0`` and ``0^(n-w) 1^w``.  For each
    ``w = n, ..., d`` those two vertices are fixed.  Further codewords are
    then chosen one at a time, up to ``orbit_depth`` fixed vertices, from
    one representative per orbit of the isometries fixing every chosen
    vector.  Each orbit is excluded from later sibling branches.

    Raises :class:`BudgetExceeded` when ``q**n`` exceeds the cap or the
    search needs more than ``node_limit`` nodes.
    """
    from . import _clique

    _check_space(q, n, cap)
    if not 1 <= d <= n:
        raise BadParams("need 1 <= d <= n")
    t0 = time.perf_counter()
    N = q ** n
    limit = _node_limit(-(-N // 64), node_limit, budget)
    pts = _space.all_vectors(q, n)
    dist = distance_matrix(q, n)
    best_idx = lexicode(q, n, d, dist)
    if d == 2 and q ** (n - 1) > len(best_idx):
        # symbols summing to 0 mod q: q^(n-1) words, pairwise distance >= 2
        best_idx = np.nonzero(pts.sum(axis=1) % q == 0)[0].tolist()
    adj = _clique.to_bits(dist >= d)
    root_bound = 1 + _clique.colour_bound(adj, adj[0])
    st = {"best": len(best_idx), "idx": best_idx, "nodes": 0}

    def charge(used):
        st["nodes"] += used
        if st["nodes"] > limit:
            raise BudgetExceeded(st["nodes"], limit, f"clique search for A_{q}({n},{d})")

    def branch(S, P, adj, w):
        if st["best"] >= root_bound:
            return
        charge(1)
        bits = _clique.to_bits(P)[0]
        if len(S) + _clique.colour_bound(adj, bits) <= st["best"]:
            return
        if len(S) >= orbit_depth:
            val, members, used, complete = _clique.max_clique(
                adj, bits, len(S), st["best"], limit - st["nodes"])
            charge(used)
            if not complete:
                raise BudgetExceeded(st["nodes"], limit, f"clique search for A_{q}({n},{d})")
            if val > st["best"]:
                st["best"], st["idx"] = val, S + [int(v) for v in members]
            return
        sig = _orbit_signature(pts, S)
        seen = np.zeros(N, dtype=bool)
        for u in np.nonzero(P)[0].tolist():
            if seen[u]:
                continue
            sub = P & ~seen & (dist[u] >= w)
            seen |= np.all(sig == sig[u], axis=1) & P
            if sub.any():
                branch(S + [u], sub, adj, w)
            elif len(S) + 1 > st["best"]:
                st["best"], st["idx"] = len(S) + 1, S + [u]

    for w in range(n, d - 1, -1):
        if st["best"] >= root_bound:
            break
        anchor = int(_space.to_index([[0] * (n - w) + [1] * w], q)[0])
        branch([0, anchor], (dist[0] >= w) & (dist[anchor] >= w), _clique.to_bits(dist >= w), w)
    witness = Code(q, pts[np.array(sorted(st["idx"]), dtype=np.int64)])
    if witness.size >= 2 and min_distance(witness, method="pairwise") < d:
        raise SelfCheckFailed("oracle witness violates the distance")
    return OracleResult(witness.size, witness,
                        {"nodes": int(st["nodes"]), "seconds": time.perf_counter() - t0,
                         "root_bound": int(root_bound)})


def _ball_masks(q, n, R):
    balls = _space.ball_indices(np.arange(q ** n), q, n, R)
    masks = []
    for row in balls:
        m = 0
        for v in row.tolist():
            m |= 1 << v
        masks.append(m)
    return balls, masks


def exact_K(q, n, R, cap=None, node_limit=None, budget=None):
    """Smallest code in F_q^n with covering radius at most ``R``.

    Set-cover branch and bound: a translation puts ``0`` in the code, then
    the search branches on the balls that cover the lexicographically
    smallest uncovered point.  Earlier siblings are forbidden in later
    branches.  A branch is cut when its size plus
    ``ceil(uncovered / largest available gain)`` reaches the incumbent,
    which starts from a greedy code.  The sphere-covering floor
    ``ceil(q^n / V)`` ends the search early when attained.
    """
    _check_space(q, n, cap)
    if R < 0:
        raise BadParams("R must be non-negative")
    t0 = time.perf_counter()
    N = q ** n
    vol = _space.ball_volume(q, n, R)
    floor = -(-N // vol)
    limit = _node_limit(N, node_limit, budget)
    if R >= n:
        best_idx, nodes = [0], 0
    else:
        balls, masks = _ball_masks(q, n, R)
        greedy = greedy_covering_search(q, n, R, seed=0, restarts=2, budget=budget)
        best_idx = sorted(_space.to_index(greedy.words, q).tolist())
        full = (1 << N) - 1
        state = {"nodes": 0, "best": best_idx}

        def search(covered, chosen, forbidden):
            if len(state["best"]) <= floor:
                return
            state["nodes"] += 1
            if state["nodes"] > limit:
                raise BudgetExceeded(state["nodes"], limit, f"set-cover search for K_{q}({n},{R})")
            if covered == full:
                if len(chosen) < len(state["best"]):
                    state["best"] = sorted(chosen)
                return
            open_ = full & ~covered
            gains = [0 if (forbidden >> c) & 1 else (masks[c] & open_).bit_count() for c in range(N)]
            top = max(gains)
            if top == 0:
                return
            need = -(-open_.bit_count() // top)
            if len(chosen) + need >= len(state["best"]):
                return
            p = (open_ & -open_).bit_length() - 1
            cands = [int(c) for c in balls[p] if not (forbidden >> int(c)) & 1]
            cands.sort(key=lambda c: (-gains[c], c))
            for c in cands:
                search(covered | masks[c], chosen + [c], forbidden)
                forbidden |= 1 << c

        search(masks[0], [0], 1)
        best_idx, nodes = state["best"], state["nodes"]
    witness = Code(q, _space.from_index(np.array(best_idx, dtype=np.int64), q, n))
    if covering_radius(witness, method="exhaustive").radius > R:
        raise SelfCheckFailed("oracle witness does not cover the space")
    return OracleResult(witness.size, witness,
                        {"nodes": int(nodes), "seconds": time.perf_counter() - t0, "floor": floor})


def in_cap_grid(cap=None, qs=None):
    """Every ``(q, n, d)`` with ``q**n <= cap`` and ``1 <= d <= n`` (``n >= 1``)."""
    from .algebra import factor_prime_power
    from .exceptions import NotPrimePower

    cap = DEFAULT_ORACLE_CAP if cap is None else cap
    if qs is None:
        qs = []
        for q in range(2, min(cap, MAX_FIELD_ORDER) + 1):
            try:
                factor_prime_power(q)
            except NotPrimePower:
                continue
            qs.append(q)
    out = []
    for q in qs:
        n = 1
        while q ** n <= cap:
            out.extend((q, n, d) for d in range(1, n + 1))
            n += 1
    return out
