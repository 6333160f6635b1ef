"""Covering radius engines, the dual-weight bound, greedy covering search and
the embedded table of known covering-code sizes and lengths."""
from dataclasses import dataclass, field as dc_field
from math import log

import numpy as np

from . import _space
from .algebra import matmul
from .codes import Code, LinearCode, dual, weight_distribution
from .config import check_budget, get_budget
from .exceptions import (BadParams, BudgetExceeded, MethodInapplicable,
                         NotFound)

METHODS = ("exhaustive", "coset_leader", "delsarte_upper", "sample_lower")


@dataclass
class RadiusResult:
    """Covering radius with provenance.

    ``witness`` is a deepest point (a vector at distance ``radius`` from
    the code) whenever the result is exact.
    """

    radius: int
    method: str
    exact: bool
    witness: tuple = None

    def __post_init__(self):
        if self.exact and self.method not in ("exhaustive", "coset_leader"):
            raise BadParams(f"method {self.method} cannot give an exact radius")


def covering_radius(c, method="auto", budget=None, allow_estimate=False, samples=4096, seed=0):
    """Exact covering radius of ``c``.

    Parameters
    ----------
    method : {"auto", "exhaustive", "coset_leader", "coset"}
        ``auto`` uses coset leaders for linear codes, exhaustive search
        otherwise.
    allow_estimate : bool
        When the exact computation exceeds the budget, return a sampled
        lower estimate (flagged inexact) instead of raising.
    """
    if method == "coset":
        method = "coset_leader"
    if method == "auto":
        method = "coset_leader" if isinstance(c, LinearCode) else "exhaustive"
    if method not in ("exhaustive", "coset_leader"):
        raise BadParams(f"unknown method {method!r}")
    if method == "coset_leader" and not isinstance(c, LinearCode):
        raise MethodInapplicable("coset-leader method needs a linear code")
    try:
        if method == "coset_leader":
            return _coset_leader_radius(c, budget)
        return _exhaustive_radius(c, budget)
    except BudgetExceeded:
        if not allow_estimate:
            raise
        return _sampled_radius(c, budget, samples, seed)


def _exhaustive_radius(c, budget):
    q, n = c.q, c.n
    check_budget(q ** n * max(n * (q - 1), 1), budget, "exhaustive covering radius")
    words = c.codewords(budget)
    dist = _space.bfs_distances(_space.to_index(words, q), q, n)
    radius = int(dist.max())
    deepest = int(np.argmax(dist == radius))
    return RadiusResult(radius, "exhaustive", True, tuple(_space.from_index(deepest, q, n).tolist()))


def coset_leader_weights(c, budget=None):
    """Minimum coset weight for every syndrome index (breadth-first over column multiples).

    Returns ``(weights, h)`` where ``weights[s]`` is the coset-leader weight of
    the syndrome with index ``s`` and ``h`` the parity-check matrix used.
    """
    f, n = c.field, c.n
    h = c.parity_check
    r = h.shape[0]
    q = f.q
    check_budget(q ** r * max(n * (q - 1), 1) * max(r, 1), budget, "coset-leader enumeration")
    weights = np.full(q ** r, -1, dtype=np.int64)
    weights[0] = 0
    if r == 0:
        return weights, h
    gens = np.array([f.mul[a, h[:, j]] for j in range(n) for a in range(1, q)], dtype=np.int64)
    gens = np.unique(gens[np.any(gens != 0, axis=1)], axis=0)
    pv = _space.place_values(q, r)
    frontier = np.zeros((1, r), dtype=np.int64)
    level = 0
    while len(frontier):
        level += 1
        moved = f.add[frontier[:, None, :], gens[None, :, :]].reshape(-1, r)
        idx = np.unique(moved @ pv)
        idx = idx[weights[idx] < 0]
        weights[idx] = level
        frontier = _space.from_index(idx, q, r)
    return weights, h


def _coset_leader_radius(c, budget):
    weights, h = coset_leader_weights(c, budget)
    radius = int(weights.max())
    return RadiusResult(radius, "coset_leader", True, _deepest_point(c, weights, radius, h, budget))


def _deepest_point(c, weights, radius, h, budget, chunk=1 << 14):
    """Lexicographically smallest vector lying in a coset of maximal weight."""
    f, n, q = c.field, c.n, c.q
    r = h.shape[0]
    if r == 0:
        return tuple([0] * n)
    pv = _space.place_values(q, r)
    limit = min(q ** n, max(get_budget(budget) // max(n * r, 1), chunk))
    for start in range(0, limit, chunk):
        pts = _space.from_index(np.arange(start, min(start + chunk, q ** n)), q, n)
        syn = matmul(pts, h.T, f) @ pv
        hit = np.nonzero(weights[syn] == radius)[0]
        if hit.size:
            return tuple(pts[hit[0]].tolist())
    return None


def _sampled_radius(c, budget, samples, seed):
    words = c.codewords(budget)
    rng = np.random.default_rng(seed)
    check_budget(samples * len(words), budget, "sampled covering radius")
    pts = rng.integers(0, c.q, size=(samples, c.n))
    best, witness = -1, None
    for start in range(0, samples, 256):
        d = _space.distances_to(pts[start:start + 256], words, c.q).min(axis=1)
        i = int(np.argmax(d))
        if d[i] > best:
            best, witness = int(d[i]), tuple(pts[start + i].tolist())
    return RadiusResult(best, "sample_lower", False, witness)


def delsarte_bound(c, budget=None):
    """Number of distinct nonzero weights in the dual code (an upper bound on the radius)."""
    wd = weight_distribution(dual(c), budget)
    return int(np.count_nonzero(wd[1:]))


def distance_to_code(points, c, budget=None):
    """Distance from each point to its nearest codeword."""
    words = c.codewords(budget)
    points = np.atleast_2d(np.asarray(points, dtype=np.int64))
    check_budget(len(points) * len(words), budget, "distance to code")
    return _space.distances_to(points, words, c.q).min(axis=1)


def greedy_covering_search(q, n, R, seed=0, restarts=0, budget=None):
    """Greedy covering code of radius ``R`` in F_q^n.

    The plain run repeatedly takes the vector covering the most uncovered
    points (lexicographically smallest on ties).  Each extra restart starts
    from a random vector and breaks ties at random; redundant codewords are
    pruned from every run and the smallest code wins (earliest on ties).
    """
    total = q ** n
    vol = _space.ball_volume(q, n, R)
    check_budget(total * vol * 2 * (restarts + 1), budget, "greedy covering search")
    patterns = _space.ball_patterns(q, n, R)
    rng = np.random.default_rng(seed)
    best = None
    for run in range(restarts + 1):
        chosen = _greedy_run(q, n, R, patterns, rng if run else None)
        if best is None or len(chosen) < len(best):
            best = chosen
    words = _space.from_index(np.array(sorted(best), dtype=np.int64), q, n)
    return Code(q, words)


def _greedy_run(q, n, R, patterns, rng):
    total = q ** n
    vol = len(patterns)
    gains = np.full(total, vol, dtype=np.int64)
    covered = np.zeros(total, dtype=np.int64)
    chosen = []
    first = int(rng.integers(total)) if rng is not None else None
    while True:
        if first is not None:
            v, first = first, None
        else:
            top = gains.max()
            if top <= 0:
                break
            if rng is None:
                v = int(np.argmax(gains))
            else:
                v = int(rng.choice(np.nonzero(gains == top)[0]))
        chosen.append(v)
        ball = _space.ball_indices([v], q, n, R, patterns)[0]
        fresh = ball[covered[ball] == 0]
        covered[ball] += 1
        if fresh.size:
            np.subtract.at(gains, _space.ball_indices(fresh, q, n, R, patterns).ravel(), 1)
    # drop codewords whose whole ball is covered twice, newest first
    for v in list(reversed(chosen)):
        ball = _space.ball_indices([v], q, n, R, patterns)[0]
        if np.all(covered[ball] >= 2):
            covered[ball] -= 1
            chosen.remove(v)
    return chosen


@dataclass(frozen=True)
class TableEntry:
    """A known covering-code size ``K_q(n,R)`` or length-function value ``l_q(r,R)``.

    ``exact`` is False for upper bounds.  ``strict`` marks quoted strict
    inequalities (``l < value``).  ``expression`` records closed forms.
    """

    kind: str
    params: tuple
    value: object
    exact: bool
    citation: str
    expression: str = ""
    strict: bool = False
    notes: tuple = dc_field(default=())

    def __post_init__(self):
        if not self.citation:
            raise BadParams("table entries need a citation")
        if self.value < 1:
            raise BadParams("table values must be at least 1")

    def as_dict(self):
        return {"kind": self.kind, "params": list(self.params), "value": self.value,
                "exact": self.exact, "strict": self.strict, "expression": self.expression,
                "citation": self.citation}


K_TABLE = {
    (2, 15, 3): TableEntry("K", (2, 15, 3), 112, True, "K_2(15,3)=112, Litsyn covering table"),
    (2, 16, 3): TableEntry("K", (2, 16, 3), 192, False, "K_2(16,3) <= 192, Litsyn covering table"),
    (2, 33, 4): TableEntry("K", (2, 33, 4), 2 ** 17 * 3, False, "K_2(33,4) <= 2^17*3, Litsyn covering table",
                           "2^17*3"),
    (2, 33, 5): TableEntry("K", (2, 33, 5), 2 ** 13 * 11, False, "K_2(33,5) <= 2^13*11, best known covering code",
                           "2^13*11"),
}


def _is_prime(x):
    return x >= 2 and all(x % d for d in range(2, int(x ** 0.5) + 1))


def _odd_prime_power(q):
    if q < 3 or q % 2 == 0:
        return None
    p = next(f for f in range(3, q + 1) if q % f == 0)
    m, rest = 0, q
    while rest % p == 0:
        rest //= p
        m += 1
    return (p, m) if rest == 1 else None


def _divisors(x):
    return [d for d in range(1, x + 1) if x % d == 0]


def _lcm(a, b):
    from math import gcd
    return a * b // gcd(a, b)


def _length_candidates(q, r, R):
    """Every quoted length-function upper bound for ``l_q(r, R)``."""
    out = []
    if q == 2:
        if R == 3 and r % 3 == 0:
            m = r // 3
            out.append(TableEntry("length_function", (2, r, 3), 4 ** m - 1, False,
                                  "l_2(3m,3) <= 2^(2m)-1, duals of three-weight Kasami codes", f"2^{2 * m}-1"))
        if R == 3 and r >= 2:
            out.append(TableEntry("length_function", (2, r, 3), 2 ** (r - 1) - 1, False,
                                  "l_2(m,3) <= 2^(m-1)-1, duals of three-weight [2^(m-1)-1,m] codes", f"2^{r - 1}-1"))
        if R == 4 and (r - 1) % 2 == 1 and r >= 2:
            m = r - 1
            out.append(TableEntry("length_function", (2, r, 4), 2 ** (m - 1), False,
                                  "l_2(m+1,4) <= 2^(m-1), duals of four-weight codes, m odd", f"2^{m - 1}"))
        if R == 3:
            for m in range(2, r, 2):
                k = r - m
                if m % k == 0 and k not in (m, m // 2):
                    out.append(TableEntry("length_function", (2, r, 3), 2 ** (m - 1), False,
                                          "l_2(m+k,3) <= 2^(m-1), duals of three-weight [2^(m-1),m+k] codes", f"2^{m - 1}"))
        if R == 5 and r >= 3 and (r - 1) % 4 == 2:
            m = r - 1
            top = 2 ** (m // 2) + 1
            ts = [t for t in _divisors(top) if t != top and t % 3 == 0 and top % _lcm(t, 3) == 0]
            if ts:
                t = max(ts)
                out.append(TableEntry("length_function", (2, r, 5), (2 ** m - 1) // t, False,
                                      "l_2(m+1,5) <= (2^m-1)/t, duals of five-weight codes", f"(2^{m}-1)/{t}"))
        if R == 6 and r >= 4 and (r - 2) % 2 == 0:
            m = r - 2
            top = 2 ** (m // 2) + 1
            ts = [t for t in _divisors(top) if t != top and t % 3 != 0 and top % _lcm(t, 3) == 0]
            if ts:
                t = max(ts)
                out.append(TableEntry("length_function", (2, r, 6), (2 ** m - 1) // t, False,
                                      "l_2(m+2,6) <= (2^m-1)/t, duals of six-weight codes", f"(2^{m}-1)/{t}"))
        if R == 7 and (2 * r) % 5 == 0 and (2 * r // 5) % 6 == 0:
            m = 2 * r // 5
            out.append(TableEntry("length_function", (2, r, 7), 2 ** m - 1, False,
                                  "l_2(5m/2,7) <= 2^m-1, duals of seven-weight cyclic codes, m = 0 mod 6", f"2^{m}-1"))
    if q % 2 == 1:
        if r % 2 == 0:
            m = r // 2
            if m % 2 == 1 and R == 3:
                out.append(TableEntry("length_function", (q, r, 3), q ** m - 1, False,
                                      "l_q(2m,3) <= q^m-1, duals of three-weight codes, q odd, m odd", f"{q}^{m}-1"))
            if m % 2 == 0 and m and R == 4:
                out.append(TableEntry("length_function", (q, r, 4), q ** m - 1, False,
                                      "l_q(2m,4) <= q^m-1, duals of four-weight codes, q odd, m even", f"{q}^{m}-1"))
        else:
            m = (r - 1) // 2
            if m >= 1 and m % 2 == 1 and R == 4:
                out.append(TableEntry("length_function", (q, r, 4), q ** m, False,
                                      "l_q(2m+1,4) <= q^m, duals of four-weight codes, q odd, m odd", f"{q}^{m}"))
            if m >= 2 and m % 2 == 0 and R == 6:
                out.append(TableEntry("length_function", (q, r, 6), q ** m, False,
                                      "l_q(2m+1,6) <= q^m, duals of six-weight codes, q odd, m even", f"{q}^{m}"))
        if _is_prime(q) and R == 2 and r % 2 == 0 and r >= 2:
            out.append(TableEntry("length_function", (q, r, 2), (q ** r - 1) // 2, False,
                                  "l_p(m,2) <= (p^m-1)/2, duals of two-weight codes, m even",
                                  f"({q}^{r}-1)/2"))
    if r == 5 and R == 3 and q >= 2:
        val = 2.884 * q ** (2 / 3) * log(q) ** (1 / 3)
        out.append(TableEntry("length_function", (q, 5, 3), val, False,
                              "l_q(5,3) < 2.884 q^(2/3) (ln q)^(1/3), quoted length-function bound",
                              "2.884*q^(2/3)*(ln q)^(1/3)", strict=True))
    return out


def min_feasible_length(q, r, R):
    """Smallest n with ``ball_volume(q, n, R) >= q**r`` (necessary for l_q(r,R) <= n)."""
    target = q ** r
    lo = hi = max(r, 1)
    while _space.ball_volume(q, hi, R) < target:
        lo, hi = hi + 1, 2 * hi
    while lo < hi:
        mid = (lo + hi) // 2
        if _space.ball_volume(q, mid, R) < target:
            lo = mid + 1
        else:
            hi = mid
    return lo


def table_lookup(kind, params):
    """Embedded value for ``K_q(n,R)`` (``kind="K"``) or ``l_q(r,R)``.

    Length-function entries that fall below the sphere-covering minimum
    length for the given ``q`` are discarded as inapplicable.  The smallest
    remaining quoted value is returned.  Raises :class:`NotFound` otherwise.
    """
    params = tuple(int(x) for x in params)
    if kind == "K":
        if params in K_TABLE:
            return K_TABLE[params]
        raise NotFound(f"no quoted value for K_{params[0]}({params[1]},{params[2]})")
    if kind in ("length_function", "l"):
        q, r, R = params
        if r < R:
            raise NotFound("l_q(r,R) is defined for r >= R")
        floor_n = min_feasible_length(q, r, R)
        found = [e for e in _length_candidates(q, r, R) if e.value >= floor_n]
        if not found:
            raise NotFound(f"no quoted value for l_{q}({r},{R})")
        return min(found, key=lambda e: e.value)
    raise BadParams(f"unknown table kind {kind!r}")


def table_entries():
    """The fixed K entries plus the closed-form length entry, for export."""
    closed = TableEntry("length_function", ("q", 5, 3), 1, False,
                        "l_q(5,3) < 2.884 q^(2/3) (ln q)^(1/3), quoted length-function bound",
                        "2.884*q^(2/3)*(ln q)^(1/3)", strict=True)
    return list(K_TABLE.values()) + [closed]
