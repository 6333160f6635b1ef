"""Locality of linear codes, (r, delta) recovery sets and LRC bounds."""
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations
from math import comb, floor, log

import numpy as np

from .bounds import C_ASSUMPTION, BoundResult, _inapplicable
from .codes import LinearCode, dual, min_distance
from .config import check_budget
from .exceptions import BadParams, BudgetExceeded, DegenerateCoordinate, MissingParam

EXHAUSTIVE_MAX_N = 16


@dataclass(frozen=True)
class Certificate:
    """Recovery set ``S`` (which contains ``coordinate``) and its punctured distance.

    ``distance`` is None when the punctured code is ``{0}`` (infinite
    distance).
    """

    coordinate: int
    S: tuple
    distance: object

    @property
    def helpers(self):
        return tuple(i for i in self.S if i != self.coordinate)


@dataclass
class LocalityProfile:
    """Measured locality with one certificate per recoverable coordinate.

    ``per_coordinate[j]`` is None for degenerate (identically zero) or
    unrecoverable coordinates; those are listed in ``degenerate`` and
    ``unrecoverable``.  ``r`` is None when any coordinate is unrecoverable.
    """

    r: object
    per_coordinate: list
    delta: int = 2
    degenerate: list = dc_field(default_factory=list)
    unrecoverable: list = dc_field(default_factory=list)


def _as_linear(c):
    if not isinstance(c, LinearCode):
        if not (c.is_linear or c.check_linear()):
            raise BadParams("locality analysis needs a linear code")
        c = c.to_linear()
    return c


def punctured_distance(c, S, budget=None):
    """Minimum distance of ``C|_S``; None for the zero code (infinite distance)."""
    c = _as_linear(c)
    S = list(S)
    if c.k == 0:
        return None
    check_budget(c.size * len(S), budget, "punctured distance")
    words = np.unique(c.encode(_all_messages(c))[:, S], axis=0)
    w = np.count_nonzero(words, axis=1)
    w = w[w > 0]
    return int(w.min()) if len(w) else None


def _all_messages(c):
    from . import _space
    return _space.all_vectors(c.q, c.k)


def locality_profile(c, strict=False, budget=None):
    """Locality from minimum-weight dual codewords covering each coordinate.

    The locality of coordinate i is the smallest weight of a dual codeword
    with i in its support, minus one.  Ties go to the lexicographically
    smallest support.  With ``strict=True`` a degenerate coordinate raises
    :class:`DegenerateCoordinate` instead of being reported.
    """
    c = _as_linear(c)
    n = c.n
    zero_cols = [j for j in range(n) if c.k == 0 or not np.any(c.generator[:, j])]
    if strict and zero_cols:
        raise DegenerateCoordinate(f"coordinates {zero_cols} are identically zero")
    d = dual(c)
    words = d.codewords(budget)
    supports = sorted({tuple(np.nonzero(w)[0].tolist()) for w in words if np.any(w)},
                      key=lambda s: (len(s), s))
    per, unrec = [None] * n, []
    for j in range(n):
        if j in zero_cols:
            continue
        best = next((s for s in supports if j in s), None)
        if best is None:
            unrec.append(j)
        else:
            per[j] = Certificate(j, best, 2)
    locs = [len(cert.S) - 1 for cert in per if cert is not None]
    r = None if unrec else max(locs, default=0)
    return LocalityProfile(r, per, 2, zero_cols, unrec)


@dataclass
class RDeltaVerdict:
    """Result of an (r, delta) check; ``witness`` is the first failing coordinate."""

    ok: bool
    r: int
    delta: int
    certificates: list
    witness: object = None
    reason: str = ""


def _valid_set(c, j, S, r, delta, budget):
    if len(S) > r + delta - 1:
        return None, "cardinality"
    dist = punctured_distance(c, S, budget)
    if dist is not None and dist < delta:
        return None, f"punctured distance {dist} < {delta}"
    return Certificate(j, tuple(S), dist), ""


def verify_r_delta(c, r, delta, certificates=None, max_n=EXHAUSTIVE_MAX_N, budget=None):
    """Check that every coordinate has a recovery set of size ``<= r+delta-1``
    whose punctured code has distance ``>= delta``.

    ``certificates`` is a list of index sets.  A list of length n is read
    per coordinate (``j`` is added to the j-th set); otherwise coordinate j
    uses the first set containing it.  Without certificates the search runs
    over subsets containing j by increasing size, lexicographic within a
    size, and the first valid set wins.
    """
    c = _as_linear(c)
    n = c.n
    if r < 0 or delta < 1:
        raise BadParams("need r >= 0 and delta >= 1")
    certs = []
    if certificates is not None:
        sets = [tuple(sorted(set(int(i) for i in s))) for s in certificates]
        if any(i < 0 or i >= n for s in sets for i in s):
            raise BadParams("certificate index out of range")
        for j in range(n):
            if len(sets) == n:
                S = tuple(sorted(set(sets[j]) | {j}))
            else:
                S = next((s for s in sets if j in s), None)
                if S is None:
                    return RDeltaVerdict(False, r, delta, certs, j, "no certificate")
            cert, why = _valid_set(c, j, S, r, delta, budget)
            if cert is None:
                return RDeltaVerdict(False, r, delta, certs, j, why)
            certs.append(cert)
        return RDeltaVerdict(True, r, delta, certs)
    if n > max_n:
        raise BudgetExceeded(n, max_n, "exhaustive recovery-set search length")
    size = min(r + delta - 1, n)
    check_budget(n * sum(comb(n - 1, s) for s in range(size)) * c.size, budget, "recovery-set search")
    others = list(range(n))
    for j in range(n):
        found = None
        rest = [i for i in others if i != j]
        for s in range(size):
            for extra in combinations(rest, s):
                cert, _ = _valid_set(c, j, sorted((j,) + extra), r, delta, budget)
                if cert is not None:
                    found = cert
                    break
            if found:
                break
        if found is None:
            return RDeltaVerdict(False, r, delta, certs, j, "no valid recovery set")
        certs.append(found)
    return RDeltaVerdict(True, r, delta, certs)


def _ceil_div(a, b):
    return -(-a // b)


def _length_result(name, value, cite, notes):
    if value < 1:
        return _inapplicable(name, "value below 1", cite, "length", notes)
    return BoundResult(name, value, True, "", cite, notes, "length")


def lrc_bounds(n, k, r, delta=2, q=None, R=None, c=None):
    """Distance ceilings and length ceilings for locally recoverable codes.

    Length ceilings apply to Singleton-optimal codes (optimal (r, delta)
    codes when ``delta > 2``) of minimum distance ``2R+1`` or ``2R+2`` and
    need ``q`` and ``R``; their dimension conditions are checked and a
    failed condition makes the result inapplicable.
    """
    if r < 1 or k < 1 or n < k:
        raise BadParams("need r >= 1 and 1 <= k <= n")
    if delta < 2:
        raise BadParams("delta must be at least 2")
    out = []
    for name, value, cite in (
            ("lrc_singleton", n - k + 2 - _ceil_div(k, r), "d <= n - k + 2 - ceil(k/r)"),
            ("r_delta_singleton", n - k + 1 - (_ceil_div(k, r) - 1) * (delta - 1),
             "d <= n - k + 1 - (ceil(k/r) - 1)(delta - 1)")):
        out.append(BoundResult(name, value, True, "", cite, [], "distance") if value >= 1
                   else _inapplicable(name, "ceiling below 1", cite, "distance"))
    if R is None:
        return out
    if q is None:
        raise MissingParam("length ceilings need q")
    if R < 1:
        raise BadParams("R must be positive")
    target = "Singleton-optimal" if delta == 2 else "optimal (r, delta)"
    dist_note = f"{target} codes with d = {2 * R + 1} or {2 * R + 2}"
    if delta == 2:
        cond, cond_text, prefix = k <= R * r, "k <= R r", "lrc"
    else:
        cond = Fraction(k) <= (Fraction(R + 1, delta + 1) + 1) * r
        cond_text, prefix = "k <= ((R+1)/(delta+1) + 1) r", "r_delta"
    cite_c = "n <= c q^((2R+1)/R) (ln q)^(1/R)"
    cite_b = "n <= R (q^4 - 1)/(q - 1)"
    name_c, name_b = f"{prefix}_length_constant", f"{prefix}_length_block"
    if not cond:
        out.append(_inapplicable(name_c, f"requires {cond_text}", cite_c, "length", [C_ASSUMPTION]))
        out.append(_inapplicable(name_b, f"requires {cond_text}", cite_b, "length"))
        return out
    if c is None:
        out.append(_inapplicable(name_c, "constant c not supplied", cite_c, "length", [C_ASSUMPTION]))
    else:
        val = floor(c * q ** ((2 * R + 1) / R) * log(q) ** (1 / R))
        out.append(_length_result(name_c, val, cite_c, [C_ASSUMPTION, dist_note, cond_text]))
    out.append(_length_result(name_b, R * (q ** 4 - 1) // (q - 1), cite_b, [dist_note, cond_text]))
    return out


@dataclass(frozen=True)
class Optimality:
    """Gap between the measured distance and the Singleton-like ceiling."""

    optimal: bool
    defect: int
    r: int
    d: int
    ceiling: int
    delta: int


def measured_locality(c, delta=2, budget=None):
    """Smallest r for which every coordinate has an (r, delta) recovery set."""
    c = _as_linear(c)
    if delta == 2:
        prof = locality_profile(c, budget=budget)
        if prof.r is not None:
            return prof.r
    for r in range(0, c.n + 1):
        if verify_r_delta(c, r, delta, budget=budget).ok:
            return r
    return None


def classify_optimal(c, delta=2, budget=None):
    """Compare ``d`` with ``n - k + 1 - (ceil(k/r) - 1)(delta - 1)`` at the measured r."""
    c = _as_linear(c)
    r = measured_locality(c, delta, budget)
    if r is None:
        raise BadParams(f"no (r, {delta}) recovery sets exist for this code")
    r_eff = max(r, 1)
    d = min_distance(c, budget=budget)
    ceiling = c.n - c.k + 1 - (_ceil_div(c.k, r_eff) - 1) * (delta - 1)
    return Optimality(d == ceiling, ceiling - d, r, d, ceiling, delta)
