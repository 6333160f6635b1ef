"""Exhaustive combinatorial list-decodability and the covering-code size check."""
from dataclasses import dataclass

import numpy as np

from . import _space
from .config import check_budget
from .covering import covering_radius
from .exceptions import BadParams, RadiusNotVerified, RadiusTooLarge


@dataclass(frozen=True)
class ListProfile:
    """Largest number of codewords in any radius-``radius`` ball.

    ``witness_center`` is the lexicographically smallest center attaining
    ``max_count``.
    """

    radius: int
    max_count: int
    witness_center: tuple

    def decodable(self, L):
        return self.max_count <= L


def ball_counts(c, radius, budget=None):
    """``counts[x]`` = number of codewords within ``radius`` of the point with index x."""
    if radius < 0:
        raise BadParams("radius must be non-negative")
    q, n = c.q, c.n
    words = c.codewords(budget)
    vol = _space.ball_volume(q, n, radius)
    check_budget(q ** n + len(words) * vol * n, budget, "list-size scan")
    counts = np.zeros(q ** n, dtype=np.int64)
    patterns = _space.ball_patterns(q, n, radius)
    idx = _space.to_index(words, q)
    for start in range(0, len(idx), 1024):
        balls = _space.ball_indices(idx[start:start + 1024], q, n, radius, patterns)
        counts += np.bincount(balls.ravel(), minlength=q ** n)
    return counts


def max_list_size(c, radius, budget=None):
    """Exact maximum of ``|B(x, radius) ∩ C|`` over all ``q**n`` centers."""
    counts = ball_counts(c, radius, budget)
    best = int(np.argmax(counts))
    center = tuple(int(v) for v in _space.from_index(best, c.q, c.n))
    return ListProfile(radius, int(counts[best]), center)


@dataclass(frozen=True)
class CoverVerdict:
    """Outcome of checking ``|C| <= L |C'|`` for a verified cover ``C'``.

    ``census[i]`` counts the codewords of ``C`` within the radius of the
    i-th cover word; ``witness`` is a cover word whose ball holds more than
    ``L`` codewords (always None unless something upstream is broken).
    """

    holds: bool
    code_size: int
    list_size: int
    cover_size: int
    census: tuple
    witness: tuple = None


def verify_covering_bound(c, cover, radius, budget=None):
    """Check ``|C| <= L |cover|`` with ``L`` measured by :func:`max_list_size`."""
    if c.q != cover.q or c.n != cover.n:
        raise BadParams("code and cover must live in the same space")
    res = covering_radius(cover, budget=budget)
    if not res.exact:
        raise RadiusNotVerified("cover radius is not exact")
    if res.radius > radius:
        raise RadiusTooLarge(f"cover radius {res.radius} exceeds {radius}")
    counts = ball_counts(c, radius, budget)
    L = int(counts.max())
    cover_words = cover.codewords(budget)
    census = counts[_space.to_index(cover_words, c.q)]
    witness = None
    bad = np.nonzero(census > L)[0]
    if len(bad):
        witness = tuple(int(v) for v in cover_words[bad[0]])
    holds = c.size <= L * cover.size and witness is None and int(census.sum()) >= c.size
    return CoverVerdict(bool(holds), c.size, L, cover.size, tuple(int(v) for v in census), witness)
