"""Code representations and Hamming-metric primitives.

Two representations are used throughout the package:

* :class:`Code` holds an explicit, duplicate-free list of codewords.
* :class:`LinearCode` holds a full-rank generator matrix; codewords are
  enumerated on demand under the work budget.

Every function below accepts either one unless stated otherwise.
"""
from functools import cached_property

import numpy as np

from . import _space
from .algebra import Field, as_matrix, field_make, matmul, nullspace, rref
from .config import check_budget
from .exceptions import (BadParams, LengthMismatch, NotAnExtension,
                         TrivialCode)


def _as_field(field):
    return field if isinstance(field, Field) else field_make(int(field))


class Code:
    """An explicit code: a set of distinct words in F_q^n.

    Parameters
    ----------
    field : Field or int
    words : array-like of shape (M, n)
        Codewords as element indices.  Duplicates are rejected.
    is_linear : bool
        Caller's claim of linearity; :meth:`check_linear` verifies it.
    """

    def __init__(self, field, words, is_linear=False):
        self.field = _as_field(field)
        words = np.asarray(words, dtype=np.int64)
        if words.ndim != 2:
            raise BadParams("words must be a 2-D array")
        if words.size and (words.min() < 0 or words.max() >= self.field.q):
            raise BadParams(f"coordinates must lie in 0..{self.field.q - 1}")
        if len(np.unique(words, axis=0)) != len(words):
            raise BadParams("duplicate codewords")
        words.setflags(write=False)
        self.words = words
        self.n = words.shape[1]
        self.is_linear = bool(is_linear)

    @property
    def q(self):
        return self.field.q

    @property
    def size(self):
        return len(self.words)

    def __len__(self):
        return self.size

    def __repr__(self):
        kind = "linear" if self.is_linear else "explicit"
        return f"Code(q={self.q}, n={self.n}, size={self.size}, {kind})"

    def codewords(self, budget=None):
        return self.words

    def check_linear(self):
        """Verify closure under addition and scalar multiplication (|C| <= 2**16)."""
        if self.size > 2 ** 16:
            raise BadParams("linearity check limited to 2**16 codewords")
        f = self.field
        present = set(_space.to_index(self.words, f.q).tolist()) if self.size else set()
        if 0 not in present:
            return False
        for a in self.words:
            for s in range(2, f.q):
                if int(_space.to_index(f.mul[s, a], f.q)[0]) not in present:
                    return False
            sums = f.add[a[None, :], self.words]
            if not set(_space.to_index(sums, f.q).tolist()) <= present:
                return False
        return True

    def to_linear(self):
        """Row-reduce the words into a :class:`LinearCode` (caller asserts linearity)."""
        basis, rank = rref(self.words, self.field)
        return LinearCode(self.field, basis[:rank], n=self.n)


class LinearCode:
    """A linear [n, k]_q code given by a full-rank generator matrix.

    Parameters
    ----------
    field : Field or int
    generator : array-like of shape (k, n)
        Must have rank ``k``.  ``k = 0`` (the zero code) is allowed when
        ``n`` is passed explicitly.
    """

    is_linear = True

    def __init__(self, field, generator, n=None):
        self.field = _as_field(field)
        g = np.asarray(generator, dtype=np.int64)
        if g.size == 0:
            if n is None:
                raise BadParams("length required for the zero code")
            g = np.zeros((0, n), dtype=np.int64)
        g = as_matrix(g, self.field)
        if n is not None and g.shape[1] != n:
            raise BadParams("generator width does not match n")
        if g.shape[0]:
            _, rank = rref(g, self.field)
            if rank != g.shape[0]:
                raise BadParams(f"generator has rank {rank} < {g.shape[0]} rows")
        g.setflags(write=False)
        self.generator = g
        self.k, self.n = g.shape

    @property
    def q(self):
        return self.field.q

    @property
    def size(self):
        return self.q ** self.k

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}]_{self.q})"

    @cached_property
    def parity_check(self):
        h = nullspace(self.generator, self.field) if self.k else np.eye(self.n, dtype=np.int64)
        h.setflags(write=False)
        return h

    def encode(self, messages):
        messages = np.atleast_2d(np.asarray(messages, dtype=np.int64))
        if self.k == 0:
            return np.zeros((len(messages), self.n), dtype=np.int64)
        return matmul(messages, self.generator, self.field)

    def codewords(self, budget=None):
        """All q**k codewords, messages taken in lexicographic order."""
        check_budget(self.size * max(self.n, 1), budget, "codeword enumeration")
        return self.encode(_space.all_vectors(self.q, self.k))

    def syndrome(self, words):
        h = self.parity_check
        words = np.atleast_2d(np.asarray(words, dtype=np.int64))
        return matmul(words, h.T, self.field)

    def to_code(self, budget=None):
        return Code(self.field, self.codewords(budget), is_linear=True)


def hamming(a, b):
    """Number of coordinates in which ``a`` and ``b`` differ."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise LengthMismatch(f"lengths {a.shape} and {b.shape} differ")
    return int(np.count_nonzero(a != b))


def weight(a):
    return int(np.count_nonzero(np.asarray(a)))


def min_distance(c, method="auto", budget=None):
    """Exact minimum distance.

    Linear codes use the minimum nonzero weight over all q**k codewords;
    explicit codes (or ``method="pairwise"``) compare all pairs.
    """
    if c.size < 2:
        raise TrivialCode("minimum distance needs at least two codewords")
    if method not in ("auto", "linear", "pairwise"):
        raise BadParams(f"unknown method {method!r}")
    linear_path = method == "linear" or (method == "auto" and isinstance(c, LinearCode))
    if linear_path:
        if not isinstance(c, LinearCode):
            c = c.to_linear()
        check_budget(c.size * c.n, budget, "minimum distance")
        w = np.count_nonzero(c.codewords(budget), axis=1)
        return int(w[w > 0].min())
    words = c.codewords(budget)
    check_budget(len(words) * (len(words) - 1) // 2, budget, "pairwise minimum distance")
    return _space.pairwise_min_distance(words, c.q)


def weight_distribution(c, budget=None):
    """Counts ``A_0..A_n`` of codewords of each Hamming weight."""
    words = c.codewords(budget)
    return np.bincount(np.count_nonzero(words, axis=1), minlength=c.n + 1)


def dual(c):
    """The dual code (generator = nullspace of the generator)."""
    if not isinstance(c, LinearCode):
        c = c.to_linear()
    if c.k == 0:
        return LinearCode(c.field, np.eye(c.n, dtype=np.int64))
    return LinearCode(c.field, nullspace(c.generator, c.field), n=c.n)


def extend_product(c, s, budget=None):
    """The product ``C x F_q^s`` of length ``n + s``."""
    if s < 0:
        raise BadParams("s must be non-negative")
    if s == 0:
        return c
    q = c.q
    if isinstance(c, LinearCode):
        g = np.zeros((c.k + s, c.n + s), dtype=np.int64)
        g[:c.k, :c.n] = c.generator
        g[c.k:, c.n:] = np.eye(s, dtype=np.int64)
        return LinearCode(c.field, g)
    check_budget(c.size * q ** s * (c.n + s), budget, "product code materialisation")
    tails = _space.all_vectors(q, s)
    words = np.concatenate([np.repeat(c.words, len(tails), axis=0),
                            np.tile(tails, (c.size, 1))], axis=1)
    return Code(c.field, words, is_linear=c.is_linear)


def subfield_subcode(c, target=None, budget=None):
    """Codewords whose coordinates all lie in the prime subfield, over GF(p).

    For a :class:`LinearCode` the subcode is computed as a nullspace over
    GF(p) (each parity check splits into ``m`` prime-field equations); an
    explicit code is filtered word by word.  A code already over a prime
    field is returned unchanged.
    """
    f = c.field
    if target is not None and int(target) != f.p:
        raise NotAnExtension(f"GF({target}) is not the prime subfield of GF({f.q})")
    if f.is_prime:
        return c
    sub = field_make(f.p)
    if isinstance(c, LinearCode):
        h = c.parity_check
        rows = []
        for row in h:
            digits = np.array([f.digits(int(x)) for x in row], dtype=np.int64)  # (n, m)
            rows.extend(digits.T)
        if not rows:
            return LinearCode(sub, np.eye(c.n, dtype=np.int64))
        basis = nullspace(np.array(rows, dtype=np.int64), sub)
        return LinearCode(sub, basis, n=c.n)
    words = c.codewords(budget)
    keep = words[(words < f.p).all(axis=1)]
    return Code(sub, keep, is_linear=c.is_linear)


def log_floor(size, q):
    """Largest ``t`` with ``q**t <= size`` and whether ``size == q**t`` exactly."""
    if size < 1:
        raise BadParams("size must be positive")
    t, power = 0, 1
    while power * q <= size:
        power *= q
        t += 1
    return t, power == size


def singleton_defect(c, budget=None):
    """``n + 1 - d - log_q|C|`` with the logarithm floored for non-power sizes."""
    d = min_distance(c, budget=budget)
    t = c.k if isinstance(c, LinearCode) else log_floor(c.size, c.q)[0]
    return c.n + 1 - d - t
