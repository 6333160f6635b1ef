"""Finite-field arithmetic and linear algebra over GF(q).

Field elements are integer indices ``0..q-1``.  For an extension field
GF(p^m) the index ``i`` encodes the polynomial whose coefficients are the
base-``p`` digits of ``i`` (lowest degree first), so ``0..p-1`` is the prime
subfield and ``p`` is the class of ``x``.
"""
from functools import lru_cache
from itertools import product

import numpy as np

from .config import MAX_FIELD_ORDER
from .exceptions import BadParams, NotPrimePower


def factor_prime_power(q):
    """Return ``(p, m)`` with ``q == p**m`` or raise :class:`NotPrimePower`."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    p = next(f for f in range(2, q + 1) if q % f == 0)
    m, rest = 0, q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise NotPrimePower(f"{q} has at least two distinct prime factors")
    return p, m


def _poly_mod(a, f, p):
    # a, f low-degree-first; f monic
    a = list(a)
    deg_f = len(f) - 1
    for top in range(len(a) - 1, deg_f - 1, -1):
        c = a[top] % p
        if c:
            shift = top - deg_f
            for j, fj in enumerate(f):
                a[shift + j] = (a[shift + j] - c * fj) % p
    a = [x % p for x in a[:deg_f]]
    return a + [0] * (deg_f - len(a))


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _is_irreducible(f, p):
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            g = list(low) + [1]
            if not any(_poly_mod(f, g, p)):
                return False
    return True


def smallest_irreducible(p, m):
    """Lexicographically smallest monic irreducible of degree ``m`` over GF(p).

    Coefficients are compared lowest degree first; the returned list includes
    the leading 1.
    """
    for low in product(range(p), repeat=m):
        f = list(low) + [1]
        if f[0] == 0:
            continue
        if _is_irreducible(f, p):
            return f
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class Field:
    """GF(q) with dense operation tables.

    Parameters
    ----------
    q : int
        Field order, a prime power not larger than ``MAX_FIELD_ORDER``.

    Attributes
    ----------
    p, m_ext : int
        Characteristic and extension degree.
    irreducible : tuple
        Defining polynomial, low degree first (empty for prime fields).
    add, sub, mul : ndarray of shape (q, q)
    neg, inv : ndarray of shape (q,)
        ``inv[0]`` is 0 by convention.
    primitive : int
        The smallest element index generating the multiplicative group.
    exp_table, log_table : ndarray
        ``exp_table[i] = primitive**i`` for ``0 <= i < q-1``; ``log_table[0]``
        is -1.
    """

    def __init__(self, q):
        p, m = factor_prime_power(q)
        if q > MAX_FIELD_ORDER:
            raise BadParams(f"field order {q} exceeds the supported maximum {MAX_FIELD_ORDER}")
        self.q, self.p, self.m_ext = q, p, m
        digits = np.array([[(i // p ** j) % p for j in range(m)] for i in range(q)], dtype=np.int64)
        weights = p ** np.arange(m)
        self.add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        self.sub = ((digits[:, None, :] - digits[None, :, :]) % p) @ weights
        self.neg = ((-digits) % p) @ weights
        if m == 1:
            self.irreducible = ()
            mul = np.outer(np.arange(q), np.arange(q)) % p
        else:
            f = smallest_irreducible(p, m)
            self.irreducible = tuple(f)
            mul = np.zeros((q, q), dtype=np.int64)
            polys = [list(row) for row in digits]
            for a in range(1, q):
                for b in range(a, q):
                    c = _poly_mod(_poly_mul(polys[a], polys[b], p), f, p)
                    mul[a, b] = mul[b, a] = int(np.dot(c, weights))
        self.mul = mul.astype(np.int64)
        self.add = self.add.astype(np.int64)
        self.sub = self.sub.astype(np.int64)
        self.neg = self.neg.astype(np.int64)
        self.primitive, self.exp_table = self._find_primitive()
        self.log_table = np.full(q, -1, dtype=np.int64)
        self.log_table[self.exp_table] = np.arange(q - 1)
        self.inv = np.zeros(q, dtype=np.int64)
        nz = np.arange(1, q)
        self.inv[nz] = self.exp_table[(-self.log_table[nz]) % (q - 1)]
        for table in (self.add, self.sub, self.mul, self.neg, self.inv, self.exp_table, self.log_table):
            table.setflags(write=False)

    def _find_primitive(self):
        q = self.q
        for g in range(1, q):
            powers = [1]
            x = 1
            for _ in range(q - 2):
                x = int(self.mul[x, g])
                if x == 1:
                    break
                powers.append(x)
            if len(powers) == q - 1:
                return g, np.array(powers, dtype=np.int64)
        raise AssertionError("multiplicative group is not cyclic")  # pragma: no cover

    def __repr__(self):
        return f"Field(q={self.q})"

    def __eq__(self, other):
        return isinstance(other, Field) and other.q == self.q

    def __hash__(self):
        return hash(("Field", self.q))

    def __reduce__(self):
        return (field_make, (self.q,))

    @property
    def is_prime(self):
        return self.m_ext == 1

    def power(self, a, e):
        """``a**e`` for a single element (``0**0 == 1``)."""
        if e == 0:
            return 1
        if a == 0:
            return 0
        return int(self.exp_table[(int(self.log_table[a]) * e) % (self.q - 1)])

    def digits(self, a):
        """Base-``p`` coordinates of element ``a`` over the prime subfield."""
        return [(a // self.p ** j) % self.p for j in range(self.m_ext)]


@lru_cache(maxsize=None)
def field_make(q):
    """Build (and cache) GF(q)."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    return Field(q)


def as_matrix(rows, field):
    """Validate ``rows`` as a 2-D matrix of element indices of ``field``."""
    m = np.asarray(rows, dtype=np.int64)
    if m.ndim == 1:
        m = m.reshape(1, -1) if m.size else m.reshape(0, 0)
    if m.ndim != 2:
        raise BadParams("matrix must be two-dimensional")
    if m.size and (m.min() < 0 or m.max() >= field.q):
        raise BadParams(f"matrix entries must lie in 0..{field.q - 1}")
    return m


def rref(m, field):
    """Reduced row-echelon form and rank over ``field``.

    Pivots are taken in the leftmost available column, from the lowest row
    index at or below the current row.
    """
    a = as_matrix(m, field).copy()
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = field.mul[field.inv[a[r, c]], a[r]]
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] = field.sub[a[i], field.mul[a[i, c], a[r]]]
        r += 1
    return a, r


def pivot_columns(reduced):
    pivots = []
    for row in reduced:
        nz = np.nonzero(row)[0]
        if nz.size == 0:
            break
        pivots.append(int(nz[0]))
    return pivots


def row_basis(m, field):
    """Rows of the RREF that are nonzero."""
    reduced, rank = rref(m, field)
    return reduced[:rank]


def nullspace(m, field):
    """Basis (as rows) of ``{v : m @ v == 0}`` over ``field``."""
    a = as_matrix(m, field)
    cols = a.shape[1]
    reduced, rank = rref(a, field) if a.shape[0] else (a, 0)
    pivots = pivot_columns(reduced[:rank])
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = field.neg[reduced[row, f]]
    return basis


def matmul(a, b, field):
    """Matrix product over ``field``."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if field.is_prime:
        return (a @ b) % field.q
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k in range(a.shape[1]):
        out = field.add[out, field.mul[a[:, k][:, None], b[k][None, :]]]
    return out


def span_equal(a, b, field):
    """True when the row spaces of ``a`` and ``b`` coincide."""
    ra = row_basis(a, field) if len(a) else np.zeros((0, np.shape(b)[1]), dtype=np.int64)
    rb = row_basis(b, field) if len(b) else np.zeros((0, np.shape(a)[1]), dtype=np.int64)
    return ra.shape == rb.shape and bool(np.array_equal(ra, rb))
