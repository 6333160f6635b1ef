"""Constructors for the concrete code families used by the bounds.

Every constructor runs a self-check of the advertised parameters before
returning; a failed check raises :class:`SelfCheckFailed`.
"""
from dataclasses import dataclass, field as dc_field
from itertools import product

import numpy as np

from . import _space
from .algebra import field_make, nullspace, rref
from .codes import LinearCode, min_distance, weight_distribution
from .exceptions import BadParams, BudgetExceeded, SelfCheckFailed

FAMILIES = ("hamming", "simplex", "golay_binary", "golay_ternary", "reed_solomon",
            "reed_muller1", "kasami", "block_diagonal", "repetition")

# self-checks skip anything costlier than this many elementary operations
SELF_CHECK_LIMIT = 2 ** 22

# systematic generators of the cyclic Golay codes
# (generator polynomials 1+x^2+x^4+x^5+x^6+x^10+x^11 and 2+x^2+2x^3+x^4+x^5)
_GOLAY_BINARY = """
10000000000010101110001
01000000000011111001001
00100000000011010010101
00010000000011000111011
00001000000011001101100
00000100000001100110110
00000010000000110011011
00000001000010110111100
00000000100001011011110
00000000010000101101111
00000000001010111000110
00000000000101011100011
"""
_GOLAY_TERNARY = """
10000020121
01000012221
00100011101
00010011022
00001021220
00000102122
"""


def _rows(text):
    return np.array([[int(ch) for ch in line] for line in text.split()], dtype=np.int64)


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its integer parameters (``points`` only for RS)."""

    family: str
    params: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise BadParams(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")


def projective_columns(q, m):
    """Nonzero vectors of F_q^m whose first nonzero entry is 1, lexicographic."""
    cols = []
    for v in product(range(q), repeat=m):
        nz = [x for x in v if x]
        if nz and nz[0] == 1:
            cols.append(v)
    return np.array(cols, dtype=np.int64).T


def hamming_code(q, m):
    if m < 2:
        raise BadParams("Hamming codes need m >= 2")
    f = field_make(q)
    return LinearCode(f, nullspace(projective_columns(q, m), f))


def simplex_code(q, m):
    if m < 2:
        raise BadParams("simplex codes need m >= 2")
    return LinearCode(field_make(q), projective_columns(q, m))


def golay_binary():
    return LinearCode(2, _rows(_GOLAY_BINARY))


def golay_ternary():
    return LinearCode(3, _rows(_GOLAY_TERNARY))


def reed_solomon(q, n, k, points=None):
    """Evaluations of polynomials of degree < k at ``points`` (default 0..n-1)."""
    f = field_make(q)
    if points is None:
        points = list(range(n))
    points = [int(x) for x in points]
    if not 1 <= n <= q or not 1 <= k <= n:
        raise BadParams("reed_solomon needs 1 <= k <= n <= q")
    if len(points) != n or len(set(points)) != n or min(points) < 0 or max(points) >= q:
        raise BadParams("evaluation points must be n distinct field elements")
    g = np.array([[f.power(x, i) for x in points] for i in range(k)], dtype=np.int64)
    return LinearCode(f, g)


def reed_muller1(m):
    """First-order binary Reed-Muller code of length 2**m."""
    if m < 1:
        raise BadParams("reed_muller1 needs m >= 1")
    pts = _space.all_vectors(2, m)
    g = np.vstack([np.ones(2 ** m, dtype=np.int64), pts.T])
    return LinearCode(2, g)


def _trace(f, z, degree):
    # sum of z^(2^i), i < degree, in a characteristic-2 field
    acc, x = 0, z
    for _ in range(degree):
        acc = int(f.add[acc, x])
        x = int(f.mul[x, x])
    return acc


def kasami(m):
    """Binary [2^(2m)-1, 3m] Kasami code from trace maps over GF(2^(2m))."""
    if m < 1:
        raise BadParams("kasami needs m >= 1")
    q = 4 ** m
    if q > 256:
        raise BadParams("kasami supported for m <= 4")
    f = field_make(q)
    xs = [int(v) for v in f.exp_table]
    sub = [y for y in range(1, q) if f.power(y, 2 ** m) == y]
    norms = [f.power(x, 2 ** m + 1) for x in xs]
    rows = []
    for a in sub:
        rows.append([_trace(f, int(f.mul[a, nx]), m) for nx in norms])
    for j in range(2 * m):
        b = 2 ** j
        rows.append([_trace(f, int(f.mul[b, x]), 2 * m) for x in xs])
    red, rank = rref(np.array(rows, dtype=np.int64), field_make(2))
    return LinearCode(2, red[:rank])


def block_diagonal(q, m, u):
    """Direct sum of ``u`` q-ary Hamming codes (block-diagonal parity check)."""
    if m < 1 or u < 1:
        raise BadParams("block_diagonal needs m >= 1 and u >= 1")
    f = field_make(q)
    h = block_diagonal_parity_check(q, m, u)
    return LinearCode(f, nullspace(h, f), n=h.shape[1])


def block_diagonal_parity_check(q, m, u):
    """The ``u*m x u*(q^m-1)/(q-1)`` matrix with ``u`` projective blocks on the diagonal."""
    return np.kron(np.eye(u, dtype=np.int64), projective_columns(q, m))


def repetition(q, n):
    if n < 1:
        raise BadParams("repetition needs n >= 1")
    return LinearCode(field_make(q), np.ones((1, n), dtype=np.int64))


def advertised(family, p):
    """Advertised ``(n, k, d)`` (``d`` may be None) for a family and its parameters."""
    if family in ("hamming", "simplex", "block_diagonal"):
        q, m = p["q"], p["m"]
        length = (q ** m - 1) // (q - 1)
        if family == "hamming":
            return length, length - m, 3
        if family == "simplex":
            return length, m, q ** (m - 1)
        u = p["u"]
        return u * length, u * (length - m), 3 if m >= 2 else None
    if family == "golay_binary":
        return 23, 12, 7
    if family == "golay_ternary":
        return 11, 6, 5
    if family == "reed_solomon":
        return p["n"], p["k"], p["n"] - p["k"] + 1
    if family == "reed_muller1":
        m = p["m"]
        return 2 ** m, m + 1, 2 ** (m - 1)
    if family == "kasami":
        m = p["m"]
        return 4 ** m - 1, 3 * m, 2 ** (2 * m - 1) - 2 ** (m - 1)
    if family == "repetition":
        return p["n"], 1, p["n"]
    raise BadParams(f"unknown family {family!r}")  # pragma: no cover


def kasami_weights(m):
    w = 2 ** (2 * m - 1)
    return {w - 2 ** (m - 1), w, w + 2 ** (m - 1)}


def self_check(code, family, p):
    """Verify advertised parameters; raise :class:`SelfCheckFailed` on mismatch.

    Returns the list of properties that were actually checked (expensive
    checks are skipped beyond ``SELF_CHECK_LIMIT``).
    """
    n, k, d = advertised(family, p)
    if (code.n, code.k) != (n, k):
        raise SelfCheckFailed(f"{family}: got [{code.n},{code.k}], advertised [{n},{k}]")
    checked = ["n", "k"]
    enumerable = code.size * code.n <= SELF_CHECK_LIMIT
    if family == "kasami":
        if enumerable:
            wd = weight_distribution(code)
            found = {w for w in range(1, code.n + 1) if wd[w]}
            if not found <= kasami_weights(p["m"]):
                raise SelfCheckFailed(f"kasami: nonzero weights {sorted(found)}")
            checked.append("weights")
        return checked
    if family == "simplex":
        wd = weight_distribution(code)
        if set(np.nonzero(wd)[0].tolist()) != {0, d}:
            raise SelfCheckFailed("simplex code is not constant weight")
        return checked + ["weights"]
    if d is not None and enumerable and code.k >= 1:
        got = min_distance(code)
        if got != d:
            raise SelfCheckFailed(f"{family}: minimum distance {got}, advertised {d}")
        checked.append("d")
    if family in ("golay_binary", "golay_ternary"):
        r = (d - 1) // 2
        if code.size * _space.ball_volume(code.q, code.n, r) != code.q ** code.n:
            raise SelfCheckFailed(f"{family}: sphere-covering equality fails")
        checked.append("perfect")
    if family == "block_diagonal":
        from .covering import covering_radius
        try:
            res = covering_radius(code, method="coset_leader", budget=SELF_CHECK_LIMIT)
        except BudgetExceeded:
            return checked
        if res.radius > p["u"]:
            raise SelfCheckFailed(f"block_diagonal: covering radius {res.radius} > u={p['u']}")
        checked.append("radius")
    return checked


def construct(spec, **params):
    """Build the code described by ``spec`` (a :class:`FamilySpec` or family name)."""
    if isinstance(spec, str):
        spec = FamilySpec(spec, params)
    fam, p = spec.family, dict(spec.params)
    try:
        if fam == "hamming":
            code = hamming_code(p["q"], p["m"])
        elif fam == "simplex":
            code = simplex_code(p["q"], p["m"])
        elif fam == "golay_binary":
            code = golay_binary()
        elif fam == "golay_ternary":
            code = golay_ternary()
        elif fam == "reed_solomon":
            code = reed_solomon(p["q"], p["n"], p["k"], p.get("points"))
        elif fam == "reed_muller1":
            code = reed_muller1(p["m"])
        elif fam == "kasami":
            code = kasami(p["m"])
        elif fam == "block_diagonal":
            code = block_diagonal(p["q"], p["m"], p["u"])
        else:
            code = repetition(p["q"], p["n"])
    except KeyError as exc:
        raise BadParams(f"{fam}: missing parameter {exc.args[0]!r}") from None
    code.family = spec
    code.checked = self_check(code, fam, p)
    return code
