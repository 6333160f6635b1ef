"""Upper bounds on code sizes and lengths, each with an applicability check.

Sizes are exact integers or :class:`PowerValue` forms ``multiplier *
base**exponent``; floating point only appears in closed-form thresholds
that involve logarithms or a caller-supplied constant.
"""
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import ceil, comb, floor, gcd, log

from . import _space
from .codes import LinearCode
from .covering import RadiusResult, covering_radius, table_lookup, K_TABLE
from .exceptions import (BadParams, MissingAux, MissingParam, NothingApplicable,
                         NotFound, NotPerfect, OutOfRange, QEven,
                         RadiusNotVerified, RadiusTooLarge)

C_ASSUMPTION = "constant c supplied by caller"


@dataclass(frozen=True, order=False)
class PowerValue:
    """``multiplier * base**exponent`` kept symbolic for display."""

    multiplier: int
    base: int
    exponent: int

    def __int__(self):
        return self.multiplier * self.base ** self.exponent

    def __str__(self):
        head = f"{self.multiplier}*" if self.multiplier != 1 else ""
        return f"{head}{self.base}^{self.exponent}"


def as_int(value):
    return int(value)


@dataclass
class CodeParams:
    """Parameters of the codes being bounded.

    ``d_list`` defaults to ``(d - 1) // 2`` when only ``d`` is given.
    """

    q: int
    n: int
    d: int = None
    d_list: int = None
    L: int = 1
    k: int = None
    linear: bool = False

    def __post_init__(self):
        if self.q < 2 or self.n < 1:
            raise BadParams("need q >= 2 and n >= 1")
        if self.d is not None and not 1 <= self.d <= self.n:
            raise BadParams("need 1 <= d <= n")
        if self.L < 1:
            raise BadParams("list size must be at least 1")
        if self.d_list is None and self.d is not None:
            self.d_list = (self.d - 1) // 2
        if self.d_list is not None and self.d_list < 0:
            raise BadParams("d_list must be non-negative")


@dataclass
class BoundResult:
    """One evaluated bound.

    ``quantity`` says what ``value`` limits: ``"size"`` (|C|), ``"length"``
    (largest admissible n), ``"distance"`` (largest admissible d) or
    ``"dimension"``.
    """

    name: str
    value: object = None
    applicable: bool = True
    reason: str = ""
    citation: str = ""
    assumptions: list = dc_field(default_factory=list)
    quantity: str = "size"
    tightest: bool = False

    def __post_init__(self):
        if self.applicable and (self.value is None or int(self.value) < 1):
            raise BadParams(f"{self.name}: applicable bounds need a value >= 1")

    @property
    def int_value(self):
        return None if self.value is None else int(self.value)

    def as_dict(self):
        v = self.value
        if isinstance(v, PowerValue):
            v = int(v) if v.exponent <= 256 else str(v)
        return {"name": self.name, "value": v, "applicable": self.applicable,
                "reason": self.reason, "citation": self.citation,
                "assumptions": list(self.assumptions)}


def _inapplicable(name, reason, citation="", quantity="size", assumptions=()):
    return BoundResult(name, None, False, reason, citation, list(assumptions), quantity)


def _size(name, mult, q, exponent, citation, assumptions=()):
    if exponent < 0:
        return _inapplicable(name, f"exponent {exponent} is negative", citation)
    return BoundResult(name, PowerValue(mult, q, exponent), True, "", citation, list(assumptions))


def _need(params, attr):
    val = getattr(params, attr)
    if val is None:
        raise MissingParam(f"parameter {attr} is required")
    return val


def singleton(params):
    d = _need(params, "d")
    return _size("singleton", 1, params.q, params.n - d + 1, "A_q(n,d) <= q^(n-d+1)")


def generalized_singleton_ST(params):
    """``L q^(n - floor((L+1) d_list / L))`` for (d_list, L) list-decodable codes."""
    r = _need(params, "d_list")
    L = params.L
    return _size("list_singleton", L, params.q, params.n - ((L + 1) * r) // L,
                 "|C| <= L q^(n - floor((L+1) d_list / L)) for (d_list,L) list-decodable codes")


def redundancy_list_bound(params):
    r = _need(params, "d_list")
    return _size("redundancy_list", params.L, params.q, params.n - r,
                 "|C| <= L q^(n - d_list) from an [n, n-d_list] cover")


def sphere_packing_list(params):
    r = _need(params, "d_list")
    vol = _space.ball_volume(params.q, params.n, r)
    value = params.L * params.q ** params.n // vol
    if value < 1:
        return _inapplicable("sphere_packing", "value below 1")
    return BoundResult("sphere_packing", value, True, "",
                       "|C| <= L q^n / sum_{j<=d_list} C(n,j)(q-1)^j")


def griesmer_max_k(q, n, d):
    """Largest k with ``sum_{i<k} ceil(d / q^i) <= n`` (linear codes only)."""
    if not 1 <= d <= n:
        raise BadParams("need 1 <= d <= n")
    k, total = 0, 0
    while True:
        nxt = total + -(-d // q ** k)
        if nxt > n:
            return k
        total = nxt
        k += 1


def griesmer(params):
    d = _need(params, "d")
    cite = "n >= sum_{i<k} ceil(d/q^i) for linear [n,k,d]_q codes"
    if not params.linear:
        return _inapplicable("griesmer", "requires linear", cite, assumptions=["requires linear"])
    return _size("griesmer", 1, params.q, griesmer_max_k(params.q, params.n, d), cite, ["requires linear"])


def _exact_radius(cover, radius, budget):
    if radius is None:
        radius = covering_radius(cover, budget=budget)
    if isinstance(radius, RadiusResult):
        if not radius.exact:
            raise RadiusNotVerified(f"covering radius from {radius.method} is not exact")
        return radius.radius
    raise RadiusNotVerified("covering radius must be a RadiusResult")


def covering_code_bound(cover, d_list, L=1, radius=None, n=None, budget=None):
    """``|C| <= L |C'|`` for a verified cover ``C'`` of radius ``<= d_list``.

    ``cover`` is a code (its radius is computed exactly unless an exact
    :class:`RadiusResult` is passed) or a ``K`` table entry.  With ``n``
    larger than the cover's length the cover is extended by ``F_q^s``.
    """
    cite = "|C| <= L |C'| for a covering code C' of radius <= d_list"
    if hasattr(cover, "kind"):
        if cover.kind != "K":
            raise BadParams("only K table entries describe covering codes")
        q, n0, R = cover.params
        size = cover.value
        notes = [f"table entry: {cover.citation}"]
    else:
        R = _exact_radius(cover, radius, budget)
        q, n0, size = cover.q, cover.n, cover.size
        notes = []
    if R > d_list:
        raise RadiusTooLarge(f"cover radius {R} exceeds d_list={d_list}")
    s = 0
    if n is not None:
        if n < n0:
            raise BadParams("cover is longer than the codes being bounded")
        s = n - n0
        if s:
            notes.append(f"cover extended by F_{q}^{s}")
    return BoundResult("covering_code", L * size * q ** s, True, "", cite, notes)


def implied_list_size(code_size, cover_size):
    """Smallest list size compatible with ``|C| <= L |C'|``."""
    return -(-int(code_size) // int(cover_size))


def is_perfect(code, radius):
    return code.size * _space.ball_volume(code.q, code.n, radius) == code.q ** code.n


def list_size_lower_bound(k, perfect_cover, radius=None, budget=None):
    """``ceil(q^k / |C'|)`` for linear [n,k] codes list-decoded at the cover's radius."""
    R = covering_radius(perfect_cover, budget=budget)
    if not R.exact or not is_perfect(perfect_cover, R.radius):
        raise NotPerfect("cover does not meet the sphere-covering bound with equality")
    if radius is not None and R.radius > radius:
        raise RadiusTooLarge(f"cover radius {R.radius} exceeds {radius}")
    return implied_list_size(perfect_cover.q ** k, perfect_cover.size)


@dataclass(frozen=True)
class CyclotomicParams:
    """Parameters of the e-weight cyclic codes used for the cyclotomic bound."""

    m: int
    e: int
    a: int
    deltas: tuple

    def check(self, q):
        """Return a reason string when the parameters are invalid, else ''."""
        Q = q ** self.m - 1
        if self.e < 2 or Q % self.e:
            return "e must be >= 2 and divide q^m - 1"
        if self.a <= 0 or self.a % Q == 0:
            return "a must be positive and not a multiple of q^m - 1"
        if len(self.deltas) != self.e:
            return "need exactly e deltas"
        if len({x % self.e for x in self.deltas}) != self.e:
            return "deltas must be distinct mod e"
        g = self.e
        for x in self.deltas[1:]:
            g = gcd(g, x - self.deltas[0])
        if g != 1:
            return "gcd of delta differences and e must be 1"
        return ""

    def derived(self, q):
        Q = q ** self.m - 1
        a_i = [self.a + Q // self.e * x for x in self.deltas]
        delta = Q
        for x in a_i:
            delta = gcd(delta, x)
        n1 = Q // delta
        N = gcd(Q // (q - 1), self.a * self.e)
        return {"a_i": a_i, "delta": delta, "n1": n1, "N": N}


def _prime_of(q):
    p = next(f for f in range(2, q + 1) if q % f == 0)
    return p


def _cover_registry_bound(params, registry, budget):
    R, L, q, n = params.d_list, params.L, params.q, params.n
    best = None
    for item in registry:
        cover, radius = item if isinstance(item, tuple) else (item, None)
        if cover.q != q or cover.n > n:
            continue
        try:
            res = covering_code_bound(cover, R, L, radius=radius, n=n, budget=budget)
        except RadiusTooLarge:
            continue
        if best is None or res.int_value < best.int_value:
            best = res
    for (tq, tn, tR), entry in sorted(K_TABLE.items()):
        if tq == q and tn <= n and tR <= R:
            res = covering_code_bound(entry, R, L, n=n)
            if best is None or res.int_value < best.int_value:
                best = res
    if best is None:
        return _inapplicable("covering_code", "no verified covering code of radius <= d_list",
                             "|C| <= L |C'| for a covering code C' of radius <= d_list")
    return best


def _length_function_bound(params, max_r=512):
    q, n, R, L = params.q, params.n, params.d_list, params.L
    cite = "M <= L q^(n-r) when n >= l_q(r,R)"
    best = None
    for Rp in range(1, R + 1):
        for r in range(Rp, min(n, max_r) + 1):
            try:
                entry = table_lookup("length_function", (q, r, Rp))
            except NotFound:
                continue
            if n >= entry.value and (best is None or r > best[0]):
                best = (r, entry)
    if best is None:
        return _inapplicable("length_function", "no quoted length-function value <= n", cite)
    r, entry = best
    return _size("length_function", L, q, n - r, cite, [f"l_{q}({r},{entry.params[2]}): {entry.citation}"])


def _binary_few_weight_bound(params, m=None):
    q, n, R, L = params.q, params.n, params.d_list, params.L
    cite = "M <= 2^(n-Rm) for (n,M,2R+1)_2 codes, R odd <= 2(2^m+1)+1, n >= 2^(2m)-1"
    if q != 2:
        return _inapplicable("binary_few_weight_dual", "requires q = 2", cite)
    best = None
    ms = [m] if m else range(1, n.bit_length() + 1)
    for mm in ms:
        if 4 ** mm - 1 > n:
            continue
        for Rp in range(1, R + 1, 2):
            if Rp <= 2 * (2 ** mm + 1) + 1 and (best is None or Rp * mm > best[0] * best[1]):
                best = (Rp, mm)
    if best is None:
        return _inapplicable("binary_few_weight_dual", "no odd R' <= d_list and m meet the length threshold", cite)
    Rp, mm = best
    return _size("binary_few_weight_dual", L, 2, n - Rp * mm, cite, [f"R={Rp}, m={mm}"])


def _constant_threshold_bound(params, c=None, t=None):
    q, n, R, L = params.q, params.n, params.d_list, params.L
    cite = "M <= q^(n-tR-1) for (n,M,2R+1)_q codes with n >= c q^(((t-1)R+1)/R) (ln q)^(1/R), R >= 3"
    if c is None:
        return _inapplicable("constant_threshold", "constant c not supplied", cite, assumptions=[C_ASSUMPTION])
    if R < 3:
        return _inapplicable("constant_threshold", "requires d_list >= 3", cite, assumptions=[C_ASSUMPTION])
    best = None
    for Rp in range(3, R + 1):
        tt = 1
        while True:
            thr = c * q ** (((tt - 1) * Rp + 1) / Rp) * log(q) ** (1 / Rp)
            if thr > n or (t is not None and tt > t):
                break
            if (t is None or tt == t) and (best is None or tt * Rp > best[0] * best[1]):
                best = (tt, Rp)
            tt += 1
    if best is None:
        return _inapplicable("constant_threshold", "length below the threshold", cite, assumptions=[C_ASSUMPTION])
    tt, Rp = best
    return _size("constant_threshold", L, q, n - tt * Rp - 1, cite, [C_ASSUMPTION, f"t={tt}, R={Rp}"])


def _odd_prime_bound(params, m=None):
    q, n, R, L = params.q, params.n, params.d_list, params.L
    cite = "M <= p^(n-Rm) for (n,M,2R+1)_p codes, p odd prime, R even <= 2(p^m+1), n >= p^(2m)-1"
    if q % 2 == 0 or _prime_of(q) != q:
        return _inapplicable("odd_prime_few_weight_dual", "requires an odd prime q", cite)
    best = None
    mm = 1
    while q ** (2 * mm) - 1 <= n:
        if m is None or mm == m:
            for Rp in range(2, R + 1, 2):
                if Rp <= 2 * (q ** mm + 1) and (best is None or Rp * mm > best[0] * best[1]):
                    best = (Rp, mm)
        mm += 1
    if best is None:
        return _inapplicable("odd_prime_few_weight_dual", "no even R' <= d_list and m meet the length threshold", cite)
    Rp, mm = best
    return _size("odd_prime_few_weight_dual", L, q, n - Rp * mm, cite, [f"R={Rp}, m={mm}"])


def cyclotomic_bound(params, aux):
    """``M <= q^(n-em)`` for (n, M, 2e+1)_q codes with n >= n_1 (needs N = 1)."""
    cite = "M <= q^(n-em) for (n,M,2e+1)_q codes of length n >= (q^m-1)/delta when N = 1"
    if aux is None:
        raise MissingAux("the cyclotomic bound needs CyclotomicParams")
    q, n, R, L = params.q, params.n, params.d_list, params.L
    bad = aux.check(q)
    if bad:
        return _inapplicable("cyclotomic_dual", bad, cite)
    der = aux.derived(q)
    if der["N"] != 1:
        return _inapplicable("cyclotomic_dual", "N ≠ 1", cite)
    if aux.e > R:
        return _inapplicable("cyclotomic_dual", f"e={aux.e} exceeds d_list={R}", cite)
    if n < der["n1"]:
        return _inapplicable("cyclotomic_dual", f"n < n_1 = {der['n1']}", cite)
    return _size("cyclotomic_dual", L, q, n - aux.e * aux.m, cite, [f"n_1={der['n1']}, delta={der['delta']}"])


def _block_hamming_bound(params, m=None, u=None):
    q, n, R, L = params.q, params.n, params.d_list, params.L
    cite = "M <= q^(n-mu) for (n,M,2u+1)_q codes with n >= u(q^m-1)/(q-1), m >= 3"
    best = None
    for uu in range(1, R + 1):
        if u is not None and uu != u:
            continue
        mm = 3
        while uu * (q ** mm - 1) // (q - 1) <= n:
            if (m is None or mm == m) and (best is None or uu * mm > best[0] * best[1]):
                best = (uu, mm)
            mm += 1
    if best is None:
        return _inapplicable("block_hamming", "no u <= d_list, m >= 3 meet the length threshold", cite)
    uu, mm = best
    return _size("block_hamming", L, q, n - mm * uu, cite,
                 [f"u={uu}, m={mm}", "cover: block-diagonal Hamming parity check"])


def even_field_cover_bound(params):
    """``L q^(n-tR)`` from the length thresholds for even q >= 8 and R >= 4."""
    q, n, R, L = params.q, params.n, params.d_list, params.L
    cite = "|C| <= L q^(n-tR) for even q >= 8, R >= 4, t >= 3m+2 above the length threshold"
    note = "underlying covering codes come from an external construction and are not certified here"
    if q < 8 or q % 2:
        return _inapplicable("even_field_cover", "requires even q >= 8", cite, assumptions=[note])
    if R is None or R < 4:
        return _inapplicable("even_field_cover", "requires d_list >= 4", cite, assumptions=[note])
    e = 0
    while q ** e < R + 1:
        e += 1
    m = e + 1
    best = None
    t = 3 * m + 2
    while True:
        thr = R * q ** ((t - 1) * R) + 2 * q ** (t - 2) + sum(q ** (t - j) for j in range(3, m + 3))
        if thr > n:
            break
        best = t
        t += 1
    if best is None:
        return _inapplicable("even_field_cover", "length below the threshold", cite, assumptions=[note])
    return _size("even_field_cover", L, q, n - best * R, cite, [note, f"m={m}, t={best}"])


def reed_muller_cover_bound(params):
    """Cover by the first-order Reed-Muller code of length 2^m, m even."""
    q, n, R, L = params.q, params.n, params.d_list, params.L
    cite = "|C| <= L 2^(m+1) from the first-order Reed-Muller code, radius 2^(m-1) - 2^((m-2)/2), m even"
    if q != 2:
        return _inapplicable("reed_muller_cover", "requires q = 2", cite)
    best = None
    m = 2
    while 2 ** m <= n:
        if 2 ** (m - 1) - 2 ** ((m - 2) // 2) <= R:
            val = (m + 1) + (n - 2 ** m)
            if best is None or val < best[1]:
                best = (m, val)
        m += 2
    if best is None:
        return _inapplicable("reed_muller_cover", "no even m with 2^m <= n and radius <= d_list", cite)
    m, expo = best
    notes = [f"m={m}"] + ([f"cover extended by F_2^{n - 2 ** m}"] if n > 2 ** m else [])
    return _size("reed_muller_cover", L, 2, expo, cite, notes)


def paper_generalized_bounds(params, aux=None, c=None, m=None, t=None, u=None,
                             registry=(), include=None, budget=None):
    """Every covering-derived size bound for the given parameters.

    Returns one :class:`BoundResult` per bound; inapplicable ones carry a
    reason.  ``m``, ``t`` and ``u`` pin the free parameters of the
    corresponding bounds instead of optimising over them.  The cyclotomic
    bound is reported only when ``aux`` is given, unless ``include``
    explicitly names it (then a missing ``aux`` raises :class:`MissingAux`).
    """
    _need(params, "d_list")
    names = include or ("covering_code", "length_function", "binary_few_weight_dual",
                        "constant_threshold", "odd_prime_few_weight_dual", "cyclotomic_dual",
                        "block_hamming")
    out = []
    for name in names:
        if name == "covering_code":
            out.append(_cover_registry_bound(params, registry, budget))
        elif name == "length_function":
            out.append(_length_function_bound(params))
        elif name == "binary_few_weight_dual":
            out.append(_binary_few_weight_bound(params, m))
        elif name == "constant_threshold":
            out.append(_constant_threshold_bound(params, c, t))
        elif name == "odd_prime_few_weight_dual":
            out.append(_odd_prime_bound(params, m))
        elif name == "cyclotomic_dual":
            if aux is None and include is None:
                continue
            out.append(cyclotomic_bound(params, aux))
        elif name == "block_hamming":
            out.append(_block_hamming_bound(params, m, u))
        else:
            raise BadParams(f"unknown bound {name!r}")
    return out


def bush_bound(q):
    """``A_q(q+2, q) <= q^3 - 2`` for odd q."""
    if q % 2 == 0:
        raise QEven("the Bush bound needs odd q")
    return BoundResult("bush", q ** 3 - 2, True, "", "A_q(q+2,q) <= q^3 - 2 for odd q")


def entropy_q(q, r):
    """q-ary entropy ``r log_q(q-1) - r log_q r - (1-r) log_q(1-r)``."""
    if not 0 <= r <= 1:
        raise OutOfRange("entropy argument must lie in [0, 1]")
    h = 0.0
    if r > 0:
        h += r * log(q - 1, q) - r * log(r, q) if q > 2 else -r * log(r, q)
    if r < 1:
        h -= (1 - r) * log(1 - r, q)
    return h


def length_ceilings(q, d=None, R=None, defect=0, c=None, cover=None, aux=None,
                    linear=False, budget=None):
    """Largest admissible lengths for codes with small Singleton defect.

    Each result has ``quantity="length"``: no code with minimum distance
    ``d`` (or ``2R+1``) and Singleton defect at most ``defect`` exists with
    length above ``value``.
    """
    if d is None and R is None:
        raise MissingParam("need d or R")
    if d is None:
        d = 2 * R + 1
    R = (d - 1) // 2
    s = defect
    out = []

    name = "cover_length"
    cite = "a linear [n0, n0-r0] cover of radius floor((d-1)/2) rules out small-defect codes of length >= n0"
    if cover is None:
        out.append(_inapplicable(name, "no covering code supplied", cite, "length"))
    else:
        radius = covering_radius(cover, budget=budget)
        r0 = cover.n - (cover.k if isinstance(cover, LinearCode) else 0)
        if not radius.exact or radius.radius > R:
            out.append(_inapplicable(name, f"cover radius {radius.radius} exceeds {R}", cite, "length"))
        elif r0 < d + s:
            out.append(_inapplicable(name, f"cover redundancy {r0} < d + defect = {d + s}", cite, "length"))
        else:
            out.append(BoundResult(name, cover.n - 1, True, "", cite,
                                   [f"cover [{cover.n},{cover.n - r0}]_{cover.q}, radius {radius.radius}"],
                                   "length"))

    name = "cyclotomic_length"
    cite = "(n,M,2e+1)_q or (n,M,2e+2)_q MDS codes have n < (q^m-1)/delta, m >= 3, N = 1"
    if aux is None:
        out.append(_inapplicable(name, "no cyclotomic parameters", cite, "length"))
    else:
        bad = aux.check(q)
        der = aux.derived(q) if not bad else None
        if bad:
            out.append(_inapplicable(name, bad, cite, "length"))
        elif aux.m < 3:
            out.append(_inapplicable(name, "requires m >= 3", cite, "length"))
        elif der["N"] != 1:
            out.append(_inapplicable(name, "N ≠ 1", cite, "length"))
        elif aux.e > R or aux.e * aux.m < d + s:
            out.append(_inapplicable(name, "e m < d + defect or e > (d-1)/2", cite, "length"))
        else:
            out.append(BoundResult(name, der["n1"] - 1, True, "", cite, [f"n_1={der['n1']}"], "length"))

    name = "small_field_length"
    cite = "(n,M,2e+1)_q MDS or almost MDS codes have n < q^3 - 1 for odd e | q-1, gcd(e,3)=1"
    e = (d - 1) // 2
    if d % 2 == 0 or e < 2 or e % 2 == 0 or (q - 1) % e or e % 3 == 0:
        out.append(_inapplicable(name, "requires d = 2e+1 with e >= 2 odd, e | q-1, gcd(e,3) = 1", cite, "length"))
    elif s > 1:
        out.append(_inapplicable(name, "applies to defect 0 or 1 only", cite, "length"))
    else:
        out.append(BoundResult(name, q ** 3 - 2, True, "", cite, [f"e={e}", f"length < {q ** 3 - 1}"], "length"))

    name = "de_boer"
    cite = "linear [n,k,d]_q codes with defect s and d > q have n <= d - 2 + 2(q^(s+1)-1)/(q-1)"
    if not linear:
        out.append(_inapplicable(name, "requires linear", cite, "length", ["requires linear"]))
    elif d <= q:
        out.append(_inapplicable(name, "requires d > q", cite, "length"))
    else:
        out.append(BoundResult(name, d - 2 + 2 * (q ** (s + 1) - 1) // (q - 1), True, "", cite,
                               ["requires linear"], "length"))

    name = "length_function_mds"
    cite = "MDS codes with d = 2R+1 or 2R+2 cannot have n >= l_q(2R+1, R)"
    try:
        entry = table_lookup("length_function", (q, 2 * R + 1, R)) if R >= 1 else None
    except NotFound:
        entry = None
    if entry is None or s > 0:
        out.append(_inapplicable(name, "no quoted l_q(2R+1,R) (MDS only)", cite, "length"))
    else:
        ceil_len = ceil(entry.value) - 1
        out.append(BoundResult(name, ceil_len, True, "", cite, [entry.citation], "length"))

    name = "list_singleton_length"
    cite = "(R,L) list-decodable codes attaining the list Singleton bound have n <= c q^((R+1)/R) (ln q)^(1/R)"
    if c is None:
        out.append(_inapplicable(name, "constant c not supplied", cite, "length", [C_ASSUMPTION]))
    elif R < 3:
        out.append(_inapplicable(name, "requires R >= 3", cite, "length", [C_ASSUMPTION]))
    else:
        val = floor(c * q ** ((R + 1) / R) * log(q) ** (1 / R))
        if val < 1:
            out.append(_inapplicable(name, "value below 1", cite, "length", [C_ASSUMPTION]))
        else:
            out.append(BoundResult(name, val, True, "", cite, [C_ASSUMPTION], "length"))
    return out


def bound_ladder(params, registry=(), c=None, aux=None, budget=None):
    """Evaluate every size bound; applicable ones sorted ascending, tightest flagged.

    Inapplicable results follow, in evaluation order.
    """
    results = []
    for fn in (singleton, generalized_singleton_ST, redundancy_list_bound, sphere_packing_list, griesmer):
        try:
            res = fn(params)
        except MissingParam as exc:
            res = _inapplicable(fn.__name__, str(exc))
        if res.name in ("singleton", "griesmer") and params.L != 1:
            res = _inapplicable(res.name, "minimum-distance bound; requires L = 1", res.citation)
        results.append(res)
    if params.d_list is not None:
        results.extend(paper_generalized_bounds(params, aux=aux, c=c, registry=registry, budget=budget))
        results.append(even_field_cover_bound(params))
        results.append(reed_muller_cover_bound(params))
    if params.d is not None and params.L == 1 and params.q % 2 and params.n == params.q + 2 and params.d >= params.q:
        results.append(bush_bound(params.q))
    applicable = sorted((r for r in results if r.applicable), key=lambda r: int(r.value))
    if not applicable:
        raise NothingApplicable("no bound applies to these parameters")
    applicable[0].tightest = True
    return applicable + [r for r in results if not r.applicable]


def tightest(results):
    return next(r for r in results if r.tightest)


def entropy_rate_gap(q, rho, rate):
    """``rate - (1 - H_q(rho))``; positive values exceed the covering-code rate."""
    return rate - (1 - entropy_q(q, rho))


def exponent_fraction(n, m, d_insdel):
    """Exact exponent ``n - m d_insdel / 4``."""
    return Fraction(n) - Fraction(m * d_insdel, 4)


def binomial_sum(q, n, r):
    return sum(comb(n, j) * (q - 1) ** j for j in range(r + 1))
