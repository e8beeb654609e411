"""Enumeration of number fields of fixed degree by discriminant bound.

The output is one canonical record per isomorphism class with
|field discriminant| strictly below the bound.  Completeness rests on
short-vector witnesses: every field contains an algebraic integer of
small T2 norm (sum of |sigma(x)|^2 over the embeddings) whose
characteristic polynomial lands in an explicit coefficient box, so one
scan of the box plus deduplication finds every class.

Degrees 2 and 3 are unconditionally complete.  Degree 3 needs no
isomorphism tests at all: each candidate is kept only if it is itself a
shortest vector of the trace-zero lattice of its field, and the record
is keyed by the lexicographically least characteristic polynomial among
all shortest vectors, which is an invariant of the field.  Degrees 4
and 5 use the classical bounded-trace search with pair rejection by
splitting fingerprints and resultant-based isomorphism tests; their
exact completeness contract is spelled out in the result metadata.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import numpy as np

from .intpoly import (
    MonicIntPoly,
    is_perfect_square,
    poly_discriminant,
    signature_of,
)
from .modpoly import factorization_type
from .numfield import (
    GaloisLabel,
    NumberField,
    _lower_triangular_rows,
    _squarefree_norm,
    galois_type,
)
from .ratlin import hnf_row
from .smallfactor import factorize, is_probable_prime, primes_up_to
from .zfactor import find_degree_factor, is_irreducible


# ── coefficient boxes and stages ──────────────────────────────────────────


@dataclass(frozen=True)
class EnumBox:
    """Box of monic integer polynomials: |a_{n-i}| <= C(n,i) * Y^i.

    With trace_zero set, the x^{n-1} coefficient is pinned to zero.
    """

    degree: int
    height: Fraction
    trace_zero: bool = False

    def __post_init__(self):
        assert self.degree >= 2
        assert self.height > 0

    def coefficient_bound(self, i: int) -> int:
        """Largest |a_{n-i}| in the box, for 1 <= i <= degree."""
        assert 1 <= i <= self.degree
        if self.trace_zero and i == 1:
            return 0
        cap = math.comb(self.degree, i) * Fraction(self.height) ** i
        return math.floor(cap)

    def bounds(self) -> list[int]:
        return [self.coefficient_bound(i) for i in range(1, self.degree + 1)]

    def contains(self, f: MonicIntPoly) -> bool:
        if f.degree != self.degree:
            return False
        # coeffs are ascending; bound index i refers to a_{n-i}
        bs = self.bounds()
        return all(
            abs(f.coeffs[self.degree - i]) <= bs[i - 1]
            for i in range(1, self.degree + 1)
        )

    def size(self) -> int:
        out = 1
        for b in self.bounds():
            out *= 2 * b + 1
        return out


def enumerate_polys(box: EnumBox):
    """All polynomials of the box, ascending lex in (a_{n-1}, ..., a_0)."""
    ranges = [range(-b, b + 1) for b in box.bounds()]
    for tail in itertools.product(*ranges):
        yield MonicIntPoly(tuple(reversed(tail)))


def stage_of_poly(f: MonicIntPoly) -> int:
    """Smallest s with f inside the height-2^s box of its degree."""
    n = f.degree
    for s in range(64):
        y = 1 << s
        if all(
            abs(f.coeffs[n - i]) <= math.comb(n, i) * y**i
            for i in range(1, n + 1)
        ):
            return s
    raise AssertionError(f"no stage holds {f}")


# ── records ───────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class FieldRecord:
    """One isomorphism class, named by a canonical defining polynomial."""

    degree: int
    min_poly: MonicIntPoly
    poly_disc: int
    field_disc: int
    index: int
    signature: tuple[int, int]
    galois_label: GaloisLabel
    stage: int
    # rows express the maximal-order basis over the power basis of
    # min_poly; None when restored from a cache that omits it
    order_basis: tuple | None = None

    def __post_init__(self):
        assert self.poly_disc == self.index**2 * self.field_disc
        r1, r2 = self.signature
        assert r1 + 2 * r2 == self.degree
        assert (self.field_disc < 0) == (r2 % 2 == 1)


@dataclass(frozen=True)
class EnumerationResult:
    records: tuple[FieldRecord, ...]
    undetermined: tuple[FieldRecord, ...]
    metadata: dict


def record_sort_key(rec: FieldRecord):
    return (abs(rec.field_disc), rec.field_disc, rec.min_poly.canonical_key())


# ── frozen discriminant expansions (checked against poly_discriminant) ───

# x^4 + a x^3 + b x^2 + c x + d, terms ((i, j, k, l), coeff) for
# coeff * a^i b^j c^k d^l
_QUARTIC_DISC_TERMS = (
    ((4, 0, 0, 2), -27),
    ((3, 1, 1, 1), 18),
    ((3, 0, 3, 0), -4),
    ((2, 3, 0, 1), -4),
    ((2, 2, 2, 0), 1),
    ((2, 1, 0, 2), 144),
    ((2, 0, 2, 1), -6),
    ((1, 2, 1, 1), -80),
    ((1, 1, 3, 0), 18),
    ((1, 0, 1, 2), -192),
    ((0, 4, 0, 1), 16),
    ((0, 3, 2, 0), -4),
    ((0, 2, 0, 2), -128),
    ((0, 1, 2, 1), 144),
    ((0, 0, 4, 0), -27),
    ((0, 0, 0, 3), 256),
)

# x^5 + a x^4 + b x^3 + c x^2 + d x + e
_QUINTIC_DISC_TERMS = (
    ((5, 0, 0, 0, 3), 256),
    ((4, 1, 0, 1, 2), -192),
    ((4, 0, 2, 0, 2), -128),
    ((4, 0, 1, 2, 1), 144),
    ((4, 0, 0, 4, 0), -27),
    ((3, 2, 1, 0, 2), 144),
    ((3, 2, 0, 2, 1), -6),
    ((3, 1, 2, 1, 1), -80),
    ((3, 1, 1, 3, 0), 18),
    ((3, 1, 0, 0, 3), -1600),
    ((3, 0, 4, 0, 1), 16),
    ((3, 0, 3, 2, 0), -4),
    ((3, 0, 1, 1, 2), 160),
    ((3, 0, 0, 3, 1), -36),
    ((2, 4, 0, 0, 2), -27),
    ((2, 3, 1, 1, 1), 18),
    ((2, 3, 0, 3, 0), -4),
    ((2, 2, 3, 0, 1), -4),
    ((2, 2, 2, 2, 0), 1),
    ((2, 2, 0, 1, 2), 1020),
    ((2, 1, 2, 0, 2), 560),
    ((2, 1, 1, 2, 1), -746),
    ((2, 1, 0, 4, 0), 144),
    ((2, 0, 3, 1, 1), 24),
    ((2, 0, 2, 3, 0), -6),
    ((2, 0, 1, 0, 3), 2000),
    ((2, 0, 0, 2, 2), -50),
    ((1, 3, 1, 0, 2), -630),
    ((1, 3, 0, 2, 1), 24),
    ((1, 2, 2, 1, 1), 356),
    ((1, 2, 1, 3, 0), -80),
    ((1, 2, 0, 0, 3), 2250),
    ((1, 1, 4, 0, 1), -72),
    ((1, 1, 3, 2, 0), 18),
    ((1, 1, 1, 1, 2), -2050),
    ((1, 1, 0, 3, 1), 160),
    ((1, 0, 3, 0, 2), -900),
    ((1, 0, 2, 2, 1), 1020),
    ((1, 0, 1, 4, 0), -192),
    ((1, 0, 0, 1, 3), -2500),
    ((0, 5, 0, 0, 2), 108),
    ((0, 4, 1, 1, 1), -72),
    ((0, 4, 0, 3, 0), 16),
    ((0, 3, 3, 0, 1), 16),
    ((0, 3, 2, 2, 0), -4),
    ((0, 3, 0, 1, 2), -900),
    ((0, 2, 2, 0, 2), 825),
    ((0, 2, 1, 2, 1), 560),
    ((0, 2, 0, 4, 0), -128),
    ((0, 1, 3, 1, 1), -630),
    ((0, 1, 2, 3, 0), 144),
    ((0, 1, 1, 0, 3), -3750),
    ((0, 1, 0, 2, 2), 2000),
    ((0, 0, 5, 0, 1), 108),
    ((0, 0, 4, 2, 0), -27),
    ((0, 0, 2, 1, 2), 2250),
    ((0, 0, 1, 3, 1), -1600),
    ((0, 0, 0, 5, 0), 256),
    ((0, 0, 0, 0, 4), 3125),
)


def quartic_disc(a: int, b: int, c: int, d: int) -> int:
    """disc(x^4 + a x^3 + b x^2 + c x + d) from the frozen expansion."""
    return sum(
        coef * a**i * b**j * c**k * d**l
        for (i, j, k, l), coef in _QUARTIC_DISC_TERMS
    )


def quintic_disc(a: int, b: int, c: int, d: int, e: int) -> int:
    """disc(x^5 + a x^4 + b x^3 + c x^2 + d x + e) from the frozen expansion."""
    return sum(
        coef * a**i * b**j * c**k * d**l * e**m
        for (i, j, k, l, m), coef in _QUINTIC_DISC_TERMS
    )


# ── integer root helpers ──────────────────────────────────────────────────


def _floor_fourth_root(n: int) -> int:
    assert n >= 0
    return isqrt(isqrt(n))


def _signed_divisors(m: int) -> list[int]:
    """All divisors of |m|, both signs, m != 0."""
    m = abs(m)
    small, large = [], []
    for d in range(1, isqrt(m) + 1):
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
    ds = small + large[::-1]
    return [s * d for d in ds for s in (1, -1)]


def _integer_roots_cubic(c2: int, c1: int, c0: int) -> list[int]:
    """Integer roots of a^3 + c2 a^2 + c1 a + c0."""
    if c0 == 0:
        roots = [0]
        # remaining quadratic a^2 + c2 a + c1
        disc = c2 * c2 - 4 * c1
        if disc >= 0 and is_perfect_square(disc):
            r = isqrt(disc)
            for num in (-c2 + r, -c2 - r):
                if num % 2 == 0:
                    roots.append(num // 2)
        return sorted(set(roots))
    out = []
    for a in _signed_divisors(c0):
        if ((a + c2) * a + c1) * a + c0 == 0:
            out.append(a)
    return out


# ── smooth square stripping ───────────────────────────────────────────────


def _strip_smooth_squares(vals: np.ndarray, primes: list[int]) -> np.ndarray:
    """Divide out q^2 factors for every prime q in the list, elementwise."""
    out = vals.copy()
    for q in primes:
        q2 = q * q
        while True:
            mask = (out % q2 == 0) & (out > 0)
            if not mask.any():
                break
            out[mask] //= q2
    return out


def _strip_smooth_squares_int(v: int, primes: list[int]) -> int:
    for q in primes:
        q2 = q * q
        while v % q2 == 0:
            v //= q2
    return v


# ── degree 2: closed form ────────────────────────────────────────────────


def _squarefree_flags(limit: int) -> bytearray:
    flags = bytearray([1]) * (limit + 1)
    if limit >= 0:
        flags[0] = 0
    for p in range(2, isqrt(limit) + 1):
        step = p * p
        flags[step::step] = bytearray(len(flags[step::step]))
    return flags

def _quadratic_record(m: int) -> FieldRecord:
    f = MonicIntPoly((-m, 0))
    if m % 4 == 1:
        disc, index = m, 2
        basis = ((Fraction(1), Fraction(0)), (Fraction(1, 2), Fraction(1, 2)))
    else:
        disc, index = 4 * m, 1
        basis = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
    return FieldRecord(
        degree=2,
        min_poly=f,
        poly_disc=4 * m,
        field_disc=disc,
        index=index,
        signature=(2, 0) if m > 0 else (0, 1),
        galois_label=GaloisLabel("Sn_certified", "S2"),
        stage=stage_of_poly(f),
        order_basis=basis,
    )


def _lane_degree2(X: int) -> list[FieldRecord]:
    if X < 4:
        return []
    limit = X - 1
    flags = _squarefree_flags(limit)
    out = []
    for a in range(2, limit + 1):
        for m in (a, -a):
            if not flags[a]:
                continue
            bound = abs(m) if m % 4 == 1 else 4 * abs(m)
            if bound < X:
                out.append(_quadratic_record(m))
    # m = -1 is squarefree but skipped by the loop start
    if flags[1] and 4 < X:
        out.append(_quadratic_record(-1))
    return out


# ── degree 3: canonical short-vector witnesses ───────────────────────────


def _cubic_band(X: int) -> tuple[int, int, list[int]]:
    """(a1 bound, a0 bound, stripping primes) for witnesses below X.

    A witness theta is a shortest vector of the trace-zero lattice, so
    T2(theta) <= 2 sqrt(|disc|) by Hermite's bound on rank-2 lattices of
    covolume at most sqrt(3 |disc|).  That yields |a1| <= sqrt(|disc|),
    |a0| <= (T2/3)^{3/2}, and by Hadamard |polydisc| <= 3 T2^3, hence
    index^4 <= 576 (X-1); the stripping primes cover every possible
    prime factor of a witness index.
    """
    if X < 2:
        return 0, 0, []
    a1max = isqrt(X - 1)
    a0max = _floor_fourth_root(64 * (X - 1) ** 3 // 729)
    ind = _floor_fourth_root(576 * (X - 1))
    return a1max, a0max, primes_up_to(ind)


def _cubic_stage_count(X: int) -> int:
    s = 0
    while 9 * (1 << (4 * s)) < 4 * (X - 1):
        s += 1
    return s + 1


def _cubic_stage_rects(s: int, X: int, a1max: int, a0max: int) -> list[tuple]:
    """Shell s as a list of disjoint (lo1, up1, lo0, up0) work rectangles."""
    y = 1 << s
    hi1 = min(3 * y * y, a1max)
    hi0 = min(y * y * y, a0max)
    if s == 0:
        shells = [(-hi1, hi1, 1, hi0)]
    else:
        yp = 1 << (s - 1)
        p1 = min(3 * yp * yp, a1max)
        p0 = min(yp * yp * yp, a0max)
        shells = [
            (-hi1, hi1, p0 + 1, hi0),
            (p1 + 1, hi1, 1, p0),
            (-hi1, -p1 - 1, 1, p0),
        ]
    out = []
    for lo1, up1, lo0, up0 in shells:
        if lo1 > up1 or lo0 > up0:
            continue
        band = max(1, 400_000 // (up1 - lo1 + 1))
        for base in range(lo0, up0 + 1, band):
            out.append((lo1, up1, base, min(base + band - 1, up0)))
    return out


_root_premask_tables: dict[int, np.ndarray] = {}


def _root_premask(m: int) -> np.ndarray:
    """table[a1 % m, a0 % m] = whether x^3 + a1 x + a0 has a root mod m."""
    if m not in _root_premask_tables:
        tab = np.zeros((m, m), dtype=bool)
        a1 = np.arange(m)
        for r in range(m):
            a0 = (-(r * r * r) - a1 * r) % m
            tab[a1, a0] = True
        _root_premask_tables[m] = tab
    return _root_premask_tables[m]


def _cubic_square_data(vals: np.ndarray) -> list[list[tuple[int, int]]]:
    """Square-prime decomposition [(q, e), ...] with q^e || v, e >= 2.

    Trial primes run past the cube root of the largest value, so each
    stripped residue has all factors above that bound and can hide at
    most one squared prime, recovered by an integer square-root test.
    """
    out: list[list[tuple[int, int]]] = [[] for _ in range(len(vals))]
    if not len(vals):
        return out
    res = vals.copy()
    top = int(res.max())
    lim = 2
    while lim**3 <= top:
        lim += 1
    for q in primes_up_to(lim):
        mask = res % q == 0
        if not mask.any():
            continue
        idx = np.nonzero(mask)[0]
        sub = res[idx] // q
        e = np.ones(len(idx), dtype=np.int64)
        mm = sub % q == 0
        while mm.any():
            sub[mm] //= q
            e[mm] += 1
            mm = sub % q == 0
        res[idx] = sub
        keep = e >= 2
        for i, ei in zip(idx[keep].tolist(), e[keep].tolist()):
            out[i].append((q, ei))
    big = res > 1
    if big.any():
        root = np.sqrt(res.astype(np.float64)).astype(np.int64)
        for delta in (0, 1):
            r = root + delta
            sq = big & (r * r == res)
            for i, ri in zip(np.nonzero(sq)[0].tolist(), r[sq].tolist()):
                out[i].append((ri, 2))
    return out


def _cubic_rect_survivors(lo1, up1, lo0, up0, X) -> list[tuple]:
    """Vector-filtered candidates of one rectangle.

    Yields (a1, a0, |pd|, square data, rational-root flag, real root,
    T2 float) tuples; the last two are only meaningful for complex
    candidates.
    """
    primes = primes_up_to(max(2, _floor_fourth_root(576 * (X - 1))))
    a1 = np.arange(lo1, up1 + 1, dtype=np.int64)
    a0 = np.arange(lo0, up0 + 1, dtype=np.int64)
    A0 = a0[:, None]
    A1 = a1[None, :]
    pd = -4 * A1**3 - 27 * A0 * A0
    alive = pd != 0
    # a shortest-vector witness satisfies T2(theta) <= 2 sqrt(|D|)
    # and |D| <= min(|pd|, X - 1); totally real fields have
    # T2 = -2 a1 exactly, complex ones go through the real root
    t2cap = np.minimum(np.abs(pd), X - 1)
    pos = pd > 0
    alive &= np.where(pos, A1 * A1 <= t2cap, True)
    p = A1.astype(float)
    q = A0.astype(float)
    neg = alive & (pd < 0)
    srt = np.sqrt(np.where(neg, q * q / 4 + p**3 / 27, 1.0))
    alpha = np.cbrt(-q / 2 + srt) + np.cbrt(-q / 2 - srt)
    t2 = alpha * alpha - 2 * q / np.where(alpha == 0, 1.0, alpha)
    lim = 2 * np.sqrt(t2cap.astype(float)) * (1 + 1e-9) + 1e-6
    alive &= np.where(neg, t2 <= lim, True)
    vals = np.where(alive, np.abs(pd), 0)
    vals = _strip_smooth_squares(vals, primes)
    alive &= vals < X
    ia, ja = np.nonzero(alive)
    if not len(ia):
        return []
    fa1 = a1[ja]
    fa0 = a0[ia]
    apd = np.abs(pd[ia, ja])
    maybe = (
        _root_premask(63)[fa1 % 63, fa0 % 63]
        & _root_premask(64)[fa1 % 64, fa0 % 64]
    )
    sq = _cubic_square_data(apd)
    return list(
        zip(
            fa1.tolist(),
            fa0.tolist(),
            apd.tolist(),
            sq,
            maybe.tolist(),
            alpha[ia, ja].tolist(),
            t2[ia, ja].tolist(),
        )
    )


def _cubic_has_rational_root(a1: int, a0: int) -> bool:
    for d in _signed_divisors(a0):
        if (d * d + a1) * d + a0 == 0:
            return True
    return False


def _cubic_galois(field_disc: int) -> GaloisLabel:
    # square discriminant forces the Galois group inside A3, and the
    # only transitive subgroup of A3 is A3 itself; otherwise it is S3
    if field_disc > 0 and is_perfect_square(field_disc):
        return GaloisLabel("other", "consistent with A3")
    return GaloisLabel("Sn_certified", "S3")


def _vq(n: int, q: int) -> int:
    """q-adic valuation; 64 stands in for infinity at n = 0."""
    if n == 0:
        return 64
    v = 0
    while n % q == 0:
        n //= q
        v += 1
    return v


def _cubic_v2_exact(a1: int, a0: int, pd: int, e: int) -> int:
    """v_2 of the field discriminant of x^3 + a1 x + a0, e = v_2(pd).

    Quadratic ramification at 2 is wild, so the exponent lies in
    {0, 2, 3}.  A double root of f mod 2 (a1 odd) lifts to a quadratic
    cofactor whose discriminant is pd times a unit square, and its
    square class (sign and odd part mod 8) separates ramified (3, 7)
    from unramified (1, 5); odd e can only mean the exponent-3 field
    Q_2(sqrt(2u)).  A triple root forces 2 | a1, a0 and the Newton
    polygon of f reads the answer off the coefficient valuations;
    non-reduced models divide through by 2 and recurse.
    """
    if e <= 0:
        return 0
    if a1 % 2:
        if e % 2:
            return 3
        return 2 if (pd >> e) % 8 in (3, 7) else 0
    if _vq(a0, 2) <= 2:
        return 2
    if _vq(a1, 2) == 1:
        return 3
    return _cubic_v2_exact(a1 // 4, a0 // 8, pd >> 6, e - 6)


def _cubic_vq_tame(a1: int, a0: int, q: int, e: int) -> int:
    """v_q of the field discriminant at a tame prime q >= 5, e = v_q(pd).

    A double root of f mod q lifts to a quadratic cofactor ramified
    exactly when e is odd.  A triple root sits at 0 (trace zero kills
    other shifts), where the Newton polygon of f leaves four shapes:
    Eisenstein (v = e = 2), a slope-1/2 split (v = 1), a slope-2/3
    totally ramified prime (v = 2), or a non-reduced model that
    divides through by q and recurses.
    """
    if e <= 0:
        return 0
    if a1 % q or a0 % q:
        return e % 2
    if a0 % (q * q):
        return 2
    if _vq(a1, q) == 1:
        return 1
    if _vq(a0, q) == 2:
        return 2
    return _cubic_vq_tame(a1 // (q * q), a0 // q**3, q, e - 6)


def _v3_cubic(c2: int, c1: int, c0: int) -> int:
    """v_3 of the maximal-order discriminant of Q_3[x]/(x^3+c2x^2+c1x+c0).

    Cubic ramification at 3 is wild: a totally ramified prime carries
    exponent 3, 4 or 5.  A double root of f mod 3 reduces to a tame
    quadratic cofactor (exponent = parity of v_3(disc f)).  A triple
    root is recentred at 0; then an Eisenstein shift is maximal, a
    slope-1/2 break gives exponent 1, and on the slope-2/3 polygon
    theta^2/3 has an Eisenstein minimal polynomial whose derivative
    valuations (pairwise distinct mod 3) read off the exponent.
    Deeper polygons divide all roots by 3 and recurse.
    """
    disc = (
        c2 * c2 * c1 * c1
        - 4 * c1**3
        - 4 * c2**3 * c0
        + 18 * c2 * c1 * c0
        - 27 * c0 * c0
    )
    e = _vq(disc, 3)
    if e == 0:
        return 0
    if c2 % 3 or c1 % 3:
        return e % 2
    r = (-c0) % 3
    if r == 2:
        r = -1
    b2 = c2 + 3 * r
    b1 = c1 + 2 * c2 * r + 3 * r * r
    b0 = ((r + c2) * r + c1) * r + c0
    if b0 == 0:
        return _vq(b2 * b2 - 4 * b1, 3) % 2
    v0 = _vq(b0, 3)
    if v0 == 1:
        return e
    if _vq(b1, 3) == 1:
        return 1
    if v0 == 2:
        u = _vq(b2 * b2 - 2 * b1, 3) - 1
        w = _vq(b1 * b1 - 2 * b2 * b0, 3) - 2
        return min(5, 3 * u + 1, 3 * w)
    return _v3_cubic(b2 // 3, b1 // 9, b0 // 27)


def _cubic_disc_index(a1: int, a0: int, pd: int, sq):
    """(field disc, index prime exponents) of x^3 + a1 x + a0.

    sq lists the square primes of pd; v_q(pd) = v_q(disc) + 2 v_q(index)
    turns the exact local exponents into the index factorization.
    """
    disc = pd
    mq: dict[int, int] = {}
    for q, e in sq:
        if q == 2:
            v = _cubic_v2_exact(a1, a0, pd, e)
        elif q == 3:
            v = _v3_cubic(0, a1, a0)
        else:
            v = _cubic_vq_tame(a1, a0, q, e)
        drop = e - v
        assert drop >= 0 and drop % 2 == 0, (a1, a0, q, e, v)
        disc //= q**drop
        if drop:
            mq[q] = drop // 2
    return disc, mq


def _mat3_adj(m):
    """(adjugate, determinant) of a 3x3 integer matrix, m @ adj = det I."""
    (a, b, c), (d, e, f), (g, h, i) = m
    adj = (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    )
    det = a * adj[0][0] + b * adj[1][0] + c * adj[2][0]
    return adj, det


def _mulmod3(u, v, a1: int, a0: int):
    """Product of two elements in power coordinates mod x^3 + a1 x + a0."""
    c0 = u[0] * v[0]
    c1 = u[0] * v[1] + u[1] * v[0]
    c2 = u[0] * v[2] + u[1] * v[1] + u[2] * v[0]
    c3 = u[1] * v[2] + u[2] * v[1]
    c4 = u[2] * v[2]
    return (c0 - a0 * c3, c1 - a1 * c3 - a0 * c4, c2 - a1 * c4)


def _trace3(u, a1: int) -> int:
    """Trace of an element in power coordinates (Tr 1, theta, theta^2)."""
    return 3 * u[0] - 2 * a1 * u[2]


def _to_basis3(vec, adj_h, det_h, den, extra_den):
    """Coordinates of vec/extra_den over the basis rows H/den; exact."""
    num = det_h * extra_den
    out = []
    for k in range(3):
        t = (
            vec[0] * adj_h[0][k] + vec[1] * adj_h[1][k] + vec[2] * adj_h[2][k]
        ) * den
        q, r = divmod(t, num)
        assert r == 0, "element lies outside the order"
        out.append(q)
    return out


def _left_kernel_mod_q(rows, q: int):
    """Basis of {z : z @ rows = 0 mod q} for a small matrix, q prime."""
    r = len(rows)
    c = len(rows[0])
    m = [
        [rows[i][j] % q for j in range(c)] + [int(k == i) for k in range(r)]
        for i in range(r)
    ]
    top = 0
    for col in range(c):
        sel = next((i for i in range(top, r) if m[i][col]), None)
        if sel is None:
            continue
        m[top], m[sel] = m[sel], m[top]
        inv = pow(m[top][col], -1, q)
        m[top] = [x * inv % q for x in m[top]]
        for i in range(r):
            if i != top and m[i][col]:
                f = m[i][col]
                m[i] = [(x - f * y) % q for x, y in zip(m[i], m[top])]
        top += 1
        if top == r:
            break
    return [row[c:] for row in m[top:]]


def _cubic_enlarge_at(a1: int, a0: int, h, den: int, q: int):
    """One Round-2 pass at q on the order with basis rows h/den.

    Kernel of Frobenius on O/qO spans the radical; dividing the
    stabilizer of the radical by q strictly enlarges any order that is
    not yet q-maximal.
    """
    adj_h, det_h = _mat3_adj(h)
    den2 = den * den
    cc = [
        [_to_basis3(_mulmod3(h[i], h[j], a1, a0), adj_h, det_h, den, den2)
         for j in range(3)]
        for i in range(3)
    ]

    def mulb(x, y):
        out = [0, 0, 0]
        for i in range(3):
            if x[i]:
                ci = cc[i]
                for j in range(3):
                    if y[j]:
                        w = x[i] * y[j]
                        row = ci[j]
                        out[0] += w * row[0]
                        out[1] += w * row[1]
                        out[2] += w * row[2]
        return [out[0] % q, out[1] % q, out[2] % q]

    one = _to_basis3((1, 0, 0), adj_h, det_h, den, 1)

    def powb(x, e):
        r = [c % q for c in one]
        b = x
        while e:
            if e & 1:
                r = mulb(r, b)
            b = mulb(b, b)
            e >>= 1
        return r

    frob = [powb([int(j == i) for j in range(3)], q) for i in range(3)]
    # q = 2 needs one extra squaring of the map so that x -> x^4 kills
    # every nilpotent of O/2O
    if q == 2:
        frob = [
            [sum(frob[i][k] * frob[k][j] for k in range(3)) % q
             for j in range(3)]
            for i in range(3)
        ]
    rad = _left_kernel_mod_q(frob, q)
    assert rad, "order believed non-maximal has semisimple reduction"
    w = hnf_row([list(z) for z in rad] + [[q * int(j == i) for j in range(3)]
                                          for i in range(3)])
    w = [row for row in w if any(row)]
    assert len(w) == 3
    adj_w, det_w = _mat3_adj(w)
    cond = []
    for i in range(3):
        flat = []
        for j in range(3):
            prod = [0, 0, 0]
            for t in range(3):
                if w[j][t]:
                    row = cc[i][t]
                    prod[0] += w[j][t] * row[0]
                    prod[1] += w[j][t] * row[1]
                    prod[2] += w[j][t] * row[2]
            for col in range(3):
                t2 = sum(prod[t] * adj_w[t][col] for t in range(3))
                y, r = divmod(t2, det_w)
                assert r == 0, "radical lattice is not an ideal"
                flat.append(y)
        cond.append(flat)
    ker = _left_kernel_mod_q(cond, q)
    assert ker, "stabilizer did not grow for a non-maximal prime"
    stacked = [[q * x for x in row] for row in h]
    for z in ker:
        stacked.append([
            z[0] * h[0][k] + z[1] * h[1][k] + z[2] * h[2][k] for k in range(3)
        ])
    h2 = [row for row in hnf_row(stacked) if any(row)]
    assert len(h2) == 3
    den3 = den * q
    g = den3
    for row in h2:
        for x in row:
            g = math.gcd(g, x)
            if g == 1:
                break
    if g > 1:
        h2 = [[x // g for x in row] for row in h2]
        den3 //= g
    return h2, den3


def _cubic_max_order_int(a1: int, a0: int, mq) -> tuple[list, int]:
    """Maximal-order basis rows h/den for x^3 + a1 x + a0.

    mq holds the exact prime exponents of the index, so each prime is
    enlarged until its known share is banked and no maximality retest
    is needed.
    """
    h = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    den = 1
    for q, m in sorted(mq.items()):
        gained = 0
        while gained < m:
            h, den = _cubic_enlarge_at(a1, a0, h, den, q)
            _, det_h = _mat3_adj(h)
            idx, r = divmod(den**3, abs(det_h))
            assert r == 0
            got = _vq(idx, q)
            assert got > gained, "no growth at a non-maximal prime"
            gained = got
        assert gained == m, (a1, a0, q, m, gained)
    return h, den


def _cubic_order_basis(a1: int, a0: int, index: int):
    """Triangular maximal-order basis of x^3 + a1 x + a0 over Z[theta]."""
    if index == 1:
        return _IDENTITY3
    h, den = _cubic_max_order_int(a1, a0, factorize(index))
    return tuple(
        tuple(Fraction(x, den) for x in row)
        for row in _lower_triangular_rows(h)
    )


def _gauss_reduce2(g11: int, g12: int, g22: int):
    """Reduce a positive definite integer binary form, tracking basis."""
    r1, r2 = (1, 0), (0, 1)
    if g22 < g11:
        g11, g22 = g22, g11
        r1, r2 = r2, r1
    for _ in range(128):
        mu = (2 * g12 + g11) // (2 * g11)
        if mu:
            g22 += mu * mu * g11 - 2 * mu * g12
            g12 -= mu * g11
            r2 = (r2[0] - mu * r1[0], r2[1] - mu * r1[1])
        if g22 >= g11:
            return (g11, g12, g22), (r1, r2)
        g11, g22 = g22, g11
        r1, r2 = r2, r1
    raise AssertionError("form reduction did not terminate")


class _DyadicRootSign:
    """Exact signs of quadratics in theta at the unique real root of f.

    f = x^3 + a1 x + a0 with negative discriminant and no rational
    root, so the real root is a cubic irrational and a nonzero
    polynomial of degree <= 2 never vanishes there.  Brackets are
    dyadic rationals m / 2^k kept as bare integers, which makes both
    refinement and interval evaluation pure integer arithmetic.
    """

    __slots__ = ("a1", "a0", "lo", "hi", "k")

    def __init__(self, a1: int, a0: int, alpha: float):
        self.a1 = a1
        self.a0 = a0
        if math.isfinite(alpha):
            k = 14
            m = math.floor(alpha * (1 << k)) - 1
            if self._fsign(m, k) < 0 and self._fsign(m + 3, k) > 0:
                self.lo, self.hi, self.k = m, m + 3, k
                return
        b = 1 + max(abs(a1), abs(a0))
        self.lo, self.hi, self.k = -b, b, 0

    def _fsign(self, m: int, k: int) -> int:
        v = m**3 + self.a1 * m * (1 << (2 * k)) + self.a0 * (1 << (3 * k))
        return (v > 0) - (v < 0)

    def _refine(self, steps: int):
        for _ in range(steps):
            if self.hi - self.lo > 1:
                mid = (self.lo + self.hi) // 2
            else:
                self.lo, self.hi = 2 * self.lo, 2 * self.hi
                self.k += 1
                mid = self.lo + 1
            s = self._fsign(mid, self.k)
            if s < 0:
                self.lo = mid
            else:
                assert s > 0, "rational root in an irreducible cubic"
                self.hi = mid

    def sign_quad(self, c) -> int:
        """Sign of c[2] x^2 + c[1] x + c[0] at the real root."""
        c0, c1, c2 = c
        if c1 == 0 and c2 == 0:
            return (c0 > 0) - (c0 < 0)
        for _ in range(80):
            xlo, xhi, k = self.lo, self.hi, self.k
            if xlo >= 0:
                qlo, qhi = xlo * xlo, xhi * xhi
            elif xhi <= 0:
                qlo, qhi = xhi * xhi, xlo * xlo
            else:
                qlo, qhi = 0, max(xlo * xlo, xhi * xhi)
            if c2 >= 0:
                glo, ghi = c2 * qlo, c2 * qhi
            else:
                glo, ghi = c2 * qhi, c2 * qlo
            ta, tb = c1 * xlo, c1 * xhi
            if ta > tb:
                ta, tb = tb, ta
            base = c0 << (2 * k)
            glo += (ta << k) + base
            ghi += (tb << k) + base
            if glo > 0:
                return 1
            if ghi < 0:
                return -1
            self._refine(12)
        raise AssertionError("sign refinement did not separate from zero")

    def approx(self, c) -> float:
        mid = math.ldexp(float(self.lo + self.hi), -(self.k + 1))
        return (c[2] * mid + c[1]) * mid + c[0]


def _cubic_tz_witness(a1: int, a0: int, h, den: int, real: bool, alpha):
    """Canonical shortest-vector polynomial of the trace-zero lattice.

    Returns None when theta itself is not a shortest vector (the field
    is then spawned by another candidate).  In the totally real case
    T2 equals the trace form, giving an integer Gram matrix; in the
    (1,1) case T2(z) for trace-zero z is the value of 3 z^2 - Tr(z^2)
    at the real root, so comparisons become exact dyadic sign queries.
    """
    adj_h, det_h = _mat3_adj(h)
    aug = []
    for i, row in enumerate(h):
        t, r = divmod(_trace3(row, a1), den)
        assert r == 0
        aug.append([t] + [int(j == i) for j in range(3)])
    tz = [row[1:] for row in hnf_row(aug) if row[0] == 0 and any(row[1:])]
    assert len(tz) == 2, "trace-zero sublattice must have rank 2"
    uc, vc = tz
    theta = _to_basis3((0, 1, 0), adj_h, det_h, den, 1)
    i, j = next(
        (i, j)
        for i in range(3)
        for j in range(i + 1, 3)
        if uc[i] * vc[j] - uc[j] * vc[i]
    )
    det2 = uc[i] * vc[j] - uc[j] * vc[i]
    cu, ru = divmod(theta[i] * vc[j] - theta[j] * vc[i], det2)
    cv, rv = divmod(uc[i] * theta[j] - uc[j] * theta[i], det2)
    assert ru == 0 and rv == 0
    assert all(cu * uc[k] + cv * vc[k] == theta[k] for k in range(3))
    nu = [sum(uc[t] * h[t][k] for t in range(3)) for k in range(3)]
    nv = [sum(vc[t] * h[t][k] for t in range(3)) for k in range(3)]
    den2 = den * den

    def vec(c):
        return [c[0] * nu[k] + c[1] * nv[k] for k in range(3)]

    def tr_prod(x, y):
        t, r = divmod(_trace3(_mulmod3(x, y, a1, a0), a1), den2)
        assert r == 0
        return t

    if real:
        (g11, g12, g22), (r1, r2) = _gauss_reduce2(
            tr_prod(nu, nu), tr_prod(nu, nv), tr_prod(nv, nv)
        )
        t2_theta = -2 * a1
        assert t2_theta >= g11, "a lattice vector cannot beat the minimum"
        if t2_theta > g11:
            return None
        cands = [r1]
        if g22 == g11:
            cands.append(r2)
        if g11 + 2 * g12 + g22 == g11:
            cands.append((r1[0] + r2[0], r1[1] + r2[1]))
        if g11 - 2 * g12 + g22 == g11:
            cands.append((r1[0] - r2[0], r1[1] - r2[1]))
    else:
        sgn = _DyadicRootSign(a1, a0, alpha if alpha else math.inf)

        def hcoef(c):
            z = vec(c)
            z2 = _mulmod3(z, z, a1, a0)
            t, r = divmod(_trace3(z2, a1), den2)
            assert r == 0
            return (3 * z2[0] - t * den2, 3 * z2[1], 3 * z2[2])

        def cmp2(hx, hy):
            return sgn.sign_quad(
                (hx[0] - hy[0], hx[1] - hy[1], hx[2] - hy[2])
            )

        def nearest_mu(vv, uu, huu):
            p = _mulmod3(vec(vv), vec(uu), a1, a0)
            t, r = divmod(_trace3(p, a1), den2)
            assert r == 0
            b = (3 * p[0] - t * den2, 3 * p[1], 3 * p[2])
            k = round(sgn.approx(b) / sgn.approx(huu))
            for _ in range(64):
                # accept k exactly when k <= mu + 1/2 < k + 1
                top = tuple(2 * b[t] + (1 - 2 * k) * huu[t] for t in range(3))
                if sgn.sign_quad(top) < 0:
                    k -= 1
                    continue
                if sgn.sign_quad(
                    tuple(top[t] - 2 * huu[t] for t in range(3))
                ) < 0:
                    return k
                k += 1
            raise AssertionError("nearest integer search did not settle")

        u, v = (1, 0), (0, 1)
        hu, hv = hcoef(u), hcoef(v)
        if cmp2(hu, hv) > 0:
            u, v, hu, hv = v, u, hv, hu
        for _ in range(128):
            k = nearest_mu(v, u, hu)
            if k:
                v = (v[0] - k * u[0], v[1] - k * u[1])
                hv = hcoef(v)
            if cmp2(hv, hu) >= 0:
                break
            u, v, hu, hv = v, u, hv, hu
        else:
            raise AssertionError("reduction failed to terminate")
        side = cmp2(hcoef((cu, cv)), hu)
        assert side >= 0, "a lattice vector cannot beat the minimum"
        if side > 0:
            return None
        cands = [u]
        for c in (v, (u[0] + v[0], u[1] + v[1]), (u[0] - v[0], u[1] - v[1])):
            if cmp2(hcoef(c), hu) == 0:
                cands.append(c)
    best = None
    for c in cands:
        nw = vec(c)
        w2 = _mulmod3(nw, nw, a1, a0)
        t2w, r2_ = divmod(_trace3(w2, a1), den2)
        assert r2_ == 0
        p, rp = divmod(-t2w, 2)
        assert rp == 0
        w3 = _mulmod3(w2, nw, a1, a0)
        t3, r3 = divmod(_trace3(w3, a1), den2 * den)
        assert r3 == 0
        qq, rq = divmod(-t3, 3)
        assert rq == 0
        for c0 in (qq, -qq):
            poly = MonicIntPoly((c0, p, 0))
            key = poly.canonical_key()
            if best is None or key < best[0]:
                best = (key, poly)
    assert best is not None
    return best[1]


def _gauss_min_int(g11: int, g12: int, g22: int) -> int:
    """Minimum of a positive definite integer binary quadratic form."""
    for _ in range(64):
        if g22 < g11:
            g11, g22 = g22, g11
        mu = (2 * g12 + g11) // (2 * g11)
        if mu == 0:
            return g11
        g22 = g22 - 2 * mu * g12 + mu * mu * g11
        g12 = g12 - mu * g11
    raise AssertionError("form reduction did not terminate")


def _cubic_float_premin(a1, a0, alpha, t2f):
    """Float Gauss reduction of {theta, 3 theta^2 + 2 a1} under T2.

    Returns (approximate minimum, coordinates achieving it).  This is
    a rejection aid only: callers act on decisive margins and confirm
    borderline wins exactly, so float noise cannot drop a field.
    """
    rez = -alpha / 2
    imz2 = -a0 / alpha - rez * rez
    z = complex(rez, math.sqrt(max(imz2, 0.0)))
    wa = 3 * alpha * alpha + 2 * a1
    wz = 3 * z * z + 2 * a1
    g11 = t2f
    g12 = alpha * wa + 2 * (z * wz.conjugate()).real
    g22 = wa * wa + 2 * abs(wz) ** 2
    u, v = (1, 0), (0, 1)
    for _ in range(48):
        if g22 < g11:
            g11, g22 = g22, g11
            u, v = v, u
        mu = round(g12 / g11)
        if mu == 0:
            break
        g22 = g22 - 2 * mu * g12 + mu * mu * g11
        g12 = g12 - mu * g11
        v = (v[0] - mu * u[0], v[1] - mu * u[1])
    if g11 <= g22:
        return g11, u
    return g22, v


_IDENTITY3 = tuple(
    tuple(Fraction(int(i == j)) for j in range(3)) for i in range(3)
)


def _cubic_candidate_record(
    a1, a0, apd, sq, maybe_root, alpha, t2f, X
) -> FieldRecord | None:
    if maybe_root and _cubic_has_rational_root(a1, a0):
        return None
    real = 4 * a1**3 + 27 * a0 * a0 < 0
    disc, mq = _cubic_disc_index(a1, a0, apd if real else -apd, sq)
    adisc = abs(disc)
    if adisc >= X:
        return None
    # theta can only spawn as a shortest vector of the trace-zero
    # lattice, whose minimum is at most 2 sqrt(|disc|); cheap rejection
    # against the sublattice Z theta + Z(3 theta^2 + 2 a1) comes first
    if real:
        if a1 * a1 > adisc:
            return None
        if _gauss_min_int(-2 * a1, -9 * a0, 6 * a1 * a1) < -2 * a1:
            return None
    elif alpha:
        if t2f * t2f > 4.0 * adisc * (1 + 1e-3):
            return None
        pmin, coords = _cubic_float_premin(a1, a0, alpha, t2f)
        if coords not in ((1, 0), (-1, 0)) and pmin < t2f * (1 - 1e-3):
            return None
    if mq:
        h, den = _cubic_max_order_int(a1, a0, mq)
    else:
        h, den = [[1, 0, 0], [0, 1, 0], [0, 0, 1]], 1
    wpoly = _cubic_tz_witness(a1, a0, h, den, real, alpha)
    if wpoly is None:
        # theta is not a shortest vector; the field will be spawned by
        # the candidate that is
        return None
    wpd = poly_discriminant(wpoly)
    wind_sq, rem = divmod(wpd, disc)
    assert rem == 0
    windex = isqrt(wind_sq)
    assert windex * windex == wind_sq
    return FieldRecord(
        degree=3,
        min_poly=wpoly,
        poly_disc=wpd,
        field_disc=disc,
        index=windex,
        signature=(3, 0) if disc > 0 else (1, 1),
        galois_label=_cubic_galois(disc),
        stage=stage_of_poly(wpoly),
        order_basis=_cubic_order_basis(wpoly.coeffs[1], wpoly.coeffs[0], windex),
    )


def _cubic_chunk(args) -> list[FieldRecord]:
    rects, X = args
    out = []
    for rect in rects:
        for cand in _cubic_rect_survivors(*rect, X):
            rec = _cubic_candidate_record(*cand, X)
            if rec is not None:
                out.append(rec)
    return out


class _CubicLane:
    def __init__(self, X: int, workers: int):
        self.X = X
        self.workers = workers
        self.a1max, self.a0max, self.primes = _cubic_band(X)
        self.records: dict[MonicIntPoly, FieldRecord] = {}

    def stages(self) -> list[int]:
        return list(range(_cubic_stage_count(self.X)))

    def preload(self, records: list[FieldRecord]):
        for rec in records:
            self.records.setdefault(rec.min_poly, rec)

    def run_stage(self, s: int) -> list[FieldRecord]:
        rects = _cubic_stage_rects(s, self.X, self.a1max, self.a0max)
        fresh: list[FieldRecord] = []
        for rec in _map_chunks(
            _cubic_chunk, rects, self.X, self.workers, floor=1
        ):
            if rec.min_poly not in self.records:
                self.records[rec.min_poly] = rec
                fresh.append(rec)
        return fresh

    def all_records(self) -> list[FieldRecord]:
        return list(self.records.values())

    def metadata(self) -> dict:
        return {
            "lane": "trace-zero shortest-vector scan",
            "completeness": "proven complete",
            "witness_bound": "T2 <= 2 sqrt(|disc|)",
            "index_prime_bound": self.primes[-1] if self.primes else 1,
        }


def _map_chunks(fn, items, X, workers, floor=64):
    """Apply a chunk worker over items, preserving order."""
    if not items:
        return
    if workers <= 1:
        yield from fn((items, X))
        return
    size = max(floor, len(items) // (workers * 8) + 1)
    chunks = [items[i : i + size] for i in range(0, len(items), size)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(fn, [(c, X) for c in chunks]):
            yield from part


# ── degrees 4 and 5: bounded-trace search ────────────────────────────────

# proven values of the Hermite constant gamma_m for m <= 8, with a
# Mordell-type fallback beyond
_HERMITE = {
    1: 1.0,
    2: 1.1547006,
    3: 1.2599211,
    4: 1.4142136,
    5: 1.5157166,
    6: 1.6653664,
    7: 1.8114473,
    8: 2.0000001,
}


def _hermite(m: int) -> float:
    if m in _HERMITE:
        return _HERMITE[m]
    return (4 / 3) ** ((m - 1) / 2) * 1.000001


def _hunter_cap(n: int, t: int, bound: float) -> float:
    """Upper bound for T2 of a trace-t witness when |disc| <= bound."""
    return t * t / n + _hermite(n - 1) * (bound / n) ** (1 / (n - 1)) + 1e-9


def _index_prime_bound(n: int, X: int) -> int:
    """Largest possible prime factor of a bounded-trace witness index.

    index^2 = |polydisc| / |disc| with |polydisc| <= n T2^{n(n-1)/2} by
    Hadamard; the ratio is maximized at an endpoint of disc in [1, X-1]
    since its log-derivative changes sign once.
    """
    worst = 0.0
    for d in (1.0, float(X - 1)):
        cap = _hunter_cap(n, n // 2, d)
        worst = max(worst, n * cap ** (n * (n - 1) / 2) / d)
    return int(math.sqrt(worst)) + 1


_SMOOTH_CAP = 1000


def _fingerprint(f: MonicIntPoly, pd: int, primes: list[int]) -> dict:
    coeffs = f.all_coeffs()
    return {
        p: factorization_type(coeffs, p) for p in primes if pd % p != 0
    }


_FP_PRIMES = primes_up_to(71)  # the first 20 primes


def _fingerprints_compatible(a: dict, b: dict) -> bool:
    return all(a[p] == b[p] for p in a.keys() & b.keys())


def _same_field(f: MonicIntPoly, g: MonicIntPoly) -> bool:
    """Trager test; callers guarantee equal degree and field_disc."""
    if f == g:
        return True
    _, npoly = _squarefree_norm(f, g)
    return find_degree_factor(npoly.all_coeffs(), f.degree) is not None


def _quartic_reducible(t: int, e2: int, e3: int, e4: int) -> bool:
    # f = x^4 - t x^3 + e2 x^2 - e3 x + e4
    if e4 == 0:
        return True
    for r in _signed_divisors(e4):
        if (((r - t) * r + e2) * r - e3) * r + e4 == 0:
            return True
    # (x^2 + a x + b)(x^2 + c x + d): a + c = -t, bd = e4
    for b in _signed_divisors(e4):
        d, rem = divmod(e4, b)
        assert rem == 0
        prod = e2 - b - d
        disc = t * t - 4 * prod
        if disc < 0 or not is_perfect_square(disc):
            continue
        r = isqrt(disc)
        for num in (-t + r, -t - r):
            if num % 2:
                continue
            a = num // 2
            c = -t - a
            if a * d + b * c == -e3:
                return True
    return False


def _quintic_reducible(t: int, e2: int, e3: int, e4: int, e5: int) -> bool:
    # f = x^5 - t x^4 + e2 x^3 - e3 x^2 + e4 x - e5
    if e5 == 0:
        return True
    for r in _signed_divisors(e5):
        if ((((r - t) * r + e2) * r - e3) * r + e4) * r - e5 == 0:
            return True
    # (x^2 + a x + b)(x^3 + c x^2 + d x + e) with be = -e5; eliminating
    # c, d, e leaves a cubic in a whose integer roots are checked
    for b in _signed_divisors(e5):
        e, rem = divmod(-e5, b)
        assert rem == 0
        for a in _integer_roots_cubic(t, e2 - 2 * b, e + e3 - b * t):
            c = -t - a
            d = e2 - b - a * c
            if a * e + b * d == e4 and e + a * d + b * c == -e3:
                return True
    return False


def _np_poly_disc4(t, e2, E3, E4):
    """Vectorized quartic disc on a (len E3, len E4) grid."""
    a, b = -t, e2
    cpow = [np.ones_like(E3)]
    for _ in range(4):
        cpow.append(cpow[-1] * (-E3))
    dpow = [np.ones_like(E4)]
    for _ in range(3):
        dpow.append(dpow[-1] * E4)
    disc = np.zeros((len(E3), len(E4)), dtype=np.int64)
    for (i, j, k, l), coef in _QUARTIC_DISC_TERMS:
        scalar = coef * a**i * b**j
        disc += scalar * cpow[k][:, None] * dpow[l][None, :]
    return disc

def _np_poly_disc5(t, e2, e3, E4, E5):
    """Vectorized quintic disc on a (len E4, len E5) grid."""
    a, b, c = -t, e2, -e3
    dpow = [np.ones_like(E4)]
    for _ in range(5):
        dpow.append(dpow[-1] * E4)
    epow = [np.ones_like(E5)]
    for _ in range(4):
        epow.append(epow[-1] * (-E5))
    disc = np.zeros((len(E4), len(E5)), dtype=np.int64)
    for (i, j, k, l, m), coef in _QUINTIC_DISC_TERMS:
        scalar = coef * a**i * b**j * c**k
        disc += scalar * dpow[l][:, None] * epow[m][None, :]
    return disc


def _hunter_survivors_4(X: int) -> list[tuple]:
    primes = primes_up_to(min(_index_prime_bound(4, X), _SMOOTH_CAP))
    out = []
    for t in range(0, 3):
        cap = _hunter_cap(4, t, X - 1)
        e2lo = math.ceil((t * t - cap) / 2)
        e2hi = math.floor((t * t + cap) / 2)
        c3 = cap**1.5
        c4 = cap * cap
        e4sub = math.floor((cap / 4) ** 2)
        for e2 in range(e2lo, e2hi + 1):
            p2 = t * t - 2 * e2
            lo3 = math.ceil((-c3 - t**3 + 3 * t * e2) / 3)
            hi3 = math.floor((c3 - t**3 + 3 * t * e2) / 3)
            sub3 = math.floor(4 * (cap / 3) ** 1.5)
            lo3, hi3 = max(lo3, -sub3), min(hi3, sub3)
            if lo3 > hi3:
                continue
            E3 = np.arange(lo3, hi3 + 1, dtype=np.int64)
            P3 = t**3 - 3 * t * e2 + 3 * E3
            # chain hull for e4 over the whole e3 range
            centers = (t * P3 - e2 * p2 + t * E3) / 4
            lo4 = max(math.ceil(centers.min() - c4 / 4), -e4sub)
            hi4 = min(math.floor(centers.max() + c4 / 4), e4sub)
            if lo4 > hi4:
                continue
            E4 = np.arange(lo4, hi4 + 1, dtype=np.int64)
            P4 = (
                t * P3[:, None]
                - e2 * p2
                + t * E3[:, None]
                - 4 * E4[None, :]
            )
            alive = (np.abs(P3) <= c3)[:, None] & (np.abs(P4) <= c4)
            pd = _np_poly_disc4(t, e2, E3, E4)
            alive &= pd != 0
            ii, jj = np.nonzero(alive)
            vals = _strip_smooth_squares(np.abs(pd[ii, jj]), primes)
            keep = vals < X
            for i, j in zip(ii[keep].tolist(), jj[keep].tolist()):
                out.append((t, e2, int(E3[i]), int(E4[j])))
    return out


def _hunter_survivors_5(X: int) -> list[tuple]:
    primes = primes_up_to(min(_index_prime_bound(5, X), _SMOOTH_CAP))
    out = []
    for t in range(0, 3):
        cap = _hunter_cap(5, t, X - 1)
        c3, c4, c5 = cap**1.5, cap * cap, cap**2.5
        e5sub = math.floor((cap / 5) ** 2.5)
        e4sub = math.floor(5 * (cap / 4) ** 2)
        E5 = np.arange(-e5sub, e5sub + 1, dtype=np.int64)
        for e2 in range(
            math.ceil((t * t - cap) / 2), math.floor((t * t + cap) / 2) + 1
        ):
            p2 = t * t - 2 * e2
            lo3 = math.ceil((-c3 - t**3 + 3 * t * e2) / 3)
            hi3 = math.floor((c3 - t**3 + 3 * t * e2) / 3)
            for e3 in range(lo3, hi3 + 1):
                p3 = t**3 - 3 * t * e2 + 3 * e3
                center = (t * p3 - e2 * p2 + t * e3) / 4
                lo4 = max(math.ceil(center - c4 / 4), -e4sub)
                hi4 = min(math.floor(center + c4 / 4), e4sub)
                if lo4 > hi4:
                    continue
                E4 = np.arange(lo4, hi4 + 1, dtype=np.int64)
                P4 = t * p3 - e2 * p2 + t * e3 - 4 * E4
                P5 = (
                    (t * P4 - e2 * p3 + e3 * p2)[:, None]
                    - (E4 * t)[:, None]
                    + 5 * E5[None, :]
                )
                alive = (np.abs(P4) <= c4)[:, None] & (np.abs(P5) <= c5)
                pd = _np_poly_disc5(t, e2, e3, E4, E5)
                alive &= pd != 0
                ii, jj = np.nonzero(alive)
                if not len(ii):
                    continue
                vals = _strip_smooth_squares(np.abs(pd[ii, jj]), primes)
                keep = vals < X
                for i, j in zip(ii[keep].tolist(), jj[keep].tolist()):
                    out.append((t, e2, e3, int(E4[i]), int(E5[j])))
    return out


def _hunter_poly(tup: tuple) -> MonicIntPoly:
    """Polynomial with elementary symmetric functions (t, e2, e3, ...)."""
    n = len(tup)
    coeffs = [0] * n
    for k, e in enumerate(tup, start=1):
        coeffs[n - k] = (-1) ** k * e
    return MonicIntPoly(tuple(coeffs))


def _hunter_chunk(args) -> list[tuple]:
    """Exact pipeline for a batch of survivor tuples.

    Returns (tuple, poly_disc, field_disc, index, basis) entries for the
    candidates that define a field with |disc| < X.
    """
    tuples, X = args
    out = []
    for tup in tuples:
        n = len(tup)
        if n == 4 and _quartic_reducible(*tup):
            continue
        if n == 5 and _quintic_reducible(*tup):
            continue
        f = _hunter_poly(tup)
        if n not in (4, 5) and not is_irreducible(f):
            continue
        field = NumberField(f, check_irreducible=False)
        basis, disc, index = field.order_data()
        if abs(disc) >= X:
            continue
        out.append((tup, field.poly_disc, disc, index, tuple(tuple(r) for r in basis)))
    return out


def _v4_polys(X: int) -> list[MonicIntPoly]:
    """Defining polynomials of the biquadratic fields with |disc| < X.

    |disc(Q(sqrt(m1), sqrt(m2)))| is the product of the absolute
    discriminants of the three quadratic subfields; each unordered
    triple of subfields is emitted once, through the polynomial of
    sqrt(m1) + sqrt(m2).
    """
    if X < 4:
        return []
    limit = X - 1
    flags = _squarefree_flags(min(limit, 10**7))

    def qdisc(m: int) -> int:
        return m if m % 4 == 1 else 4 * m

    def sf(m: int) -> int:
        s = 1
        a = abs(m)
        for p in range(2, isqrt(a) + 1):
            while a % (p * p) == 0:
                a //= p * p
        # sign restored by caller
        return a

    out = []
    seen = set()
    ms = [m for a in range(2, limit + 1) if a < len(flags) and flags[a] for m in (a, -a)]
    ms.append(-1)
    ms.sort(key=lambda m: (abs(qdisc(m)), m))
    for i, m1 in enumerate(ms):
        d1 = abs(qdisc(m1))
        if d1 * 3 * 3 >= X:
            break
        for m2 in ms[i + 1 :]:
            d2 = abs(qdisc(m2))
            if d1 * d2 * 3 >= X:
                continue
            prod = m1 * m2
            m3 = sf(prod)
            if prod < 0:
                m3 = -m3
            if m3 == 1:
                continue
            d3 = abs(qdisc(m3))
            disc = d1 * d2 * d3
            if disc >= X:
                continue
            key = tuple(sorted((qdisc(m1), qdisc(m2), qdisc(m3))))
            if key in seen:
                continue
            seen.add(key)
            poly = MonicIntPoly(
                ((m1 - m2) ** 2, 0, -2 * (m1 + m2), 0)
            )
            out.append(poly)
    return out


class _HunterLane:
    """Degrees 4 and 5 (and the slow generic path for 6 and up)."""

    def __init__(self, n: int, X: int, sample_primes: int, workers: int):
        self.n = n
        self.X = X
        self.sample_primes = sample_primes
        self.workers = workers
        self.records: list[FieldRecord] = []
        self.buckets: dict[int, list[tuple[MonicIntPoly, dict]]] = {}
        self._staged: dict[int, list] | None = None

    # -- survivor streams ------------------------------------------------

    def _survivor_tuples(self) -> list[tuple]:
        if self.n == 4:
            return _hunter_survivors_4(self.X)
        if self.n == 5:
            return _hunter_survivors_5(self.X)
        return _generic_survivors(self.n, self.X)

    def _stage_plan(self) -> dict[int, list]:
        if self._staged is None:
            staged: dict[int, list] = {}
            for tup in self._survivor_tuples():
                s = stage_of_poly(_hunter_poly(tup))
                staged.setdefault(s, []).append(tup)
            if self.n == 4:
                for poly in _v4_polys(self.X):
                    s = stage_of_poly(poly)
                    staged.setdefault(s, []).append(("v4", poly))
            self._staged = staged
        return self._staged

    def stages(self) -> list[int]:
        plan = self._stage_plan()
        return list(range(max(plan.keys(), default=0) + 1))

    def preload(self, records: list[FieldRecord]):
        for rec in records:
            self.records.append(rec)
            fp = _fingerprint(rec.min_poly, rec.poly_disc, _FP_PRIMES)
            self.buckets.setdefault(rec.field_disc, []).append(
                (rec.min_poly, fp)
            )

    def run_stage(self, s: int) -> list[FieldRecord]:
        items = self._stage_plan().get(s, [])
        grid = [it for it in items if not (len(it) == 2 and it[0] == "v4")]
        v4polys = [it[1] for it in items if len(it) == 2 and it[0] == "v4"]
        fresh = []
        for tup, pd, disc, index, basis in _map_chunks(
            _hunter_chunk, grid, self.X, self.workers
        ):
            rec = self._admit(_hunter_poly(tup), pd, disc, index, basis, s)
            if rec is not None:
                fresh.append(rec)
        for poly in v4polys:
            if not is_irreducible(poly):
                continue
            field = NumberField(poly, check_irreducible=False)
            basis, disc, index = field.order_data()
            if abs(disc) >= self.X:
                continue
            rec = self._admit(
                poly,
                field.poly_disc,
                disc,
                index,
                tuple(tuple(r) for r in basis),
                s,
                label=GaloisLabel("other", "consistent with V4"),
            )
            if rec is not None:
                fresh.append(rec)
        return fresh

    def _admit(self, f, pd, disc, index, basis, stage, label=None):
        fp = _fingerprint(f, pd, _FP_PRIMES)
        bucket = self.buckets.setdefault(disc, [])
        for known_poly, known_fp in bucket:
            if _fingerprints_compatible(fp, known_fp) and _same_field(
                known_poly, f
            ):
                return None
        bucket.append((f, fp))
        if label is None:
            label = galois_type(f, self.sample_primes)
        rec = FieldRecord(
            degree=self.n,
            min_poly=f,
            poly_disc=pd,
            field_disc=disc,
            index=index,
            signature=signature_of(f),
            galois_label=label,
            stage=stage,
            order_basis=basis,
        )
        self.records.append(rec)
        return rec

    def all_records(self) -> list[FieldRecord]:
        return self.records

    def metadata(self) -> dict:
        bound = min(_index_prime_bound(self.n, self.X), _SMOOTH_CAP)
        if self.n == 4:
            completeness = (
                "proven complete for primitive fields and V4 fields; "
                "C4 and D4 classes may be partially covered"
            )
        elif self.n == 5:
            exact = _index_prime_bound(5, self.X)
            completeness = (
                "proven complete"
                if exact <= _SMOOTH_CAP
                else f"complete for witness indices with prime factors <= {bound}"
            )
        elif is_prime_int(self.n):
            completeness = (
                f"complete for witness indices with prime factors <= {bound}"
            )
        else:
            completeness = "heuristic: subfield witnesses may be missed"
        return {
            "lane": "bounded-trace search",
            "completeness": completeness,
            "index_prime_bound": bound,
            "hermite_constant": _hermite(self.n - 1),
        }


def is_prime_int(n: int) -> bool:
    return n >= 2 and is_probable_prime(n)


# ── degrees 6 and up: generic grid, small bounds only ────────────────────


def _generic_survivors(n: int, X: int) -> list[tuple]:
    """Pure-python bounded-trace grid for degree >= 6."""
    primes = primes_up_to(min(_index_prime_bound(n, X), _SMOOTH_CAP))
    est = 1.0
    caps = []
    for t in range(0, n // 2 + 1):
        caps.append(_hunter_cap(n, t, X - 1))
    cap = max(caps)
    for k in range(2, n + 1):
        width = 2 * math.comb(n, k) * (cap / k) ** (k / 2) + 1
        chain = 2 * cap ** (k / 2) / k + 1
        est *= min(width, chain)
    est *= n // 2 + 1
    if est > 2e7:
        raise ValueError(
            f"degree-{n} enumeration at bound {X} needs roughly {est:.0f} "
            "grid points; lower the bound"
        )

    out = []

    def recurse(t: int, cap_t: float, es: list[int], ps: list[int]):
        k = len(es) + 2
        if k > n:
            tup = (t, *es)
            pd = poly_discriminant(_hunter_poly(tup))
            if pd == 0:
                return
            if _strip_smooth_squares_int(abs(pd), primes) < X:
                out.append(tup)
            return
        # p_k = sum_i (-1)^(i-1) e_i p_{k-i} + (-1)^(k-1) k e_k
        acc = 0
        elems = [t, *es]
        for i in range(1, k):
            acc += (-1) ** (i - 1) * elems[i - 1] * ps[k - i]
        bk = cap_t ** (k / 2)
        sign = (-1) ** (k - 1)
        lo = math.ceil((-bk - acc) / k)
        hi = math.floor((bk - acc) / k)
        if sign < 0:
            lo, hi = -hi, -lo
        sub = math.floor(math.comb(n, k) * (cap_t / k) ** (k / 2))
        lo, hi = max(lo, -sub), min(hi, sub)
        for ek in range(lo, hi + 1):
            pk = acc + sign * k * ek
            recurse(t, cap_t, es + [ek], ps + [pk])

    for t in range(0, n // 2 + 1):
        recurse(t, _hunter_cap(n, t, X - 1), [], [n, t])
    return out


# ── driver ────────────────────────────────────────────────────────────────


def enumerate_fields(
    degree: int,
    disc_bound: int,
    field_filter: str = "any",
    sample_primes: int = 25,
    workers: int = 1,
    cache_path=None,
) -> EnumerationResult:
    """One canonical record per field class with |disc| < disc_bound."""
    if not isinstance(degree, int) or degree < 2:
        raise ValueError(f"degree must be an integer >= 2, got {degree!r}")
    if not isinstance(disc_bound, int) or disc_bound < 1:
        raise ValueError(f"disc_bound must be an integer >= 1, got {disc_bound!r}")
    if field_filter not in ("any", "sn_only"):
        raise ValueError(f"unknown filter {field_filter!r}")

    if degree == 2:
        lane = _ClosedFormLane(disc_bound)
    elif degree == 3:
        lane = _CubicLane(disc_bound, workers)
    else:
        lane = _HunterLane(degree, disc_bound, sample_primes, workers)

    _run_stages(lane, cache_path, degree, disc_bound)

    records = sorted(lane.all_records(), key=record_sort_key)
    records = [_ensure_basis(r) for r in records]
    if field_filter == "sn_only":
        kept = tuple(r for r in records if r.galois_label.kind == "Sn_certified")
        undet = tuple(
            r for r in records if r.galois_label.kind == "undetermined"
        )
    else:
        kept = tuple(records)
        undet = ()
    meta = {
        "degree": degree,
        "disc_bound": disc_bound,
        "filter": field_filter,
        "sample_primes": sample_primes,
        "stage_height_start": 1,
        "stage_rule": "height doubles each stage",
        "stages_run": len(lane.stages()),
        "record_count": len(kept),
        "undetermined_count": len(undet),
    }
    meta.update(lane.metadata())
    return EnumerationResult(records=kept, undetermined=undet, metadata=meta)


class _ClosedFormLane:
    """Degree 2: fundamental discriminants in closed form."""

    def __init__(self, X: int):
        self.X = X
        self.records: dict[MonicIntPoly, FieldRecord] = {}
        self._all: list[FieldRecord] | None = None

    def stages(self) -> list[int]:
        s = 0
        while (1 << (2 * s)) < self.X - 1:
            s += 1
        return list(range(s + 1))

    def preload(self, records: list[FieldRecord]):
        for rec in records:
            self.records.setdefault(rec.min_poly, rec)

    def run_stage(self, s: int) -> list[FieldRecord]:
        if self._all is None:
            self._all = _lane_degree2(self.X)
        fresh = []
        for rec in self._all:
            if rec.stage == s and rec.min_poly not in self.records:
                self.records[rec.min_poly] = rec
                fresh.append(rec)
        return fresh

    def all_records(self) -> list[FieldRecord]:
        return list(self.records.values())

    def metadata(self) -> dict:
        return {
            "lane": "fundamental discriminants, closed form",
            "completeness": "proven complete",
            "index_prime_bound": 2,
        }


def _ensure_basis(rec: FieldRecord) -> FieldRecord:
    if rec.order_basis is not None:
        return rec
    if rec.degree == 3 and rec.min_poly.coeffs[2] == 0:
        basis = _cubic_order_basis(
            rec.min_poly.coeffs[1], rec.min_poly.coeffs[0], rec.index
        )
    else:
        field = NumberField(rec.min_poly, check_irreducible=False)
        rows, disc, index = field.order_data()
        assert disc == rec.field_disc and index == rec.index
        basis = tuple(tuple(row) for row in rows)
    return FieldRecord(
        degree=rec.degree,
        min_poly=rec.min_poly,
        poly_disc=rec.poly_disc,
        field_disc=rec.field_disc,
        index=rec.index,
        signature=rec.signature,
        galois_label=rec.galois_label,
        stage=rec.stage,
        order_basis=tuple(tuple(row) for row in basis),
    )


def _run_stages(lane, cache_path, degree, disc_bound):
    if cache_path is None:
        for s in lane.stages():
            lane.run_stage(s)
        return
    from . import cache

    header = {"degree": degree, "disc_bound": disc_bound}
    done, loaded = cache.open_for_resume(cache_path, header)
    lane.preload(loaded)
    for s in lane.stages():
        if s <= done:
            continue
        fresh = lane.run_stage(s)
        cache.append_stage(cache_path, s, fresh)
