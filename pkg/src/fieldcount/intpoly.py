"""Monic integer polynomials with exact arithmetic.

Polynomials are stored dense. A MonicIntPoly of degree n keeps the
coefficient tuple (a_0, ..., a_{n-1}); the leading coefficient 1 is
implicit.  Free functions below work on plain ascending coefficient
lists so that non-monic intermediates (derivatives, pseudo-remainders)
stay cheap.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt


# ── dense coefficient-list helpers (ascending order) ──────────────────────


def list_degree(c: list) -> int:
    """Degree of a coefficient list, -1 for the zero polynomial."""
    d = len(c) - 1
    while d >= 0 and c[d] == 0:
        d -= 1
    return d


def list_trim(c: list) -> list:
    return c[: list_degree(c) + 1]


def list_add(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] += x
    return list_trim(out)


def list_neg(a: list) -> list:
    return [-x for x in a]


def list_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return list_trim(out)


def list_scale(a: list, s) -> list:
    if s == 0:
        return []
    return [x * s for x in a]


def list_eval(a: list, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def list_derivative(a: list) -> list:
    return [i * c for i, c in enumerate(a)][1:]


def list_divmod_exact(a: list, b: list) -> tuple[list, list]:
    """Division with remainder over the rationals (exact, Fractions)."""
    db = list_degree(b)
    assert db >= 0, "division by zero polynomial"
    r = [Fraction(x) for x in a]
    q = [Fraction(0)] * max(len(a) - db, 1)
    lead = Fraction(b[db])
    for i in range(list_degree(r), db - 1, -1):
        if r[i] == 0:
            continue
        f = r[i] / lead
        q[i - db] = f
        for j in range(db + 1):
            r[i - db + j] -= f * b[j]
    return list_trim(q), list_trim(r)


def list_pseudo_rem(a: list, b: list) -> list:
    """Pseudo-remainder: lc(b)^(da-db+1) * a mod b, all over ZZ."""
    da, db = list_degree(a), list_degree(b)
    assert db >= 0
    if da < db:
        return list(a)
    lead = b[db]
    r = list(a)
    for i in range(da, db - 1, -1):
        d = list_degree(r)
        if d < db:
            r = [x * lead for x in r]
            continue
        top = r[d]
        r = [x * lead for x in r]
        for j in range(db + 1):
            r[d - db + j] -= top * b[j]
        r = list_trim(r)
    return r


def content(a: list) -> int:
    g = 0
    for x in a:
        g = gcd(g, x)
    return g


def primitive_part(a: list) -> list:
    g = content(a)
    if g == 0:
        return []
    if a[list_degree(a)] < 0:
        g = -g
    return [x // g for x in a]


def resultant(a: list, b: list) -> int:
    """Resultant of two integer polynomials via the subresultant PRS.

    The scaling keeps every intermediate in ZZ (Collins); divisions are
    asserted exact.
    """
    da, db = list_degree(a), list_degree(b)
    if da < 0 or db < 0:
        return 0
    if da == 0 and db == 0:
        return 1
    if da == 0:
        return a[0] ** db
    if db == 0:
        return b[0] ** da
    sign = 1
    if da < db:
        if da % 2 == 1 and db % 2 == 1:
            sign = -sign
        a, b, da, db = b, a, db, da
    g = 1
    h = 1
    while True:
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            sign = -sign
        r = list_pseudo_rem(a, b)
        if not r:
            return 0
        denom = g * h**delta
        a, da = b, db
        b = [x // denom for x in r]
        assert all(x * denom == y for x, y in zip(b, r))
        db = list_degree(b)
        g = a[da]
        if delta > 0:
            num = g**delta
            assert num % h ** (delta - 1) == 0 or delta == 1
            h = num // h ** (delta - 1) if delta > 1 else num
        if db == 0:
            num = b[0] ** da
            den = h ** (da - 1)
            assert den != 0 and num % den == 0
            return sign * (num // den)


def poly_gcd_q(a: list, b: list) -> list:
    """Monic gcd over QQ, returned as a primitive integer list."""
    fa = list_trim([Fraction(x) for x in a])
    fb = list_trim([Fraction(x) for x in b])
    while fb:
        _, r = list_divmod_exact(fa, fb)
        fa, fb = fb, [Fraction(x) for x in r]
    if not fa:
        return []
    lead = fa[-1]
    mon = [x / lead for x in fa]
    den = 1
    for x in mon:
        den = den * x.denominator // gcd(den, x.denominator)
    return primitive_part([int(x * den) for x in mon])


# ── Sturm sequences and real roots ────────────────────────────────────────


def sturm_chain(a: list) -> list[list]:
    """Sturm chain of a squarefree integer polynomial (Fraction-exact)."""
    p0 = [Fraction(x) for x in list_trim(a)]
    p1 = [Fraction(x) for x in list_derivative(p0)]
    chain = [p0, p1]
    while list_degree(chain[-1]) > 0:
        _, r = list_divmod_exact(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-x for x in r])
    return chain


def _variations(signs: list[int]) -> int:
    signs = [s for s in signs if s != 0]
    return sum(1 for x, y in zip(signs, signs[1:]) if x * y < 0)


def sturm_count(chain: list[list], lo: Fraction, hi: Fraction) -> int:
    """Number of real roots in (lo, hi]."""
    def sgn_at(t):
        out = []
        for p in chain:
            v = list_eval(p, t)
            out.append(0 if v == 0 else (1 if v > 0 else -1))
        return out

    return _variations(sgn_at(lo)) - _variations(sgn_at(hi))


def _sign_at_inf(p: list, positive: bool) -> int:
    d = list_degree(p)
    if d < 0:
        return 0
    lead = p[d]
    s = 1 if lead > 0 else -1
    if not positive and d % 2 == 1:
        s = -s
    return s


def real_root_count(a: list) -> int:
    """Number of distinct real roots of a squarefree integer polynomial."""
    if list_degree(a) <= 0:
        return 0
    chain = sturm_chain(a)
    at_neg = _variations([_sign_at_inf(p, False) for p in chain])
    at_pos = _variations([_sign_at_inf(p, True) for p in chain])
    return at_neg - at_pos


def cauchy_bound(a: list) -> Fraction:
    """All complex roots lie in |z| < bound."""
    d = list_degree(a)
    assert d >= 1
    lead = abs(a[d])
    m = max(abs(x) for x in a[:d]) if d else 0
    return 1 + Fraction(m, lead)


def isolate_real_roots(a: list) -> list[tuple[Fraction, Fraction]]:
    """Disjoint rational intervals (lo, hi], one distinct real root each."""
    chain = sturm_chain(a)
    bound = cauchy_bound(a)
    work = [(-bound, bound)]
    out = []
    while work:
        lo, hi = work.pop()
        k = sturm_count(chain, lo, hi)
        if k == 0:
            continue
        if k == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        work.append((lo, mid))
        work.append((mid, hi))
    out.sort()
    return out


def refine_root(a: list, lo: Fraction, hi: Fraction, eps: Fraction) -> tuple[Fraction, Fraction]:
    """Bisect an isolating interval (lo, hi] down to width < eps."""
    flo = list_eval(a, lo)
    if flo == 0:
        return lo, lo
    while hi - lo >= eps:
        mid = (lo + hi) / 2
        fmid = list_eval(a, mid)
        if fmid == 0:
            return mid, mid
        if (flo > 0) != (fmid > 0):
            hi = mid
        else:
            lo, flo = mid, fmid
    return lo, hi


# ── the monic wrapper ─────────────────────────────────────────────────────


@dataclass(frozen=True, order=False)
class MonicIntPoly:
    """Monic integer polynomial; coeffs = (a_0, ..., a_{n-1})."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        assert len(self.coeffs) >= 1, "degree must be at least 1"
        assert all(isinstance(c, int) for c in self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def all_coeffs(self) -> list[int]:
        """Ascending list including the leading 1."""
        return list(self.coeffs) + [1]

    def __call__(self, x):
        return list_eval(self.all_coeffs(), x)

    def derivative(self) -> list[int]:
        return list_derivative(self.all_coeffs())

    def canonical_key(self):
        return (self.degree, tuple(reversed(self.coeffs)))

    def shift_argument(self, k: int) -> "MonicIntPoly":
        """The monic polynomial f(x + k)."""
        cur = [1]
        out = [0] * (self.degree + 1)
        for c in self.all_coeffs():
            for i, b in enumerate(cur):
                out[i] += c * b
            cur = list_mul(cur, [k, 1])
        return MonicIntPoly(tuple(out[: self.degree]))

    def negate_argument(self) -> "MonicIntPoly":
        """The monic polynomial (-1)^n f(-x)."""
        n = self.degree
        sign = -1 if n % 2 else 1
        return MonicIntPoly(tuple(sign * ((-1) ** i) * c for i, c in enumerate(self.coeffs)))

    def is_squarefree(self) -> bool:
        return poly_discriminant(self) != 0

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"MonicIntPoly({format_poly(self)!r})"


def poly_discriminant(f: MonicIntPoly) -> int:
    """disc(f) = (-1)^(n(n-1)/2) Res(f, f')  for monic f."""
    n = f.degree
    if n == 1:
        return 1
    res = resultant(f.all_coeffs(), f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * res


def poly_resultant(f: MonicIntPoly, g: MonicIntPoly) -> int:
    return resultant(f.all_coeffs(), g.all_coeffs())


def signature_of(f: MonicIntPoly) -> tuple[int, int]:
    """(r1, r2) for a squarefree polynomial: real roots and conjugate pairs."""
    assert f.is_squarefree()
    r1 = real_root_count(f.all_coeffs())
    assert (f.degree - r1) % 2 == 0
    return r1, (f.degree - r1) // 2


def is_perfect_square(m: int) -> bool:
    if m < 0:
        return False
    r = isqrt(m)
    return r * r == m


# ── text format: "x^3 - x - 1" ────────────────────────────────────────────

_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<coef>\d+)\s*\*?\s*)?(?:(?P<var>[a-zA-Z]\w*)(?:\^(?P<pow>\d+))?)?\s*"
)


def format_poly(f: MonicIntPoly) -> str:
    parts = []
    coeffs = f.all_coeffs()
    for d in range(f.degree, -1, -1):
        c = coeffs[d]
        if c == 0:
            continue
        mag = abs(c)
        if d == 0:
            body = str(mag)
        elif d == 1:
            body = "x" if mag == 1 else f"{mag}x"
        else:
            body = f"x^{d}" if mag == 1 else f"{mag}x^{d}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


class PolyParseError(ValueError):
    pass


def parse_poly(text: str) -> MonicIntPoly:
    """Parse the ASCII caret format; inverse of format_poly on canonical forms."""
    s = text.strip()
    if not s:
        raise PolyParseError("empty polynomial")
    pos = 0
    terms = []
    var_seen = None
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos or (m.group("coef") is None and m.group("var") is None):
            raise PolyParseError(f"bad token at offset {pos} in {text!r}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("sign") is None and terms:
            raise PolyParseError(f"missing +/- before offset {pos} in {text!r}")
        coef = int(m.group("coef")) if m.group("coef") else 1
        if m.group("var"):
            if var_seen is None:
                var_seen = m.group("var")
            elif m.group("var") != var_seen:
                raise PolyParseError(f"mixed variables {var_seen!r}, {m.group('var')!r}")
            power = int(m.group("pow")) if m.group("pow") else 1
        else:
            power = 0
        terms.append((power, sign * coef))
        pos = m.end()
    deg = max(p for p, _ in terms)
    if deg < 1:
        raise PolyParseError("constant polynomial")
    coeffs = [0] * (deg + 1)
    for p, c in terms:
        coeffs[p] += c
    if coeffs[deg] != 1:
        raise PolyParseError(f"not monic: leading coefficient {coeffs[deg]}")
    return MonicIntPoly(tuple(coeffs[:deg]))
