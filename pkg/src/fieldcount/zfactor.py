"""Factorization of monic integer polynomials (Zassenhaus).

Pipeline: squarefree decomposition over ZZ (Yun), factorization mod a
good prime (Cantor-Zassenhaus), quadratic Hensel lifting until the
modulus exceeds twice the Landau-Mignotte factor bound, exhaustive
subset recombination in order of subset size.
"""

from __future__ import annotations

from itertools import combinations
from math import comb, gcd, isqrt

from .intpoly import (
    MonicIntPoly,
    list_degree,
    list_derivative,
    list_divmod_exact,
    list_mul,
    list_trim,
    poly_gcd_q,
)
from . import modpoly as mp

_PRIMES_SMALL = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
    71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
]


def landau_mignotte_bound(f: list[int]) -> int:
    """Sup-norm bound for coefficients of any monic factor of monic f."""
    n = list_degree(f)
    norm2 = isqrt(sum(c * c for c in f)) + 1
    m = n // 2 if n >= 2 else 1
    return comb(n, m) * norm2


def _fp_ext_gcd(a, b, p):
    """(g, s, t) with s a + t b = g over F_p, g monic."""
    r0, r1 = mp.fp_from_int(a, p), mp.fp_from_int(b, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = mp.fp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, mp.fp_sub(s0, mp.fp_mul(q, s1, p), p)
        t0, t1 = t1, mp.fp_sub(t0, mp.fp_mul(q, t1, p), p)
    assert r0, "zero gcd"
    inv = pow(r0[-1], p - 2, p)
    return mp.fp_scale(r0, inv, p), mp.fp_scale(s0, inv, p), mp.fp_scale(t0, inv, p)


def _zm_trim(a, m):
    a = [c % m for c in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def _zm_mul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _zm_trim(out, m)


def _zm_sub(a, b, m):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] -= x
    return _zm_trim(out, m)


def _zm_add(a, b, m):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] += x
    return _zm_trim(out, m)


def _zm_divmod_monic(a, b, m):
    """Division by a monic polynomial with coefficients mod m."""
    assert b and b[-1] == 1
    a = [c % m for c in a]
    db = len(b) - 1
    q = [0] * max(len(a) - db, 1)
    for d in range(len(a) - 1, db - 1, -1):
        c = a[d] % m
        if c:
            q[d - db] = c
            for j in range(db + 1):
                a[d - db + j] = (a[d - db + j] - c * b[j]) % m
    return _zm_trim(q, m), _zm_trim(a, m)


def _hensel_step(f, g, h, s, t, m):
    """Lift f = g h (mod m) with s g + t h = 1 (mod m) to mod m^2.

    g and h monic; returns (g*, h*, s*, t*) mod m^2.
    """
    m2 = m * m
    e = _zm_sub(f, _zm_mul(g, h, m2), m2)
    q, r = _zm_divmod_monic(_zm_mul(s, e, m2), h, m2)
    g_new = _zm_add(g, _zm_add(_zm_mul(t, e, m2), _zm_mul(q, g, m2), m2), m2)
    h_new = _zm_add(h, r, m2)
    assert g_new[-1] == 1 and h_new[-1] == 1
    b = _zm_sub(_zm_add(_zm_mul(s, g_new, m2), _zm_mul(t, h_new, m2), m2), [1], m2)
    c, d = _zm_divmod_monic(_zm_mul(s, b, m2), h_new, m2)
    s_new = _zm_sub(s, d, m2)
    t_new = _zm_sub(t, _zm_add(_zm_mul(t, b, m2), _zm_mul(c, g_new, m2), m2), m2)
    return g_new, h_new, s_new, t_new


def _hensel_lift_tree(f, factors, p, target):
    """Lift a list of coprime monic factors of f mod p to mod p^a >= target."""
    if len(factors) == 1:
        m = p
        while m < target:
            m *= m
        return [_zm_trim(f, m)]
    half = len(factors) // 2
    left, right = factors[:half], factors[half:]
    g = [1]
    for fac in left:
        g = mp.fp_mul(g, fac, p)
    h = [1]
    for fac in right:
        h = mp.fp_mul(h, fac, p)
    one, s, t = _fp_ext_gcd(g, h, p)
    assert one == [1], "factors not coprime mod p"
    m = p
    while m < target:
        g, h, s, t = _hensel_step(f, g, h, s, t, m)
        m *= m
    return _hensel_lift_tree(g, left, p, target) + _hensel_lift_tree(h, right, p, target)


def _centered(a, m):
    out = []
    for c in a:
        c %= m
        if 2 * c > m:
            c -= m
        out.append(c)
    return out


def _divides_exactly(f, g):
    """If monic g divides monic f over ZZ return the quotient, else None."""
    q, r = list_divmod_exact(f, g)
    if r:
        return None
    if any(x.denominator != 1 for x in q):
        return None
    return [int(x) for x in q]


def _pick_prime(f):
    for p in _PRIMES_SMALL:
        fp = mp.fp_from_int(f, p)
        if len(fp) - 1 != list_degree(f):
            continue  # cannot happen for monic input, kept for safety
        if len(mp.fp_gcd(fp, mp.fp_derivative(fp, p), p)) - 1 == 0:
            return p
    raise ValueError("no squarefree prime found below 150; input not squarefree?")


def _lift_setup(f: list[int], rng=None):
    """Modular factors of squarefree monic f, Hensel-lifted past the
    recombination bound.  Returns (lifted factor list, modulus)."""
    p = _pick_prime(f)
    modular = [g for g, _ in mp.factor_mod_p(f, p, rng)]
    if len(modular) == 1:
        return None, None
    bound = 2 * landau_mignotte_bound(f)
    lifted = _hensel_lift_tree(list(f), modular, p, bound)
    modulus = p
    while modulus < bound:
        modulus *= modulus
    return lifted, modulus


def factor_squarefree_monic(f: list[int], rng=None):
    """Irreducible monic factors of a squarefree monic integer polynomial.

    Zassenhaus recombination: subsets of the lifted modular factors are
    tried in order of (size, index tuple), so every divisor found is
    irreducible.
    """
    n = list_degree(f)
    if n == 1:
        return [list(f)]
    lifted, modulus = _lift_setup(f, rng)
    if lifted is None:
        return [list(f)]

    found = []
    remaining = list(range(len(lifted)))
    current = list(f)

    def try_subsets():
        nonlocal current, remaining
        size = 1
        while 2 * size <= len(remaining):
            for combo in combinations(remaining, size):
                cand = _subset_candidate(lifted, combo, modulus)
                if list_degree(current) < list_degree(cand):
                    continue
                quot = _divides_exactly(current, cand)
                if quot is None:
                    continue
                found.append(cand)
                current = quot
                remaining = [i for i in remaining if i not in combo]
                return True
            size += 1
        return False

    while try_subsets():
        if list_degree(current) == 0:
            break
    if list_degree(current) > 0:
        found.append(current)
    return found


def _subset_candidate(lifted, combo, modulus):
    prod = [1]
    for i in combo:
        prod = _zm_mul(prod, lifted[i], modulus)
    return _centered(prod, modulus)


def find_degree_factor(f: list[int], d: int, rng=None):
    """An irreducible degree-d factor of squarefree monic f, or None.

    Visits subsets of the modular factors in increasing degree sum, so
    every divisor extracted before reaching sum d is irreducible, and a
    degree-d divisor found at sum d is irreducible too (a proper factor
    would have shown up at a smaller sum).  Much cheaper than full
    recombination when d is small relative to deg f.
    """
    n = list_degree(f)
    if d > n or d < 1:
        return None
    if n == 1:
        return list(f)
    lifted, modulus = _lift_setup(f, rng)
    if lifted is None:
        # single modular factor: f is irreducible
        return list(f) if d == n else None
    current = list(f)
    remaining = list(range(len(lifted)))
    degs = {i: len(lifted[i]) - 1 for i in remaining}
    for target in range(1, d + 1):
        progressed = True
        while progressed:
            progressed = False
            for size in range(1, target + 1):
                hit = None
                for combo in combinations(remaining, size):
                    if sum(degs[i] for i in combo) != target:
                        continue
                    cand = _subset_candidate(lifted, combo, modulus)
                    if _divides_exactly(current, cand) is not None:
                        hit = (combo, cand)
                        break
                if hit:
                    combo, cand = hit
                    if target == d:
                        return cand
                    current = _divides_exactly(current, cand)
                    remaining = [i for i in remaining if i not in combo]
                    progressed = True
                    break
    return None


def _yun_squarefree(f: list[int]):
    """Yun decomposition of a monic integer polynomial: [(g_i, i)]."""
    out = []
    g = poly_gcd_q(f, list_derivative(f))
    if list_degree(g) == 0:
        return [(list(f), 1)]
    w = _divides_exactly(f, g)
    i = 1
    while list_degree(w) > 0:
        y = poly_gcd_q(w, g)
        z = _divides_exactly(w, y)
        if list_degree(z) > 0:
            out.append((z, i))
        w = y
        nxt = _divides_exactly(g, y)
        g = nxt if nxt is not None else [1]
        i += 1
    return out


def factor_over_Z(f: MonicIntPoly, rng=None) -> list[MonicIntPoly]:
    """Irreducible monic factors of f with multiplicity, canonically sorted.

    Degree is capped at 12; larger inputs are a domain error for this
    public entry point (internal callers use factor_squarefree_monic).
    """
    if not 2 <= f.degree <= 12:
        raise ValueError(f"degree {f.degree} outside [2, 12]")
    out = []
    for part, mult in _yun_squarefree(f.all_coeffs()):
        if list_degree(part) == 0:
            continue
        for irr in factor_squarefree_monic(part, rng):
            d = list_degree(irr)
            assert irr[d] == 1
            out.extend([MonicIntPoly(tuple(irr[:d]))] * mult)
    out.sort(key=lambda g: g.canonical_key())
    assert sum(g.degree for g in out) == f.degree
    return out


def is_irreducible(f: MonicIntPoly, rng=None) -> bool:
    """Irreducibility over QQ (monic integral, so over ZZ too)."""
    n = f.degree
    if n == 1:
        return True
    coeffs = f.all_coeffs()
    # cheap sufficient test first
    tried = 0
    for p in _PRIMES_SMALL:
        fp = mp.fp_from_int(coeffs, p)
        if len(fp) - 1 != n:
            continue
        if len(mp.fp_gcd(fp, mp.fp_derivative(fp, p), p)) - 1 != 0:
            continue
        if mp.is_irreducible_mod_p(coeffs, p):
            return True
        tried += 1
        if tried >= 3:
            break
    parts = _yun_squarefree(coeffs)
    if len(parts) != 1 or parts[0][1] != 1:
        return False
    return len(factor_squarefree_monic(coeffs, rng)) == 1
