"""Dense polynomial arithmetic and factorization over F_p.

Coefficient lists are ascending, reduced mod p, with no trailing zeros.
Factorization runs squarefree -> distinct-degree -> equal-degree, the
last via Cantor-Zassenhaus.  The random splitting polynomials come from
a Random instance seeded through rng_from_env(), so identical runs give
identical transcripts.
"""

from __future__ import annotations

import os
import random

DEFAULT_SEED = 0


def rng_from_env() -> random.Random:
    """RNG seeded by FIELDCOUNT_SEED (default 0): reproducible by default."""
    seed = int(os.environ.get("FIELDCOUNT_SEED", DEFAULT_SEED))
    return random.Random(seed)


def fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def fp_from_int(coeffs: list[int], p: int) -> list[int]:
    return fp_trim([c % p for c in coeffs])


def fp_add(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % p
    return fp_trim(out)


def fp_sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] - x) % p
    return fp_trim(out)


def fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return fp_trim([c % p for c in out])


def fp_scale(a, s, p):
    s %= p
    if s == 0:
        return []
    return fp_trim([(x * s) % p for x in a])


def fp_divmod(a, b, p):
    assert b, "division by zero polynomial"
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - db, 1)
    while len(a) - 1 >= db and a:
        d = len(a) - 1
        f = (a[-1] * inv) % p
        if f:
            q[d - db] = f
            for j in range(db + 1):
                a[d - db + j] = (a[d - db + j] - f * b[j]) % p
        a.pop()
        fp_trim(a)
    return fp_trim(q), fp_trim(a)


def fp_mod(a, b, p):
    return fp_divmod(a, b, p)[1]


def fp_gcd(a, b, p):
    while b:
        a, b = b, fp_mod(a, b, p)
    if a:
        a = fp_scale(a, pow(a[-1], p - 2, p), p)
    return a


def fp_monic(a, p):
    if not a:
        return a
    return fp_scale(a, pow(a[-1], p - 2, p), p)


def fp_powmod(a, e: int, mod, p):
    """a^e mod (mod, p) by square and multiply."""
    result = [1]
    base = fp_mod(a, mod, p)
    while e:
        if e & 1:
            result = fp_mod(fp_mul(result, base, p), mod, p)
        base = fp_mod(fp_mul(base, base, p), mod, p)
        e >>= 1
    return result


def fp_derivative(a, p):
    return fp_trim([(i * c) % p for i, c in enumerate(a)][1:])


def fp_eval(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def fp_resultant(a, b, p):
    """Resultant over F_p by the Euclidean recurrence."""
    da, db = len(a) - 1, len(b) - 1
    if da < 0 or db < 0:
        return 0
    res = 1
    while True:
        if db == 0:
            return (res * pow(b[0], da, p)) % p
        r = fp_mod(a, b, p)
        dr = len(r) - 1
        if dr < 0:
            return 0
        res = (res * pow(b[-1], da - dr, p)) % p
        if (da % 2 == 1) and (db % 2 == 1):
            res = (-res) % p
        a, b, da, db = b, r, db, dr


def _squarefree_decomposition(a, p):
    """Yield (factor, multiplicity) with factor squarefree, over F_p."""
    out = []

    def split(f, mult):
        if len(f) - 1 <= 0:
            return
        d = fp_derivative(f, p)
        if not d:
            # f = g(x^p) = g(x)^p
            root = [f[i] for i in range(0, len(f), p)]
            split(root, mult * p)
            return
        g = fp_gcd(f, d, p)
        w = fp_divmod(f, g, p)[0]
        # w carries each squarefree factor once
        i = 1
        while len(w) - 1 > 0:
            y = fp_gcd(w, g, p)
            z = fp_divmod(w, y, p)[0]
            if len(z) - 1 > 0:
                out.append((fp_monic(z, p), mult * i))
            w = y
            g = fp_divmod(g, y, p)[0]
            i += 1
        if len(g) - 1 > 0:
            split(g, mult)

    split(fp_monic(a, p), 1)
    return out


def _distinct_degree(a, p):
    """Split a squarefree monic poly into products of equal-degree parts."""
    out = []
    h = [0, 1]  # x
    f = list(a)
    d = 0
    while len(f) - 1 > 0:
        d += 1
        if 2 * d > len(f) - 1:
            out.append((f, len(f) - 1))
            break
        h = fp_powmod(h, p, f, p)
        g = fp_gcd(fp_sub(h, [0, 1], p), f, p)
        if len(g) - 1 > 0:
            out.append((g, d))
            f = fp_divmod(f, g, p)[0]
            h = fp_mod(h, f, p)
    return out


def _equal_degree_split(f, d, p, rng):
    """Cantor-Zassenhaus split of a product of degree-d irreducibles."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        u = [rng.randrange(p) for _ in range(n)]
        u = fp_trim(u)
        if len(u) - 1 < 1:
            continue
        g = fp_gcd(u, f, p)
        if 0 < len(g) - 1 < n:
            split = g
        else:
            if p == 2:
                # trace map over F_2
                t = list(u)
                acc = list(u)
                for _ in range(d - 1):
                    t = fp_mod(fp_mul(t, t, p), f, p)
                    acc = fp_add(acc, t, p)
                g = fp_gcd(acc, f, p)
            else:
                e = (p**d - 1) // 2
                g = fp_gcd(fp_sub(fp_powmod(u, e, f, p), [1], p), f, p)
            if not (0 < len(g) - 1 < n):
                continue
            split = g
        rest = fp_divmod(f, split, p)[0]
        return _equal_degree_split(fp_monic(split, p), d, p, rng) + _equal_degree_split(
            fp_monic(rest, p), d, p, rng
        )


def factor_mod_p(coeffs: list[int], p: int, rng: random.Random | None = None) -> list[tuple[list[int], int]]:
    """Factor an integer polynomial mod p into monic irreducibles.

    Returns [(factor, multiplicity)] sorted by (degree, coefficients);
    input is given by its ascending integer coefficient list.  The unit
    (leading coefficient mod p) is discarded: callers factor monic
    polynomials or only need the monic parts.
    """
    assert p >= 2
    if rng is None:
        rng = rng_from_env()
    a = fp_from_int(coeffs, p)
    assert a, "polynomial vanishes mod p"
    out = []
    for sqf, mult in _squarefree_decomposition(a, p):
        for part, d in _distinct_degree(sqf, p):
            for irr in _equal_degree_split(part, d, p, rng):
                out.append((fp_monic(irr, p), mult))
    out.sort(key=lambda t: (len(t[0]), t[0]))
    return out


def factorization_type(coeffs: list[int], p: int, rng: random.Random | None = None) -> tuple[int, ...]:
    """Sorted degrees of the irreducible factors mod p (with multiplicity)."""
    facs = factor_mod_p(coeffs, p, rng)
    degs = []
    for f, m in facs:
        degs.extend([len(f) - 1] * m)
    return tuple(sorted(degs))


def is_irreducible_mod_p(coeffs: list[int], p: int) -> bool:
    """Deterministic irreducibility test (no splitting needed)."""
    f = fp_from_int(coeffs, p)
    n = len(f) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    h = [0, 1]
    for _ in range(n // 2):
        h = fp_powmod(h, p, f, p)
        if len(fp_gcd(fp_sub(h, [0, 1], p), f, p)) - 1 > 0:
            return False
    return True
