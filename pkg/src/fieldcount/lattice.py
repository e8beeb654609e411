"""Exact lattice reduction and short-vector enumeration.

All quadratic-form data is carried as Gram matrices with integer or
rational entries; arithmetic is exact (fractions.Fraction), so reduced
bases and successive minima are certified, not floating-point guesses.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .ratlin import frac_rank, invert, mat_identity, mat_mul, mat_transpose

DELTA = Fraction(3, 4)


def _ip(u, v, gram):
    return sum(Fraction(u[i]) * gram[i][j] * v[j]
               for i in range(len(u)) for j in range(len(v)))


def gram_of_rows(rows, form=None):
    """Gram matrix of row vectors, optionally under a quadratic form."""
    n = len(rows)
    if form is None:
        form = mat_identity(len(rows[0]))
    return [[_ip(rows[i], rows[j], form) for j in range(n)] for i in range(n)]


def _gso(basis, gram):
    """Gram-Schmidt data: (mu lower-triangular, squared norms B)."""
    n = len(basis)
    mu = [[Fraction(0)] * n for _ in range(n)]
    bstar = []  # GS vectors in basis coordinates (Fraction rows)
    bnorm = []
    for i in range(n):
        v = [Fraction(x) for x in basis[i]]
        for j in range(i):
            num = _ip(basis[i], bstar[j], gram)
            mu[i][j] = num / bnorm[j] if bnorm[j] else Fraction(0)
            for k in range(len(v)):
                v[k] -= mu[i][j] * bstar[j][k]
        bstar.append(v)
        bnorm.append(_ip(v, v, gram))
    return mu, bnorm


def lll_reduce(gram, delta: Fraction = DELTA):
    """LLL-reduce the lattice described by a Gram matrix.

    Returns (reduced_gram, transform) where transform is unimodular and
    reduced_gram = U G U^T.  The input must be positive definite.
    """
    n = len(gram)
    gram = [[Fraction(x) for x in row] for row in gram]
    u = mat_identity(n)
    if n == 1:
        assert gram[0][0] > 0, "form not positive definite"
        return [[gram[0][0]]], u
    basis = mat_identity(n)

    mu, bnorm = _gso(basis, gram)
    assert all(b > 0 for b in bnorm), "form not positive definite"
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = _round_half_even(mu[k][j])
            if q:
                basis[k] = [a - q * b for a, b in zip(basis[k], basis[j])]
                mu, bnorm = _gso(basis, gram)
        if bnorm[k] >= (delta - mu[k][k - 1] ** 2) * bnorm[k - 1]:
            k += 1
        else:
            basis[k], basis[k - 1] = basis[k - 1], basis[k]
            mu, bnorm = _gso(basis, gram)
            k = max(k - 1, 1)
    reduced = [[_ip(basis[i], basis[j], gram) for j in range(n)] for i in range(n)]
    return reduced, basis


def _round_half_even(x: Fraction) -> int:
    return round(x)


def lll_reduce_rows(rows, form=None, delta: Fraction = DELTA):
    """LLL-reduce explicit basis rows under a quadratic form.

    The rows need not be orthogonal or integral; the form defaults to
    the standard inner product.  Returns the reduced basis rows, which
    are unimodular integer combinations of the input rows.
    """
    gram = gram_of_rows(rows, form)
    _, u = lll_reduce(gram, delta)
    n, width = len(rows), len(rows[0])
    return [
        [sum(u[i][k] * rows[k][j] for k in range(n)) for j in range(width)]
        for i in range(n)
    ]


def _floor_sqrt(fr: Fraction) -> int:
    assert fr >= 0
    n, d = fr.numerator, fr.denominator
    return isqrt(n * d) // d


def floor_plus_sqrt(c: Fraction, r: Fraction) -> int:
    """floor(c + sqrt(r)) computed exactly for rational c and r >= 0."""
    c = Fraction(c)
    p, q = c.numerator, c.denominator
    s = _floor_sqrt(Fraction(q * q) * Fraction(r))
    return (p + s) // q


def ceil_minus_sqrt(c: Fraction, r: Fraction) -> int:
    """ceil(c - sqrt(r)) computed exactly."""
    return -floor_plus_sqrt(-Fraction(c), r)


def _cholesky(gram):
    """Q(x) = sum_i q[i] (x_i + sum_{j>i} m[i][j] x_j)^2, exact."""
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    q = [Fraction(0)] * n
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        q[i] = a[i][i]
        assert q[i] > 0, "form not positive definite"
        for j in range(i + 1, n):
            m[i][j] = a[i][j] / q[i]
        for r in range(i + 1, n):
            for c in range(r, n):
                a[r][c] -= m[i][c] * (a[i][r])
        for r in range(i + 1, n):
            for c in range(r):
                a[r][c] = a[c][r]
    return q, m


def enumerate_short_vectors(gram, bound, reduce_first: bool = True):
    """All nonzero x with x G x^T <= bound, one representative per +-x.

    Returns [(norm, vector)] sorted by (norm, vector); vectors are in
    the coordinates of the Gram matrix given.  The sign representative
    has positive first nonzero coordinate.
    """
    n = len(gram)
    bound = Fraction(bound)
    if bound <= 0:
        return []
    if reduce_first:
        red, u = lll_reduce(gram)
    else:
        red, u = [[Fraction(x) for x in row] for row in gram], mat_identity(n)
    q, m = _cholesky(red)
    results = []
    x = [0] * n

    def walk(i, remaining):
        if i < 0:
            if any(x):
                vec = [sum(x[r] * u[r][c] for r in range(n)) for c in range(n)]
                norm = bound - remaining
                for c in vec:
                    if c:
                        if c < 0:
                            vec = [-t for t in vec]
                        break
                results.append((norm, tuple(vec)))
            return
        center = -sum(m[i][j] * x[j] for j in range(i + 1, n))
        radius2 = remaining / q[i]
        lo = ceil_minus_sqrt(center, radius2)
        hi = floor_plus_sqrt(center, radius2)
        for xi in range(lo, hi + 1):
            x[i] = xi
            used = q[i] * (xi - center) ** 2
            walk(i - 1, remaining - used)
        x[i] = 0

    walk(n - 1, bound)
    dedup = {}
    for norm, vec in results:
        dedup[vec] = norm
    out = sorted((norm, vec) for vec, norm in dedup.items())
    return out


def shortest_vector(gram):
    """(minimal nonzero norm, witness vector)."""
    red, u = lll_reduce(gram)
    cap = min(red[i][i] for i in range(len(red)))
    vecs = enumerate_short_vectors(gram, cap)
    assert vecs, "reduced diagonal must contain a vector of minimal norm"
    return vecs[0]


def successive_minima(gram, k: int):
    """The first k successive minima (squared norms) of the form.

    Greedy scan of all vectors up to the largest diagonal entry of the
    LLL-reduced Gram matrix; the reduced basis itself witnesses that
    this cap is large enough.
    """
    n = len(gram)
    assert 1 <= k <= n
    red, u = lll_reduce(gram)
    cap = max(red[i][i] for i in range(n))
    vecs = enumerate_short_vectors(gram, cap)
    chosen = []
    minima = []
    for norm, vec in vecs:
        if frac_rank(chosen + [list(vec)]) > len(chosen):
            chosen.append(list(vec))
            minima.append(norm)
            if len(minima) == k:
                return tuple(minima)
    raise AssertionError("enumeration cap missed a successive minimum")


def minima_with_witnesses(gram, k: int):
    """Like successive_minima but returns [(norm, vector)] pairs."""
    n = len(gram)
    red, u = lll_reduce(gram)
    cap = max(red[i][i] for i in range(n))
    vecs = enumerate_short_vectors(gram, cap)
    chosen = []
    out = []
    for norm, vec in vecs:
        if frac_rank(chosen + [list(vec)]) > len(chosen):
            chosen.append(list(vec))
            out.append((norm, vec))
            if len(out) == k:
                return out
    raise AssertionError("enumeration cap missed a successive minimum")


def coordinate_box_bound(gram, bound):
    """Per-coordinate bound: x_i^2 <= bound * (G^-1)_ii for Q(x) <= bound."""
    inv = invert(gram)
    out = []
    for i in range(len(gram)):
        out.append(_floor_sqrt(Fraction(bound) * inv[i][i]))
    return out
