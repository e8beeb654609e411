"""Exact linear algebra over QQ, ZZ, and prime fields.

Matrices are lists of row lists.  Sizes here are tiny (dimension at
most a few dozen), so clarity wins over asymptotics: Gaussian
elimination over Fraction, Bareiss for integer determinants, and a
textbook Hermite normal form.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    assert all(len(r) == inner for r in a)
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            row.append(sum(a[i][k] * b[k][j] for k in range(inner)))
        out.append(row)
    return out


def mat_vec(a, v):
    return [sum(r[k] * v[k] for k in range(len(v))) for r in a]


def mat_identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_transpose(a):
    return [list(col) for col in zip(*a)]


def bareiss_det(a: list[list[int]]) -> int:
    """Determinant of an integer matrix, fraction-free."""
    n = len(a)
    if n == 0:
        return 1
    m = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if m[r][k]), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                q, r = divmod(num, prev)
                assert r == 0
                m[i][j] = q
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def frac_det(a) -> Fraction:
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    det = Fraction(1)
    for k in range(n):
        piv = next((r for r in range(k, n) if m[r][k]), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det *= m[k][k]
        inv = 1 / m[k][k]
        for i in range(k + 1, n):
            fac = m[i][k] * inv
            if fac:
                for j in range(k, n):
                    m[i][j] -= fac * m[k][j]
    return det


def solve_linear(a, b):
    """Solve A x = b exactly; raises ValueError if A is singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    for k in range(n):
        piv = next((r for r in range(k, n) if m[r][k]), None)
        if piv is None:
            raise ValueError("singular matrix")
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
        inv = 1 / m[k][k]
        for j in range(k, n + 1):
            m[k][j] *= inv
        for i in range(n):
            if i != k and m[i][k]:
                fac = m[i][k]
                for j in range(k, n + 1):
                    m[i][j] -= fac * m[k][j]
    return [m[i][n] for i in range(n)]


def invert(a):
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for k in range(n):
        piv = next((r for r in range(k, n) if m[r][k]), None)
        if piv is None:
            raise ValueError("singular matrix")
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
        inv = 1 / m[k][k]
        for j in range(k, 2 * n):
            m[k][j] *= inv
        for i in range(n):
            if i != k and m[i][k]:
                fac = m[i][k]
                for j in range(k, 2 * n):
                    m[i][j] -= fac * m[k][j]
    return [row[n:] for row in m]


def frac_rank(a) -> int:
    if not a:
        return 0
    m = [[Fraction(x) for x in row] for row in a]
    rows, cols = len(m), len(m[0])
    rank = 0
    row = 0
    for col in range(cols):
        piv = next((r for r in range(row, rows) if m[r][col]), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = 1 / m[row][col]
        for j in range(col, cols):
            m[row][j] *= inv
        for i in range(rows):
            if i != row and m[i][col]:
                fac = m[i][col]
                for j in range(col, cols):
                    m[i][j] -= fac * m[row][j]
        rank += 1
        row += 1
        if row == rows:
            break
    return rank


def hnf_row(a: list[list[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of the row space of an integer matrix.

    Returns the unique full-row-rank upper-echelon basis with positive
    pivots and entries above each pivot reduced into [0, pivot).
    Zero rows are dropped.
    """
    m = [row[:] for row in a if any(row)]
    if not m:
        return []
    cols = len(m[0])
    done = 0
    for col in range(cols):
        piv = None
        for r in range(done, len(m)):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[done], m[piv] = m[piv], m[done]
        # clear the column below via gcd steps
        for r in range(done + 1, len(m)):
            while m[r][col]:
                if abs(m[done][col]) > abs(m[r][col]):
                    m[done], m[r] = m[r], m[done]
                q = m[r][col] // m[done][col]
                for j in range(cols):
                    m[r][j] -= q * m[done][j]
        if m[done][col] < 0:
            m[done] = [-x for x in m[done]]
        done += 1
    m = [row for row in m[:done] if any(row)]
    # reduce entries above each pivot, left to right so a reduction
    # never disturbs a column that was already normalized
    pivots = []
    for row in m:
        pivots.append(next(j for j, x in enumerate(row) if x))
    for i in range(len(m)):
        col = pivots[i]
        p = m[i][col]
        for r in range(i):
            q = m[r][col] // p
            if q:
                for j in range(cols):
                    m[r][j] -= q * m[i][j]
    return m


def kernel_mod_p(a: list[list[int]], p: int) -> list[list[int]]:
    """Basis of the right null space of A over F_p."""
    if not a:
        return []
    rows, cols = len(a), len(a[0])
    m = [[x % p for x in row] for row in a]
    pivot_of_col = [-1] * cols
    row = 0
    for col in range(cols):
        piv = next((r for r in range(row, rows) if m[r][col]), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = pow(m[row][col], p - 2, p)
        m[row] = [(x * inv) % p for x in m[row]]
        for r in range(rows):
            if r != row and m[r][col]:
                fac = m[r][col]
                m[r] = [(x - fac * y) % p for x, y in zip(m[r], m[row])]
        pivot_of_col[col] = row
        row += 1
        if row == rows:
            break
    basis = []
    free = [c for c in range(cols) if pivot_of_col[c] == -1]
    for fc in free:
        v = [0] * cols
        v[fc] = 1
        for c in range(cols):
            r = pivot_of_col[c]
            if r != -1:
                v[c] = (-m[r][fc]) % p
        basis.append(v)
    return basis


def rank_mod_p(a: list[list[int]], p: int) -> int:
    if not a:
        return 0
    return len(a[0]) - len(kernel_mod_p(a, p))


def lcm_of_denominators(rows) -> int:
    l = 1
    for row in rows:
        for x in row:
            d = Fraction(x).denominator
            l = l * d // gcd(l, d)
    return l
