"""Number fields Q[x]/(f): elements, maximal orders, isomorphism, Galois labels.

Maximal orders come from the Dedekind criterion with Round-2 p-radical
enlargement.  Isomorphism testing is Trager's method: factor the norm
resultant of one defining polynomial over the other field.  Galois
labels are certified from Frobenius cycle types; the certificates here
are sound (a label of "S_n certified" is a proof, never a guess).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .intpoly import (
    MonicIntPoly,
    is_perfect_square,
    list_mul,
    list_trim,
    poly_discriminant,
    resultant,
    signature_of,
)
from . import modpoly as mp
from .ratlin import frac_rank, hnf_row, invert, kernel_mod_p, solve_linear
from .smallfactor import factorize
from .zfactor import find_degree_factor, is_irreducible


def power_sums(f: MonicIntPoly, count: int) -> list[int]:
    """Power sums p_0..p_{count-1} of the roots, by Newton's identities."""
    n = f.degree
    c = f.all_coeffs()  # ascending, c[n] = 1
    p = [n]
    for k in range(1, count):
        if k <= n:
            s = k * c[n - k]
            for i in range(1, k):
                s += c[n - i] * p[k - i]
            p.append(-s)
        else:
            s = 0
            for i in range(1, n + 1):
                s += c[n - i] * p[k - i]
            p.append(-s)
    return p


class NumberField:
    """Q[x]/(f) for monic irreducible f; power-basis arithmetic throughout."""

    def __init__(self, f: MonicIntPoly, check_irreducible: bool = True):
        if check_irreducible and not is_irreducible(f):
            raise ValueError(f"{f} is reducible")
        self.min_poly = f
        self.degree = f.degree
        self.poly_disc = poly_discriminant(f)
        n = self.degree
        # reduction rows: x^(n+k) in the power basis, exact integers
        rows = [[-a for a in f.coeffs]]  # x^n
        for _ in range(n - 2):
            shifted = [0] + rows[-1]
            head = shifted[n]
            cur = shifted[:n]
            if head:
                cur = [a + head * b for a, b in zip(cur, rows[0])]
            rows.append(cur)
        self._red_rows = rows
        self._psums = power_sums(f, 2 * n - 1)
        self._order = None

    # -- element plumbing ------------------------------------------------

    def element(self, coords) -> "FieldElement":
        c = [Fraction(x) for x in coords]
        assert len(c) <= self.degree
        c += [Fraction(0)] * (self.degree - len(c))
        return FieldElement(self, tuple(c))

    def zero(self) -> "FieldElement":
        return self.element([])

    def one(self) -> "FieldElement":
        return self.element([1])

    def theta(self) -> "FieldElement":
        return self.element([0, 1])

    def _reduce(self, coeffs):
        """Reduce an ascending coefficient list mod f into the power basis."""
        n = self.degree
        out = list(coeffs[:n]) + [Fraction(0)] * max(0, n - len(coeffs))
        for k in range(len(coeffs) - 1, n - 1, -1):
            c = coeffs[k]
            if c:
                row = self._red_rows[k - n]
                for i in range(n):
                    out[i] += c * row[i]
        return out[:n]

    def mul_coords(self, a, b):
        prod = [Fraction(0)] * (2 * self.degree - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return self._reduce(prod)

    @property
    def signature(self) -> tuple[int, int]:
        return signature_of(self.min_poly)

    def is_totally_real(self) -> bool:
        return self.signature[1] == 0

    # -- maximal order ---------------------------------------------------

    def order_data(self):
        """(basis rows as Fractions, field_disc, index), computed once."""
        if self._order is None:
            self._order = _maximal_order_impl(self)
        return self._order

    @property
    def field_disc(self) -> int:
        return self.order_data()[1]

    @property
    def index(self) -> int:
        return self.order_data()[2]

    def order_basis(self):
        return self.order_data()[0]

    def __repr__(self):
        return f"NumberField({self.min_poly})"


@dataclass(frozen=True)
class FieldElement:
    field: NumberField
    coords: tuple  # Fractions in the power basis

    def __add__(self, other):
        other = self._coerce(other)
        return FieldElement(
            self.field, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other):
        other = self._coerce(other)
        return FieldElement(
            self.field, tuple(a - b for a, b in zip(self.coords, other.coords))
        )

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, tuple(a * other for a in self.coords))
        other = self._coerce(other)
        return FieldElement(
            self.field, tuple(self.field.mul_coords(self.coords, other.coords))
        )

    __rmul__ = __mul__

    def __pow__(self, e: int):
        assert e >= 0
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            assert other.field is self.field
            return other
        return self.field.element([other])

    def is_zero(self) -> bool:
        return not any(self.coords)

    def trace(self) -> Fraction:
        return sum(c * p for c, p in zip(self.coords, self.field._psums))

    def norm(self) -> Fraction:
        den = 1
        for c in self.coords:
            den = den * c.denominator // _gcd(den, c.denominator)
        scaled = [c.numerator * (den // c.denominator) for c in self.coords]
        w = list_trim(scaled)
        if not w:
            return Fraction(0)
        r = resultant(self.field.min_poly.all_coeffs(), w)
        return Fraction(r, den ** self.field.degree)

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("zero element")
        n = self.field.degree
        cols = []
        for i in range(n):
            e_i = [Fraction(0)] * n
            e_i[i] = Fraction(1)
            cols.append(self.field.mul_coords(self.coords, e_i))
        mat = [[cols[j][i] for j in range(n)] for i in range(n)]
        sol = solve_linear(mat, [Fraction(1)] + [Fraction(0)] * (n - 1))
        return FieldElement(self.field, tuple(sol))

    def minimal_polynomial(self):
        """Monic minimal polynomial over Q, as an ascending Fraction list."""
        n = self.field.degree
        rows = [[Fraction(1)] + [Fraction(0)] * (n - 1)]
        power = self.field.one()
        for k in range(1, n + 1):
            power = power * self
            rows.append(list(power.coords))
            dep = _dependency(rows)
            if dep is not None:
                return dep
        raise AssertionError("element of degree exceeding the field degree")

    def degree_over_Q(self) -> int:
        return len(self.minimal_polynomial()) - 1

    def generates_field(self) -> bool:
        return self.degree_over_Q() == self.field.degree

    def t2_norm(self) -> Fraction:
        """Sum of |sigma(x)|^2 over all embeddings, as Tr(x^2).

        Only valid in a totally real field, where every embedding is
        real and |sigma(x)|^2 = sigma(x)^2 = sigma(x^2).
        """
        assert self.field.is_totally_real(), "exact T2 needs a totally real field"
        return (self * self).trace()

    def __repr__(self):
        return f"FieldElement({self.coords})"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _dependency(rows):
    """If the last row depends on the earlier ones, return monic poly coeffs.

    rows = coordinates of 1, z, ..., z^k; returns ascending coefficient
    list of the monic degree-k polynomial annihilating z, or None.
    """
    k = len(rows) - 1
    mat = [[rows[i][j] for i in range(k)] for j in range(len(rows[0]))]
    rhs = [rows[k][j] for j in range(len(rows[0]))]
    if frac_rank([list(r) for r in rows[:k]]) != frac_rank([list(r) for r in rows]):
        return None
    sol = _solve_underdetermined(mat, rhs)
    if sol is None:
        return None
    return [-s for s in sol] + [Fraction(1)]


def _solve_underdetermined(mat, rhs):
    """One exact solution of mat . x = rhs (mat may be non-square), or None."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    aug = [[Fraction(mat[i][j]) for j in range(cols)] + [Fraction(rhs[i])]
           for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, rows):
        if aug[i][cols]:
            return None
    sol = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        sol[c] = aug[i][cols]
    return sol


# -- maximal order ------------------------------------------------------


def dedekind_maximal_at_p(f: MonicIntPoly, p: int) -> bool:
    """Dedekind's criterion: is Z[theta] maximal at p?"""
    coeffs = f.all_coeffs()
    fbar = mp.fp_from_int(coeffs, p)
    factors = mp.factor_mod_p(coeffs, p)
    gbar = [1]
    for fac, _ in factors:
        gbar = mp.fp_mul(gbar, fac, p)
    hbar, rem = mp.fp_divmod(fbar, gbar, p)
    assert not rem
    g = [c % p for c in gbar]
    h = [c % p for c in hbar]
    gh = list_mul(g, h)
    t = [(a - b) // p for a, b in zip(gh, coeffs)]
    assert all((a - b) % p == 0 for a, b in zip(gh, coeffs))
    tbar = mp.fp_from_int(t, p)
    u = mp.fp_gcd(mp.fp_gcd(tbar, gbar, p), hbar, p)
    return len(u) - 1 == 0


def _maximal_order_impl(field: NumberField):
    n = field.degree
    disc = field.poly_disc
    assert disc != 0
    # basis rows over a common denominator: basis_i = H[i] / den
    h = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    den = 1
    for p, e in factorize(disc).items():
        if e < 2:
            continue
        # if Z[theta] is already p-maximal so is any order containing it
        # with index coprime to p, which holds here since each prime is
        # enlarged at most once
        if dedekind_maximal_at_p(field.min_poly, p):
            continue
        h, den = _p_maximal(field, h, den, p)
    index_sq, rem = divmod(den ** (2 * n), _det_squared(h))
    assert rem == 0 and is_perfect_square(index_sq)
    index = _isqrt_exact(index_sq)
    field_disc = disc // (index * index)
    h = _lower_triangular_rows(h)
    basis = [[Fraction(x, den) for x in row] for row in h]
    assert basis[0] == [Fraction(1)] + [Fraction(0)] * (n - 1)
    return basis, field_disc, index


def _lower_triangular_rows(h):
    """Rebase lattice rows so row i is supported on coordinates 0..i.

    Reversing the coordinate order turns the usual row echelon form
    into the classical presentation of an order basis: 1, then a
    fraction linear in theta, and so on up the powers.
    """
    rev = [row[::-1] for row in h]
    echelon = hnf_row(rev)
    return [row[::-1] for row in echelon][::-1]


def _det_squared(h):
    from .ratlin import bareiss_det

    d = bareiss_det(h)
    return d * d


def _isqrt_exact(n):
    from math import isqrt

    r = isqrt(n)
    assert r * r == n
    return r


def _p_maximal(field: NumberField, h, den, p):
    """Enlarge the order with basis h/den until it is p-maximal."""
    n = field.degree
    while True:
        basis = [[Fraction(x, den) for x in row] for row in h]
        binv = invert(basis)

        def to_basis(vec_pow):
            out = []
            for j in range(n):
                out.append(sum(Fraction(vec_pow[i]) * binv[i][j] for i in range(n)))
            return out

        basis_elems = [field.element(row) for row in basis]
        # Frobenius matrix on O/pO: column i = coords of basis_i^p
        frob_cols = []
        for b in basis_elems:
            bp = b ** p
            coords = to_basis(bp.coords)
            col = []
            for x in coords:
                assert x.denominator == 1, "order multiplication left the order"
                col.append(x.numerator % p)
            frob_cols.append(col)
        fmat = [[frob_cols[j][i] for j in range(n)] for i in range(n)]
        m = 1
        pm = p
        while pm < n:
            pm *= p
            m += 1
        fpow = fmat
        for _ in range(m - 1):
            fpow = [[sum(fpow[i][k] * fmat[k][j] for k in range(n)) % p
                     for j in range(n)] for i in range(n)]
        rad = kernel_mod_p(fpow, p)
        # radical ideal I as a lattice in basis coordinates
        gens = [list(v) for v in rad] + [
            [p if i == j else 0 for j in range(n)] for i in range(n)
        ]
        w = hnf_row(gens)
        winv = invert(w)
        # multiplication by basis elements maps I into I; coordinates of
        # b_i * w_j in the W basis are integers
        cond_rows = []
        w_elems = []
        for wrow in w:
            coords_pow = [sum(Fraction(wrow[t]) * basis[t][i] for t in range(n))
                          for i in range(n)]
            w_elems.append(field.element(coords_pow))
        for i in range(n):
            b = basis_elems[i]
            col_block = []
            for we in w_elems:
                prod = b * we
                in_basis = to_basis(prod.coords)
                wcoords = []
                for l in range(n):
                    v = sum(in_basis[t] * winv[t][l] for t in range(n))
                    assert v.denominator == 1, "radical is not an ideal"
                    wcoords.append(v.numerator % p)
                col_block.extend(wcoords)
            cond_rows.append(col_block)
        cond = [[cond_rows[i][r] for i in range(n)] for r in range(n * n)]
        ker = kernel_mod_p(cond, p)
        new_rows = []
        for z in ker:
            pow_coords = [sum(Fraction(z[t]) * basis[t][i] for t in range(n))
                          for i in range(n)]
            # candidate z/p; in integer matrix form over denominator den*p
            row = [x * den for x in pow_coords]
            assert all(r.denominator == 1 for r in row)
            new_rows.append([int(r) for r in row])
        if not new_rows:
            return h, den
        stacked = [[x * p for x in row] for row in h] + new_rows
        h2 = hnf_row(stacked)
        den2 = den * p
        # shrink the common denominator if possible
        if _det_squared(h2) == _det_squared([[x * p for x in row] for row in h]):
            return h, den
        h, den = h2, den2
        g = den
        for row in h:
            for x in row:
                g = _gcd(g, x)
                if g == 1:
                    break
        if g > 1:
            h = [[x // g for x in row] for row in h]
            den //= g


def maximal_order(f: MonicIntPoly):
    """(order_basis rows, field_disc, index) for irreducible monic f."""
    field = NumberField(f)
    return field.order_data()


def trace_zero_sublattice(field: NumberField) -> list[FieldElement]:
    """Z-basis of {x in the maximal order : Tr(x) = 0}.

    The basis is saturated (it spans the full integer kernel of the
    trace form on the order, not a finite-index sublattice), so lattice
    invariants computed from it are invariants of the field.
    """
    basis, _, _ = field.order_data()
    elems = [field.element(row) for row in basis]
    traces = []
    for e in elems:
        t = e.trace()
        assert t.denominator == 1
        traces.append(t.numerator)
    n = field.degree
    aug = [[traces[i]] + [int(j == i) for j in range(n)] for i in range(n)]
    out = []
    for row in hnf_row(aug):
        if row[0] == 0:
            x = field.zero()
            for c, e in zip(row[1:], elems):
                if c:
                    x = x + c * e
            out.append(x)
    assert len(out) == n - 1
    return out


# -- Trager isomorphism test and root finding ---------------------------


def _compose_linear(g: list[int], a: int, b: int) -> list[int]:
    """Coefficients of g(a + b x) for integer a, b."""
    out = [g[-1]]
    for c in reversed(g[:-1]):
        # out * (a + b x) + c
        nxt = [0] * (len(out) + 1)
        for i, x in enumerate(out):
            nxt[i] += x * a
            nxt[i + 1] += x * b
        nxt[0] += c
        out = nxt
    return out


def norm_resultant_poly(f: MonicIntPoly, g: MonicIntPoly, shift: int) -> list[int]:
    """Res_x(f(x), g(y - shift*x)) as a monic integer polynomial in y.

    Computed by evaluation at nm+1 integer points and exact Lagrange
    interpolation; this is the norm of g(y - shift*theta) from
    Q[x]/(f) down to Q.
    """
    n, m = f.degree, g.degree
    deg = n * m
    fc = f.all_coeffs()
    ys = list(range(-(deg // 2), deg - (deg // 2) + 1))
    vals = []
    for y0 in ys:
        gy = _compose_linear(g.all_coeffs(), y0, -shift)
        gy = list_trim(gy)
        vals.append(resultant(fc, gy) if gy else 0)
    coeffs = _interpolate_int(ys, vals)
    assert len(coeffs) == deg + 1 and coeffs[-1] == 1
    return coeffs


def _interpolate_int(xs, ys):
    k = len(xs)
    coeffs = [Fraction(0)] * k
    for i in range(k):
        # Lagrange basis polynomial for xs[i]
        num = [Fraction(1)]
        denom = Fraction(1)
        for j in range(k):
            if j == i:
                continue
            num = _mul_linear(num, -xs[j])
            denom *= xs[i] - xs[j]
        scale = Fraction(ys[i]) / denom
        for t in range(len(num)):
            coeffs[t] += scale * num[t]
    out = []
    for c in coeffs:
        assert c.denominator == 1
        out.append(int(c))
    while out and out[-1] == 0:
        out.pop()
    return out


def _mul_linear(poly, c0):
    # poly * (x + c0)
    out = [Fraction(0)] * (len(poly) + 1)
    for i, x in enumerate(poly):
        out[i] += x * c0
        out[i + 1] += x
    return out


def _squarefree_norm(f: MonicIntPoly, g: MonicIntPoly):
    """(shift k, norm poly) with the norm squarefree; k = 0, 1, 2, ..."""
    k = 0
    while True:
        nf = norm_resultant_poly(f, g, k)
        d = len(nf) - 1
        npoly = MonicIntPoly(tuple(nf[:d]))
        if npoly.is_squarefree():
            return k, npoly
        k += 1
        assert k < 10 * f.degree * g.degree, "no squarefree shift found"


def find_root_in_field(g: MonicIntPoly, field: NumberField):
    """A root of g in the field, or None.  g monic integral, any degree."""
    f = field.min_poly
    if g.degree == 1:
        return field.element([-g.coeffs[0]])
    k, npoly = _squarefree_norm(f, g)
    n = field.degree
    target = find_degree_factor(npoly.all_coeffs(), n)
    if target is None:
        return None
    # gcd over the field of g(y) and target(y + k*theta) is linear; its
    # root is the sought root of g
    theta = field.theta()
    gy = [field.element([c]) for c in g.all_coeffs()]
    ty = _k_compose_shift(target, theta * k, field)
    r = _k_poly_gcd(gy, ty, field)
    assert len(r) == 2, "squarefree norm must give a linear gcd"
    root = -(r[0] * r[1].inverse())
    assert _k_eval(gy, root, field).is_zero()
    return root


def _k_compose_shift(poly_int, shift_elem, field):
    """poly(y + s) over the field, ascending FieldElement list."""
    out = [field.element([poly_int[-1]])]
    for c in reversed(poly_int[:-1]):
        nxt = [field.zero() for _ in range(len(out) + 1)]
        for i, x in enumerate(out):
            nxt[i] = nxt[i] + x * shift_elem
            nxt[i + 1] = nxt[i + 1] + x
        nxt[0] = nxt[0] + field.element([c])
        out = nxt
    return out


def _k_poly_gcd(a, b, field):
    """Monic gcd of polynomials with FieldElement coefficients."""
    a, b = list(a), list(b)
    while b and all(c.is_zero() for c in b):
        b = []
    while b:
        a = _k_poly_mod(a, b, field)
        a, b = b, a
    lead = a[-1]
    inv = lead.inverse()
    return [c * inv for c in a]


def _k_poly_mod(a, b, field):
    a = list(a)
    db = len(b) - 1
    binv = b[-1].inverse()
    while len(a) - 1 >= db and a:
        c = a[-1] * binv
        if not c.is_zero():
            for i in range(db + 1):
                a[len(a) - 1 - db + i] = a[len(a) - 1 - db + i] - c * b[i]
        a.pop()
        while a and a[-1].is_zero():
            a.pop()
        if not a:
            break
    return a


def _k_eval(poly, x, field):
    acc = field.zero()
    for c in reversed(poly):
        acc = acc * x + c
    return acc


_QUICK_REJECT_PRIMES = 20


def is_isomorphic(f: MonicIntPoly, g: MonicIntPoly) -> bool:
    """Whether Q[x]/(f) and Q[x]/(g) are isomorphic fields."""
    if f.degree != g.degree:
        return False
    for h in (f, g):
        if not is_irreducible(h):
            raise ValueError(f"{h} is reducible")
    if f == g:
        return True
    if signature_of(f) != signature_of(g):
        return False
    # cycle types at small primes of good reduction must agree
    df, dg = poly_discriminant(f), poly_discriminant(g)
    checked = 0
    p = 2
    while checked < _QUICK_REJECT_PRIMES:
        if df % p and dg % p:
            if mp.factorization_type(f.all_coeffs(), p) != mp.factorization_type(
                g.all_coeffs(), p
            ):
                return False
            checked += 1
        p = _next_prime(p)
    if (
        NumberField(f, check_irreducible=False).field_disc
        != NumberField(g, check_irreducible=False).field_disc
    ):
        return False
    # decisive: g has a root in Q[x]/(f) exactly when the squarefree
    # norm resultant has an irreducible factor of degree deg(f)
    _, npoly = _squarefree_norm(f, g)
    return find_degree_factor(npoly.all_coeffs(), f.degree) is not None


def _next_prime(p: int) -> int:
    from .smallfactor import is_probable_prime

    p += 1
    while not is_probable_prime(p):
        p += 1
    return p


# -- Galois certification ----------------------------------------------

_EVEN_GROUPS = {
    3: ("A3",),
    4: ("V4", "A4"),
    5: ("C5", "D5", "A5"),
}

_GROUP_TYPES = {
    "A3": {(3,), (1, 1, 1)},
    "S3": {(3,), (1, 2), (1, 1, 1)},
    "C4": {(4,), (2, 2), (1, 1, 1, 1)},
    "V4": {(2, 2), (1, 1, 1, 1)},
    "D4": {(4,), (2, 2), (1, 1, 2), (1, 1, 1, 1)},
    "A4": {(1, 3), (2, 2), (1, 1, 1, 1)},
    "S4": {(4,), (1, 3), (2, 2), (1, 1, 2), (1, 1, 1, 1)},
    "C5": {(5,), (1, 1, 1, 1, 1)},
    "D5": {(5,), (1, 2, 2), (1, 1, 1, 1, 1)},
    "F20": {(5,), (1, 4), (1, 2, 2), (1, 1, 1, 1, 1)},
    "A5": {(5,), (1, 1, 3), (1, 2, 2), (1, 1, 1, 1, 1)},
    "S5": {(5,), (1, 4), (2, 3), (1, 1, 3), (1, 2, 2), (1, 1, 1, 2),
           (1, 1, 1, 1, 1)},
}

_GROUP_ORDER = {
    "A3": 3, "S3": 6, "C4": 4, "V4": 4, "D4": 8, "A4": 12, "S4": 24,
    "C5": 5, "D5": 10, "F20": 20, "A5": 60, "S5": 120,
}


@dataclass(frozen=True)
class GaloisLabel:
    kind: str  # "Sn_certified" | "other" | "undetermined"
    description: str

    def __str__(self):
        if self.kind == "other":
            return f"other({self.description})"
        return self.kind


def galois_type(f: MonicIntPoly, sample_primes: int = 25) -> GaloisLabel:
    """Certified Galois information from Frobenius cycle types.

    "Sn_certified" is sound: for n in {3,4,5} it requires an observed
    3-cycle type together with a transposition type, which forces the
    full symmetric group among the transitive subgroups (a 3-cycle
    rules out every subgroup of order coprime to 3; a transposition
    rules out the alternating group).  A perfect-square discriminant
    proves the group lies in A_n, and the label is then other("...")
    naming the smallest transitive subgroup consistent with all samples.
    """
    if not is_irreducible(f):
        raise ValueError(f"{f} is reducible")
    n = f.degree
    if n == 2:
        return GaloisLabel("Sn_certified", "S2")
    disc = poly_discriminant(f)
    seen: set[tuple] = set()
    count = 0
    p = 2
    coeffs = f.all_coeffs()
    while count < sample_primes:
        if disc % p != 0:
            # the group contains every power of an observed element, so
            # close each cycle type under powers (a (2,3) sample, cubed,
            # certifies a transposition)
            seen |= _power_types(mp.factorization_type(coeffs, p))
            count += 1
        p = _next_prime(p)
    square = is_perfect_square(disc)
    if not square and _sn_certificate(n, seen):
        return GaloisLabel("Sn_certified", f"S{n}")
    if square:
        if n in _EVEN_GROUPS:
            for name in sorted(
                _EVEN_GROUPS[n], key=lambda g: _GROUP_ORDER[g]
            ):
                if seen <= _GROUP_TYPES[name]:
                    return GaloisLabel("other", f"consistent with {name}")
        return GaloisLabel("other", "contained in the alternating group")
    return GaloisLabel("undetermined", "insufficient evidence")


def _power_types(t: tuple) -> set[tuple]:
    """Cycle types of all powers of a permutation with cycle type t."""
    from math import gcd, lcm

    order = 1
    for c in t:
        order = lcm(order, c)
    out = set()
    for m in range(1, order + 1):
        parts = []
        for c in t:
            g = gcd(c, m)
            parts.extend([c // g] * g)
        out.add(tuple(sorted(parts)))
    return out


def _sn_certificate(n: int, seen: set) -> bool:
    transposition = tuple([1] * (n - 2) + [2])
    if transposition not in seen:
        return False
    if n == 3:
        return (3,) in seen
    if n in (4, 5):
        # a 3-cycle excludes every transitive subgroup of order coprime
        # to 3, leaving A_n and S_n; the transposition excludes A_n
        three_cycle = tuple([1] * (n - 3) + [3])
        return three_cycle in seen
    # n >= 6: an (n-1)-cycle makes the group doubly transitive, hence
    # primitive, and a primitive group with a transposition is S_n
    if (1, n - 1) in seen:
        return True
    # likewise a p-cycle for prime p with n/2 < p < n forces
    # primitivity: in any block system the induced action of the cycle
    # on blocks is trivial (then one block has size >= p > n/2, too big)
    # or moves >= p > n/2 blocks (then blocks are singletons)
    for q in range(n // 2 + 1, n):
        if is_prime_small(q):
            p_cycle = tuple(sorted([q] + [1] * (n - q)))
            if p_cycle in seen:
                return True
    return False


def is_prime_small(q: int) -> bool:
    from .smallfactor import is_probable_prime

    return is_probable_prime(q)
