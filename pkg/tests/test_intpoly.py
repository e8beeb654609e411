"""Exact polynomial arithmetic: resultants, discriminants, Sturm counts."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fieldcount.intpoly import (
    MonicIntPoly,
    PolyParseError,
    cauchy_bound,
    format_poly,
    is_perfect_square,
    isolate_real_roots,
    list_degree,
    list_mul,
    parse_poly,
    poly_discriminant,
    poly_resultant,
    real_root_count,
    refine_root,
    resultant,
    signature_of,
    sturm_chain,
)


def sylvester_resultant(a, b):
    """Resultant via exact fraction-free expansion of the Sylvester matrix."""
    da, db = list_degree(a), list_degree(b)
    if da == 0:
        return a[0] ** db
    if db == 0:
        return b[0] ** da
    n = da + db
    rows = []
    ra = list(reversed(a))
    rb = list(reversed(b))
    for i in range(db):
        rows.append([0] * i + ra + [0] * (db - 1 - i))
    for i in range(da):
        rows.append([0] * i + rb + [0] * (da - 1 - i))
    mat = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        piv = None
        for r in range(col, n):
            if mat[r][col]:
                piv = r
                break
        if piv is None:
            return 0
        if piv != col:
            mat[col], mat[piv] = mat[piv], mat[col]
            det = -det
        det *= mat[col][col]
        inv = 1 / mat[col][col]
        for r in range(col + 1, n):
            fac = mat[r][col] * inv
            if fac:
                for c in range(col, n):
                    mat[r][c] -= fac * mat[col][c]
    assert det.denominator == 1
    return int(det)


small_poly = st.lists(st.integers(-9, 9), min_size=1, max_size=5).map(
    lambda c: c if any(c) else [1]
)


@given(small_poly, small_poly)
@settings(max_examples=200)
def test_resultant_matches_sylvester_determinant(a, b):
    while a and a[-1] == 0:
        a = a[:-1]
    while b and b[-1] == 0:
        b = b[:-1]
    if not a or not b:
        return
    assert resultant(a, b) == sylvester_resultant(a, b)


@given(small_poly, small_poly)
@settings(max_examples=100)
def test_resultant_swap_sign(a, b):
    while a and a[-1] == 0:
        a = a[:-1]
    while b and b[-1] == 0:
        b = b[:-1]
    if not a or not b:
        return
    da, db = list_degree(a), list_degree(b)
    assert resultant(b, a) == (-1) ** (da * db) * resultant(a, b)


def test_resultant_of_known_pairs():
    # res(x^2 + 1, x^2 - 1) = 4; shared root makes the resultant vanish
    assert resultant([1, 0, 1], [-1, 0, 1]) == 4
    assert resultant([-1, 1], [1, -1]) == 0
    assert resultant([2], [5, 3, 1]) == 4


@pytest.mark.parametrize(
    "coeffs,disc",
    [
        ((1, 0), -4),          # x^2 + 1
        ((-1, -1, 0), -23),    # x^3 - x - 1
        ((-1, -3, 0), 81),     # x^3 - 3x - 1
        ((-2, 0, 0), -108),    # x^3 - 2
        ((1, 0, 0, 0), 256),   # x^4 + 1
        ((5, 0), -20),         # x^2 + 5
    ],
)
def test_discriminant_frozen_values(coeffs, disc):
    assert poly_discriminant(MonicIntPoly(coeffs)) == disc


@given(st.integers(-20, 20), st.integers(-20, 20))
def test_cubic_discriminant_formula(a1, a0):
    f = MonicIntPoly((a0, a1, 0))
    assert poly_discriminant(f) == -4 * a1**3 - 27 * a0**2


@given(st.integers(-15, 15), st.integers(-15, 15))
def test_depressed_quartic_discriminant_formula(p, q):
    # x^4 + p x^2 + q
    f = MonicIntPoly((q, 0, p, 0))
    assert poly_discriminant(f) == 16 * q * (p * p - 4 * q) ** 2


def test_discriminant_multiplicative_on_products():
    f = [-1, 1]   # x - 1
    g = [1, 1, 1]  # x^2 + x + 1
    prod = list_mul(f, g)
    df = 1
    dg = poly_discriminant(MonicIntPoly((1, 1)))
    res = resultant(f, g)
    got = poly_discriminant(MonicIntPoly(tuple(prod[:3])))
    assert got == df * dg * res * res


def test_sturm_real_root_counts():
    assert real_root_count([-1, -1, 0, 1]) == 1  # x^3 - x - 1
    assert real_root_count([-1, -3, 0, 1]) == 3  # x^3 - 3x - 1
    assert real_root_count([1, 0, 1]) == 0
    assert real_root_count([-2, 0, 1]) == 2
    assert real_root_count([1, 0, 0, 0, 1]) == 0  # x^4 + 1


@pytest.mark.parametrize(
    "coeffs,sig",
    [
        ((-1, -1, 0), (1, 1)),
        ((-1, -3, 0), (3, 0)),
        ((1, 0), (0, 1)),
        ((-2, 0, 0), (1, 1)),
        ((1, 0, 0, 0), (0, 2)),
        ((-5, 0, -1, 0), (2, 1)),   # x^4 - x^2 - 5
    ],
)
def test_signature(coeffs, sig):
    assert signature_of(MonicIntPoly(coeffs)) == sig


def test_isolated_intervals_are_disjoint_and_refine():
    f = [-1, -3, 0, 1]  # three real roots near -1.53, -0.35, 1.88
    ivs = isolate_real_roots(f)
    assert len(ivs) == 3
    for (a1, b1), (a2, b2) in zip(ivs, ivs[1:]):
        assert b1 <= a2
    lo, hi = refine_root(f, ivs[2][0], ivs[2][1], Fraction(1, 10**12))
    assert hi - lo <= Fraction(1, 10**12)
    approx = float((lo + hi) / 2)
    assert abs(approx - 1.8793852415718) < 1e-9


def test_cauchy_bound_contains_roots():
    f = [-1, -3, 0, 1]
    b = cauchy_bound(f)
    assert real_root_count(f) == len(isolate_real_roots(f))
    assert b >= Fraction(2)


@given(st.lists(st.integers(-9, 9), min_size=2, max_size=5))
@settings(max_examples=150)
def test_real_root_count_matches_sympy(coeffs):
    import sympy

    f = MonicIntPoly(tuple(coeffs))
    x = sympy.Symbol("x")
    expr = x ** f.degree + sum(c * x**i for i, c in enumerate(coeffs))
    expected = sympy.Poly(expr, x).count_roots()
    assert real_root_count(f.all_coeffs()) == expected


def test_monic_poly_basics():
    f = MonicIntPoly((-1, -1, 0))
    assert f.degree == 3
    assert f.all_coeffs() == [-1, -1, 0, 1]
    assert f(2) == 5
    assert f(Fraction(1, 2)) == Fraction(-11, 8)
    g = f.derivative()
    assert g == [-1, 0, 3]


def test_shift_and_negate_argument():
    f = MonicIntPoly((-1, -1, 0))  # x^3 - x - 1
    shifted = f.shift_argument(1)
    # (x+1)^3 - (x+1) - 1 = x^3 + 3x^2 + 2x - 1
    assert shifted.coeffs == (-1, 2, 3)
    neg = f.negate_argument()
    # roots negated: x^3 - x + 1
    assert neg.coeffs == (1, -1, 0)
    assert poly_discriminant(neg) == poly_discriminant(f)


@pytest.mark.parametrize(
    "text,coeffs",
    [
        ("x^3 - x - 1", (-1, -1, 0)),
        ("x^2 + 1", (1, 0)),
        ("x^5 - 3*x^2 + 4x - 7", (-7, 4, -3, 0, 0)),
        ("t^2 - t + 11", (11, -1)),
        ("x^4 + 0x^2 + 1", (1, 0, 0, 0)),
    ],
)
def test_parse_poly(text, coeffs):
    assert parse_poly(text).coeffs == coeffs


def test_parse_poly_rejects_nonmonic_and_garbage():
    for bad in ["2x^2 + 1", "x^2 + y + 1", "", "x^2 -", "-x^3 + 1"]:
        with pytest.raises(PolyParseError):
            parse_poly(bad)


@given(st.lists(st.integers(-99, 99), min_size=1, max_size=6))
def test_format_parse_roundtrip(coeffs):
    f = MonicIntPoly(tuple(coeffs))
    assert parse_poly(format_poly(f)) == f


def test_format_examples():
    assert format_poly(MonicIntPoly((-1, -1, 0))) == "x^3 - x - 1"
    assert format_poly(MonicIntPoly((1, 0))) == "x^2 + 1"
    assert format_poly(MonicIntPoly((0, 0))) == "x^2"
    assert format_poly(MonicIntPoly((0,))) == "x"


def test_is_perfect_square():
    assert is_perfect_square(81)
    assert is_perfect_square(0)
    assert not is_perfect_square(-4)
    assert not is_perfect_square(80)
    assert is_perfect_square(10**12)


def test_squarefree_predicate():
    assert MonicIntPoly((-1, -1)).is_squarefree()
    sq = list_mul([-1, 1], [-1, 1])  # (x-1)^2
    assert not MonicIntPoly(tuple(sq[:2])).is_squarefree()


def test_sturm_chain_end_is_constant_for_squarefree():
    chain = sturm_chain([-1, -1, 0, 1])
    assert list_degree(chain[-1]) == 0
