"""Number field arithmetic, maximal orders, isomorphism, Galois labels."""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.abc import x as sym_x

from fieldcount.intpoly import MonicIntPoly, poly_discriminant
from fieldcount.numfield import (
    NumberField,
    dedekind_maximal_at_p,
    find_root_in_field,
    galois_type,
    is_isomorphic,
    maximal_order,
    power_sums,
)
from fieldcount.ratlin import frac_det
from fieldcount.smallfactor import squarefree_part


def poly(*asc):
    """Monic polynomial from ascending non-leading coefficients."""
    return MonicIntPoly(tuple(asc))


def companion_power_sums(f, count):
    """Trace of powers of the multiplication-by-theta matrix."""
    n = f.degree
    m = [[0] * n for _ in range(n)]
    for j in range(n - 1):
        m[j + 1][j] = 1
    for i in range(n):
        m[i][n - 1] = -f.coeffs[i]
    acc = [[int(i == j) for j in range(n)] for i in range(n)]
    out = []
    for _ in range(count):
        out.append(sum(acc[i][i] for i in range(n)))
        acc = [
            [sum(acc[i][k] * m[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]
    return out


def test_power_sums_frozen():
    assert power_sums(poly(-1, -3, 0), 5) == [3, 0, 6, 3, 18]
    assert power_sums(poly(-1, -1, 0), 4) == [3, 0, 2, 3]


@given(
    st.lists(st.integers(min_value=-5, max_value=5), min_size=2, max_size=5),
    st.integers(min_value=1, max_value=12),
)
@settings(max_examples=80, deadline=None)
def test_power_sums_match_companion_traces(coeffs, count):
    f = MonicIntPoly(tuple(coeffs))
    assert power_sums(f, count) == companion_power_sums(f, count)


def test_element_arithmetic():
    k = NumberField(poly(-1, -1, 0))  # x^3 - x - 1
    th = k.theta()
    assert th**3 == th + k.one()
    assert th.trace() == 0
    assert th.norm() == 1
    z = th * th + 1
    assert z * z.inverse() == k.one()
    assert th.minimal_polynomial() == [Fraction(c) for c in (-1, -1, 0, 1)]
    assert th.generates_field()


def test_non_generating_element():
    k = NumberField(poly(1, 0, 0, 0))  # x^4 + 1
    sq = k.theta() ** 2
    assert sq.degree_over_Q() == 2
    assert not sq.generates_field()
    assert sq.minimal_polynomial() == [Fraction(1), Fraction(0), Fraction(1)]


def test_t2_norms_in_totally_real_cubic():
    k = NumberField(poly(-1, -3, 0))  # x^3 - 3x - 1, totally real
    assert k.is_totally_real()
    th = k.theta()
    beta = th * th - 2
    assert th.t2_norm() == 6
    assert beta.t2_norm() == 6
    assert (th * beta).trace() == 3


def test_complex_field_refuses_exact_t2():
    k = NumberField(poly(-1, -1, 0))  # one real, one complex pair
    assert not k.is_totally_real()
    with pytest.raises(AssertionError):
        k.theta().t2_norm()


def test_reducible_polynomial_rejected():
    with pytest.raises(ValueError):
        NumberField(poly(-1, 0))  # x^2 - 1


def test_maximal_order_golden_quadratic():
    basis, disc, index = maximal_order(poly(-5, 0))  # x^2 - 5
    assert disc == 5
    assert index == 2
    assert basis == [[1, 0], [Fraction(1, 2), Fraction(1, 2)]]
    assert frac_det(basis) == Fraction(1, 2)


def test_maximal_order_gaussian():
    basis, disc, index = maximal_order(poly(1, 0))  # x^2 + 1
    assert (disc, index) == (-4, 1)
    assert basis == [[1, 0], [0, 1]]


def test_maximal_order_cubic_already_maximal():
    basis, disc, index = maximal_order(poly(-1, -1, 0))  # x^3 - x - 1
    assert (disc, index) == (-23, 1)
    assert basis == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_maximal_order_nonmonogenic_cubic():
    # the classical field where no power basis is maximal at 2
    f = poly(-8, -2, -1)  # x^3 - x^2 - 2x - 8
    basis, disc, index = maximal_order(f)
    assert poly_discriminant(f) == -2012
    assert (disc, index) == (-503, 2)


def test_maximal_order_large_index_quadratic():
    basis, disc, index = maximal_order(poly(-45, 0))  # x^2 - 45 = (3 sqrt 5)^2
    assert (disc, index) == (5, 6)
    assert basis == [[1, 0], [Fraction(1, 2), Fraction(1, 6)]]


def test_order_elements_are_integral():
    for coeffs in [(-5, 0), (-45, 0), (-8, -2, -1)]:
        f = poly(*coeffs)
        k = NumberField(f)
        for row in k.order_basis():
            el = k.element(row)
            assert el.trace().denominator == 1
            assert el.norm().denominator == 1
            mp_el = el.minimal_polynomial()
            assert all(c.denominator == 1 for c in mp_el)


@pytest.mark.parametrize(
    "coeffs",
    [
        (-1, -1, 0),
        (-1, -3, 0),
        (-8, -2, -1),
        (-2, 0, 0, 0),
        (1, 0, 0, 0),
        (4, 0, -1, 0),
        (12, 8, 0, 0),
        (-1, -1, 0, 0, 0),
        (-2, 0, 0, 0, 0),
        (-45, 0),
        (105, 0),
    ],
)
def test_field_disc_against_sympy_round_two(coeffs):
    from sympy.polys.numberfields.basis import round_two

    f = poly(*coeffs)
    expr = sympy.Poly(
        sum(int(c) * sym_x**i for i, c in enumerate(f.all_coeffs())), sym_x
    )
    _, dk = round_two(expr)
    assert NumberField(f).field_disc == dk


def test_isomorphic_shifted_gaussians():
    assert is_isomorphic(poly(1, 0), poly(5, 4))  # x^2+1 vs x^2+4x+5


def test_isomorphic_mirror_cubics_rejected():
    assert not is_isomorphic(poly(-1, -1, 0), poly(-1, 1, 0))


def test_isomorphic_cube_roots_of_two():
    assert is_isomorphic(poly(-2, 0, 0), poly(-16, 0, 0))  # 2^(1/3) vs 2^(4/3)


def test_isomorphic_same_poly_and_degree_mismatch():
    f = poly(-1, -1, 0)
    assert is_isomorphic(f, f)
    assert not is_isomorphic(f, poly(1, 0))


def test_isomorphic_rejects_reducible():
    with pytest.raises(ValueError):
        is_isomorphic(poly(-1, 0), poly(-1, 0))


def test_isomorphic_cyclic_cubic_pair():
    # x^3-3x-1 and x^3-3x+1 both cut out the degree-3 subfield of Q(zeta_9)
    assert is_isomorphic(poly(-1, -3, 0), poly(1, -3, 0))


@given(
    st.integers(min_value=-9, max_value=9),
    st.integers(min_value=-9, max_value=9),
    st.integers(min_value=-9, max_value=9),
    st.integers(min_value=-9, max_value=9),
)
@settings(max_examples=40, deadline=None)
def test_quadratic_isomorphism_matches_discriminant_class(a, b, c, d):
    from fieldcount.intpoly import is_perfect_square

    f, g = poly(b, a), poly(d, c)
    df, dg = a * a - 4 * b, c * c - 4 * d
    if df == 0 or dg == 0 or is_perfect_square(df) or is_perfect_square(dg):
        return
    assert is_isomorphic(f, g) == (squarefree_part(df) == squarefree_part(dg))


@pytest.mark.parametrize(
    "fc,gc",
    [
        ((-2, 0, 0), (-16, 0, 0)),
        ((-2, 0, 0), (-3, 0, 0)),
        ((-1, -3, 0), (1, -3, 0)),
        ((-1, -1, 0), (-3, 0, 0)),
    ],
)
def test_cubic_isomorphism_against_sympy(fc, gc):
    from sympy.polys.numberfields.subfield import field_isomorphism

    f, g = poly(*fc), poly(*gc)
    fe = sum(int(c) * sym_x**i for i, c in enumerate(f.all_coeffs()))
    ge = sum(int(c) * sym_x**i for i, c in enumerate(g.all_coeffs()))
    a = sympy.AlgebraicNumber(sympy.CRootOf(fe, 0))
    b = sympy.AlgebraicNumber(sympy.CRootOf(ge, 0))
    expected = field_isomorphism(a, b) is not None
    assert is_isomorphic(f, g) == expected


def test_find_root_scaled_square_root():
    k = NumberField(poly(-45, 0))  # theta = 3 sqrt 5
    root = find_root_in_field(poly(-5, 0), k)
    assert root is not None
    # either square root of 5 is acceptable
    assert root.coords in ((Fraction(0), Fraction(1, 3)), (Fraction(0), Fraction(-1, 3)))
    assert root * root == k.element([5])


def test_find_root_absent():
    k = NumberField(poly(-5, 0))
    assert find_root_in_field(poly(1, 0), k) is None


def test_find_root_linear_and_conjugate():
    k = NumberField(poly(-1, -3, 0))
    seven = find_root_in_field(poly(-7), k)
    assert seven == k.element([7])
    conj = find_root_in_field(poly(1, -3, 0), k)
    assert conj is not None
    assert conj.minimal_polynomial() == [Fraction(c) for c in (1, -3, 0, 1)]


def test_galois_quadratic_certified_immediately():
    assert str(galois_type(poly(1, 0), 1)) == "Sn_certified"


def test_galois_generic_cubic():
    label = galois_type(poly(-1, -1, 0), 25)
    assert label.kind == "Sn_certified"
    assert label.description == "S3"


def test_galois_cyclic_cubic():
    assert str(galois_type(poly(-1, -3, 0), 50)) == "other(consistent with A3)"


def test_galois_quartics():
    assert str(galois_type(poly(1, 0, 0, 0))) == "other(consistent with V4)"
    assert galois_type(poly(-1, -1, 0, 0)).kind == "Sn_certified"
    assert str(galois_type(poly(12, 8, 0, 0))) == "other(consistent with A4)"
    # cyclotomic quintic polynomial of the fifth roots of unity: C4 has
    # no transposition and a nonsquare discriminant, so no certificate
    assert galois_type(poly(1, 1, 1, 1)).kind == "undetermined"


def test_galois_quintics():
    assert galois_type(poly(-1, -1, 0, 0, 0)).kind == "Sn_certified"
    # minimal polynomial of 2cos(2pi/11): cyclic of order 5
    label = galois_type(poly(1, 3, -3, -4, 1))
    assert str(label) == "other(consistent with C5)"


def test_galois_degree_six_generic():
    label = galois_type(poly(-1, -1, 0, 0, 0, 0), 40)
    assert label.kind == "Sn_certified"
    assert label.description == "S6"


def test_galois_rejects_reducible():
    with pytest.raises(ValueError):
        galois_type(poly(-1, 0))
