"""Integer factorization of monic polynomials against brute-force oracles."""

import random
from itertools import product

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from fieldcount.intpoly import MonicIntPoly, list_degree, list_mul
from fieldcount.zfactor import (
    factor_over_Z,
    factor_squarefree_monic,
    find_degree_factor,
    is_irreducible,
    landau_mignotte_bound,
)


def brute_force_irreducible(coeffs):
    """Try all monic divisors with coefficients within the Mignotte bound.

    Only workable for tiny degree/height; used to validate the fast path.
    """
    n = list_degree(coeffs)
    if n <= 1:
        return True
    bound = landau_mignotte_bound(coeffs)
    for d in range(1, n // 2 + 1):
        for tail in product(range(-bound, bound + 1), repeat=d):
            g = list(tail) + [1]
            q = _exact_divide(coeffs, g)
            if q is not None:
                return False
    return True


def _exact_divide(f, g):
    f = list(f)
    dg = len(g) - 1
    q = [0] * (len(f) - dg)
    for d in range(len(f) - 1, dg - 1, -1):
        c = f[d]
        if c == 0:
            continue
        if d - dg < 0:
            return None
        q[d - dg] = c
        for j in range(dg + 1):
            f[d - dg + j] -= c * g[j]
    return q if not any(f) else None


@pytest.mark.parametrize(
    "coeffs,expected_degrees",
    [
        ([-1, 0, 1], [1, 1]),          # x^2 - 1
        ([1, 0, 1], [2]),              # x^2 + 1
        ([1, 0, 0, 0, 1], [4]),        # x^4 + 1
        ([0, -1, 0, 1], [1, 1, 1]),    # x^3 - x
        ([-1, -1, 0, 1], [3]),         # x^3 - x - 1
        ([-2, 0, 0, 1], [3]),          # x^3 - 2
        ([1, 2, 3, 2, 1], [2, 2]),     # (x^2 + x + 1)^2
        ([-1, 0, 0, 0, 0, 0, 1], [1, 1, 2, 2]),  # x^6 - 1
    ],
)
def test_factor_degree_patterns(coeffs, expected_degrees):
    f = MonicIntPoly(tuple(coeffs[:-1]))
    factors = factor_over_Z(f)
    assert sorted(g.degree for g in factors) == sorted(expected_degrees)
    prod = [1]
    for g in factors:
        prod = list_mul(prod, g.all_coeffs())
    assert prod == coeffs


def test_factor_is_sorted_canonically():
    f = MonicIntPoly((0, -1, 0))  # x^3 - x = x(x-1)(x+1)
    factors = factor_over_Z(f)
    assert [g.all_coeffs() for g in factors] == [[-1, 1], [0, 1], [1, 1]]


def test_factor_respects_multiplicity():
    # (x-2)^3 (x^2+1)
    f = list_mul(list_mul(list_mul([-2, 1], [-2, 1]), [-2, 1]), [1, 0, 1])
    factors = factor_over_Z(MonicIntPoly(tuple(f[:-1])))
    counts = {}
    for g in factors:
        counts[tuple(g.all_coeffs())] = counts.get(tuple(g.all_coeffs()), 0) + 1
    assert counts == {(-2, 1): 3, (1, 0, 1): 1}


def test_factor_union_property():
    a = [-1, -1, 0, 1]  # irreducible cubic
    b = [1, 0, 1]
    prod = list_mul(a, b)
    factors = factor_over_Z(MonicIntPoly(tuple(prod[:-1])))
    got = sorted(tuple(g.all_coeffs()) for g in factors)
    assert got == sorted([tuple(a), tuple(b)])


def test_degree_domain_errors():
    with pytest.raises(ValueError):
        factor_over_Z(MonicIntPoly((5,)))  # degree 1
    with pytest.raises(ValueError):
        factor_over_Z(MonicIntPoly(tuple([0] * 12 + [1])))  # degree 13


@given(st.lists(st.integers(-8, 8), min_size=2, max_size=4))
@settings(max_examples=80, deadline=None)
def test_factor_matches_sympy(coeffs):
    f = MonicIntPoly(tuple(coeffs))
    x = sympy.Symbol("x")
    expr = x ** f.degree + sum(c * x**i for i, c in enumerate(coeffs))
    _, sy = sympy.factor_list(expr)
    expected = sorted(
        (sympy.degree(g, x), e) for g, e in sy if sympy.degree(g, x) > 0
    )
    got = {}
    for g in factor_over_Z(f):
        got[g] = got.get(g, 0) + 1
    assert sorted((g.degree, e) for g, e in got.items()) == expected


def test_is_irreducible_against_brute_force():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randrange(2, 5)
        coeffs = [rng.randrange(-4, 5) for _ in range(n)] + [1]
        assert is_irreducible(MonicIntPoly(tuple(coeffs[:-1]))) == brute_force_irreducible(
            coeffs
        )


def test_is_irreducible_known_cases():
    assert is_irreducible(MonicIntPoly((1, 0)))           # x^2 + 1
    assert is_irreducible(MonicIntPoly((1, 0, 0, 0)))     # x^4 + 1
    assert not is_irreducible(MonicIntPoly((-1, 0)))      # x^2 - 1
    assert is_irreducible(MonicIntPoly((-1, -1, 0)))      # x^3 - x - 1
    assert not is_irreducible(MonicIntPoly((1, 2)))       # (x+1)^2
    # x^5 - x - 1 is irreducible
    assert is_irreducible(MonicIntPoly((-1, -1, 0, 0, 0)))
    # Swinnerton-Dyer style: (x^2-2)(x^2-3) reducible with no rational root
    f = list_mul([-2, 0, 1], [-3, 0, 1])
    assert not is_irreducible(MonicIntPoly(tuple(f[:-1])))


def test_find_degree_factor_linear():
    # (x - 3)(x^4 + x + 1): searching for a degree-1 factor must succeed
    f = list_mul([-3, 1], [1, 1, 0, 0, 1])
    assert find_degree_factor(f, 1) == [-3, 1]
    assert find_degree_factor(f, 4) == [1, 1, 0, 0, 1]
    assert find_degree_factor(f, 2) is None
    assert find_degree_factor(f, 3) is None


def test_find_degree_factor_absent():
    # x^4 + 1 is irreducible over ZZ but splits mod every prime
    f = [1, 0, 0, 0, 1]
    assert find_degree_factor(f, 1) is None
    assert find_degree_factor(f, 2) is None
    assert find_degree_factor(f, 4) == f


def test_find_degree_factor_full_degree_reducible():
    # reducible input must not be returned as its own "factor"
    f = list_mul([1, 0, 1], [-2, 0, 1])  # (x^2 + 1)(x^2 - 2)
    assert find_degree_factor(f, 4) is None
    assert find_degree_factor(f, 2) in ([1, 0, 1], [-2, 0, 1])


def test_find_degree_factor_composed_of_modular_pieces():
    # x^3 + 2x^2 - 2x + 1 is irreducible but splits as (1)(2) mod 2, so
    # the degree-3 search must combine two modular factors, after first
    # extracting the honest linear factor x - 2
    g = [1, -2, 2, 1]
    f = list_mul(g, [-2, 1])
    assert find_degree_factor(f, 1) == [-2, 1]
    assert find_degree_factor(f, 3) == g


def test_large_coefficient_factorization():
    # (x^2 + 10^6)(x^2 - 10^6 x + 7) exercises the lifting bound
    a = [10**6, 0, 1]
    b = [7, -(10**6), 1]
    f = list_mul(a, b)
    factors = factor_over_Z(MonicIntPoly(tuple(f[:-1])))
    assert sorted(tuple(g.all_coeffs()) for g in factors) == sorted(
        [tuple(a), tuple(b)]
    )


def test_higher_degree_internal_entry():
    # degree 16 via the internal entry point (public one caps at 12):
    # product of two irreducible octics x^8 + x + 1 has a factor x^2+x+1
    f = [1, 1, 0, 0, 0, 0, 0, 0, 1]
    factors = factor_squarefree_monic(f)
    assert sorted(list_degree(g) for g in factors) == [2, 6]
    prod = [1]
    for g in factors:
        prod = list_mul(prod, g)
    assert prod == f
