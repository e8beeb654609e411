"""Integer factorization helpers for discriminant-sized inputs."""

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from fieldcount.smallfactor import (
    factorize,
    first_primes,
    is_probable_prime,
    max_square_divisor,
    primes_up_to,
    squarefree_part,
)


def test_primality_small_cases():
    primes = {2, 3, 5, 7, 11, 13, 97, 101}
    for n in range(-3, 110):
        assert is_probable_prime(n) == (n in primes or sympy.isprime(n))


def test_primality_strong_pseudoprimes():
    # strong pseudoprimes to small base sets must still be rejected
    for n in (3215031751, 3825123056546413051, 561, 1105, 1729):
        assert not is_probable_prime(n)
    assert is_probable_prime(2**61 - 1)
    assert is_probable_prime(10**18 + 9)


@given(st.integers(min_value=1, max_value=10**12))
@settings(max_examples=120, deadline=None)
def test_factorize_roundtrip(n):
    fac = factorize(n)
    prod = 1
    for p, e in fac.items():
        assert is_probable_prime(p)
        assert e >= 1
        prod *= p**e
    assert prod == n
    assert list(fac) == sorted(fac)


def test_factorize_known_values():
    assert factorize(5184) == {2: 6, 3: 4}
    assert factorize(-23) == {23: 1}
    assert factorize(1) == {}
    assert factorize(1000003 * 1000033) == {1000003: 1, 1000033: 1}
    # a perfect square of a large prime
    p = 10**9 + 7
    assert factorize(p * p) == {p: 2}


def test_square_divisor_and_squarefree_part():
    assert max_square_divisor(12) == 2
    assert squarefree_part(12) == 3
    assert squarefree_part(-18) == -2
    assert max_square_divisor(49) == 7
    assert squarefree_part(49) == 1
    assert squarefree_part(30) == 30
    # discriminant-sized case: 81 = 3^4 is the discriminant of x^3 - 3x - 1
    assert max_square_divisor(81) == 9
    assert squarefree_part(81) == 1


def test_primes_up_to():
    assert primes_up_to(1) == []
    assert primes_up_to(2) == [2]
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert primes_up_to(10**4) == list(sympy.primerange(2, 10**4 + 1))


def test_first_primes():
    assert first_primes(0) == []
    assert first_primes(6) == [2, 3, 5, 7, 11, 13]
