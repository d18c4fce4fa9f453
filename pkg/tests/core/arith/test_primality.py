import pytest
from sympy import isprime

from factorlab.core.arith import is_probable_prime, primes_up_to


@pytest.mark.parametrize('n, expected', [
    (7, True),
    (35, False),
    (182999, True),
    (561, False),
    (2**61 - 1, True),
    (2**89 - 1, True),
    ((2**61 - 1) * (2**89 - 1), False),
    (0, False),
    (1, False),
    (2, True),
])
def test_primality_given_known_values(n, expected):
    assert is_probable_prime(n) is expected


def test_agrees_with_sympy_given_every_integer_below_5000():
    for n in range(5000):
        assert is_probable_prime(n) == isprime(n), n


def test_same_answer_when_called_twice_on_large_composite():
    n = (2**89 - 1) * (2**107 - 1)
    assert is_probable_prime(n) == is_probable_prime(n) is False


def test_value_error_raised_when_rounds_not_positive():
    with pytest.raises(ValueError):
        is_probable_prime(97, rounds=0)


def test_sieve_lists_primes_given_small_bounds():
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert primes_up_to(2) == [2]
    assert primes_up_to(1) == []


def test_sieve_matches_sympy_given_bound_10000():
    assert primes_up_to(10000) == [n for n in range(10001) if isprime(n)]
