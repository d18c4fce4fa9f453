import math
import random

import pytest

from factorlab.core.arith import ceil_sqrt, ext_gcd, is_perfect_square, isqrt, mod_inverse
from factorlab.core.lib.exceptions import DomainError, InversionFailure


@pytest.mark.parametrize('n, root', [
    (0, 0),
    (1, 1),
    (15, 3),
    (121, 11),
    (133953804009, 365997),
    (10**40, 10**20),
    (10**40 - 1, 10**20 - 1),
])
def test_floor_root_given_known_squares_and_neighbours(n, root):
    assert isqrt(n) == root


def test_floor_root_matches_math_isqrt_given_random_large_integers():
    rng = random.Random(7)
    for _ in range(500):
        n = rng.getrandbits(rng.randrange(1, 2048))
        r = isqrt(n)
        assert r == math.isqrt(n)
        assert r * r <= n < (r + 1) * (r + 1)


def test_domain_error_raised_when_root_of_negative_requested():
    with pytest.raises(DomainError):
        isqrt(-1)


@pytest.mark.parametrize('n, expected', [
    (205209, (True, 453)),
    (176070739797225, (True, 13269165)),
    (2, (False, 1)),
    (50, (False, 7)),
])
def test_square_flag_and_root_given_integer(n, expected):
    assert is_perfect_square(n) == expected


def test_ceiling_root_given_square_and_non_square():
    assert ceil_sqrt(49) == 7
    assert ceil_sqrt(50) == 8
    assert ceil_sqrt(0) == 0


@pytest.mark.parametrize('a, b', [(6, 35), (2, 3), (48, 18), (240, 46), (-4, 6), (0, 5), (17, 0)])
def test_bezout_identity_holds_given_pair(a, b):
    g, u, v = ext_gcd(a, b)
    assert g == math.gcd(a, b)
    assert g > 0
    assert a * u + b * v == g


def test_known_coefficients_given_6_and_35():
    assert ext_gcd(6, 35) == (1, 6, -1)


def test_domain_error_raised_when_both_inputs_zero():
    with pytest.raises(DomainError):
        ext_gcd(0, 0)


def test_inverse_found_given_coprime_residue():
    assert mod_inverse(3, 7) == 5
    assert mod_inverse(-3, 7) == 2


def test_inversion_failure_carries_gcd_when_residue_shares_factor():
    with pytest.raises(InversionFailure) as error:
        mod_inverse(6, 9)
    assert error.value.gcd == 3
    assert error.value.modulus == 9
