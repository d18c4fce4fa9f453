import random
from math import gcd

import pytest
from sympy import nextprime

from factorlab.core.lib.exceptions import DomainError
from factorlab.core.lib.methods import MethodCode
from factorlab.core.lib.result import FailureReason, FactorStatus
from factorlab.core.mdpv import Matrix2, diagonalization_factor, matrix_from_modulus, trace_sweep


def test_eigenvalues_split_determinant_given_symmetric_matrix():
    result = diagonalization_factor(Matrix2(6, 1, 1, 6))
    assert result.factors == (5, 7)
    assert result.method == MethodCode.MDPV


def test_trivial_eigenvalues_reported_given_diagonal_matrix():
    assert diagonalization_factor(Matrix2(35, 0, 0, 1)).reason == FailureReason.TRIVIAL_EIGENVALUES


def test_not_square_reported_given_irrational_spectrum():
    assert diagonalization_factor(Matrix2(1, -1, 36, 35)).reason == FailureReason.NOT_SQUARE


def test_domain_error_raised_given_determinant_below_4():
    with pytest.raises(DomainError):
        diagonalization_factor(Matrix2(1, 0, 0, 3))


def test_no_split_given_prime_determinant():
    rng = random.Random(5)
    for _ in range(100):
        p = int(nextprime(rng.randrange(10, 10**9)))
        a, b = rng.randrange(1, 10**6), rng.randrange(1, 10**6)
        while gcd(a, b) != 1:
            a, b = rng.randrange(1, 10**6), rng.randrange(1, 10**6)
        assert not diagonalization_factor(matrix_from_modulus(p, a, b)).is_ok


@pytest.mark.parametrize('n, factors', [(35, (5, 7)), (5959, (59, 101)), (1000003 * 1000033, (1000003, 1000033))])
def test_split_found_given_close_factors(n, factors):
    assert trace_sweep(n).factors == factors


def test_steps_exhausted_given_prime():
    result = trace_sweep(101, window=100)
    assert result.status == FactorStatus.FAILED
    assert result.reason == FailureReason.STEPS_EXHAUSTED


def test_timeout_reported_given_expired_deadline(expired_deadline):
    assert trace_sweep(101, deadline=expired_deadline).status == FactorStatus.TIMEOUT
