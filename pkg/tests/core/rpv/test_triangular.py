import pytest
from sympy import factorint, isprime

from factorlab.core.lib.exceptions import DomainError
from factorlab.core.lib.methods import MethodCode
from factorlab.core.lib.result import FailureReason
from factorlab.core.rpv import TriangularService, triangular_factor, triangular_index
from tests.reference_values import TRIANGULAR_EXAMPLES


@pytest.mark.parametrize('n, factor', sorted(TRIANGULAR_EXAMPLES.items()))
def test_printed_factor_found_given_triangular_examples(n, factor):
    result = triangular_factor(n)
    assert result.is_ok
    assert factor in result.factors
    assert result.p * result.q == n
    assert abs(2 * result.p - result.q) == 1
    assert result.elapsed < 10


@pytest.mark.parametrize('n, k', [(0, 0), (1, 1), (10, 4), (15, 5), (25651, 226)])
def test_index_found_given_triangular_number(n, k):
    assert triangular_index(n) == k


@pytest.mark.parametrize('n', [2, 11, 20, -3])
def test_none_given_non_triangular_number(n):
    assert triangular_index(n) is None


def test_not_triangular_reported_given_20():
    result = triangular_factor(20)
    assert result.reason == FailureReason.NOT_TRIANGULAR
    assert result.method == MethodCode.TRIANGULAR


def test_pair_differs_by_doubling_given_every_triangular_semiprime_below_a_million():
    k = 2
    while k * (k + 1) // 2 < 10**6:
        n = k * (k + 1) // 2
        k += 1
        if n < 4 or sum(factorint(n).values()) != 2:
            continue
        result = triangular_factor(n)
        assert result.is_ok, n
        assert abs(2 * result.p - result.q) == 1, n


def test_no_split_given_prime():
    for n in range(4, 5000):
        if isprime(n):
            assert not triangular_factor(n).is_ok


def test_domain_error_raised_given_n_below_4():
    with pytest.raises(DomainError):
        triangular_factor(3)


def test_service_wraps_square_root_test(settings):
    assert TriangularService(settings).run(25651).factors == (113, 227)
