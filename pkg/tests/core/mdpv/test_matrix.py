import pytest

from factorlab.core.lib.exceptions import DomainError, NotCoprimeError
from factorlab.core.mdpv import Matrix2, companion_matrix, matrix_from_modulus


def test_bezout_completion_given_unit_first_row():
    assert matrix_from_modulus(35, 1, 0) == Matrix2(1, 0, 0, 35)


@pytest.mark.parametrize('n, a, b', [(35, 6, 1), (35, 2, 3), (35, -4, 9), (5959, 1, 1), (10**30 + 7, 12, 35)])
def test_determinant_equals_modulus_given_coprime_first_row(n, a, b):
    matrix = matrix_from_modulus(n, a, b)
    assert (matrix.a, matrix.b) == (a, b)
    assert matrix.det() == n


def test_domain_error_raised_given_zero_first_row():
    with pytest.raises(DomainError):
        matrix_from_modulus(35, 0, 0)


def test_gcd_reported_given_shared_factor_in_first_row():
    with pytest.raises(NotCoprimeError) as error:
        matrix_from_modulus(35, 2, 4)
    assert error.value.gcd == 2


def test_companion_matrix_carries_trace_and_determinant():
    matrix = companion_matrix(35, 12)
    assert (matrix.det(), matrix.trace()) == (35, 12)
    assert matrix.rows() == ((12, -35), (1, 0))


def test_product_follows_row_by_column_rule():
    assert Matrix2(7, 0, 0, 1) @ Matrix2(5, 0, 0, 1) == Matrix2(35, 0, 0, 1)
    assert Matrix2(1, 2, 3, 4) @ Matrix2(0, 1, 1, 0) == Matrix2(2, 1, 4, 3)
    assert str(Matrix2(1, 2, 3, 4)) == '[[1, 2], [3, 4]]'
