from fractions import Fraction

import pytest

from factorlab.core.lattice import LatticeBasis
from factorlab.core.lib.exceptions import DomainError


def test_shape_reported_given_rectangular_basis():
    basis = LatticeBasis([[1, 2, 3], [4, 5, 6]])
    assert (basis.rank, basis.dimension) == (2, 3)
    assert repr(basis) == 'LatticeBasis(2x3)'


@pytest.mark.parametrize('rows', [[], [[1, 2], [3]], [[1, 0], [0, 1], [1, 1]]])
def test_domain_error_raised_given_malformed_rows(rows):
    with pytest.raises(DomainError):
        LatticeBasis(rows)


def test_gram_schmidt_data_given_small_basis():
    mu, norms = LatticeBasis([[3, 1], [2, 2]]).gram_schmidt()
    assert mu[1][0] == Fraction(8, 10)
    assert norms == [Fraction(10), Fraction(16, 10)]


def test_gram_determinant_is_square_of_determinant():
    assert LatticeBasis([[1, 1, 1], [-1, 0, 2], [3, 5, 6]]).gram_determinant() == 9


def test_domain_error_raised_when_rows_dependent():
    with pytest.raises(DomainError):
        LatticeBasis([[1, 2], [2, 4]]).gram_schmidt()


def test_text_form_round_trips_given_negative_entries():
    basis = LatticeBasis([[1, -2], [30, 4]])
    assert basis.to_text() == '1 -2\n30 4'
    assert LatticeBasis.from_text('1 -2\n\n30 4\n') == basis


def test_copy_is_independent_of_original():
    basis = LatticeBasis([[1, 0], [0, 1]])
    clone = basis.copy()
    clone.rows[0][0] = 5
    assert basis.rows[0][0] == 1
    assert basis.squared_norms() == [1, 1]
