from fractions import Fraction

import pytest
from sympy import Poly, groebner, symbols

from factorlab.core.lib.exceptions import DomainError, ResourceBudgetError
from factorlab.core.mdpv import (
    Matrix2,
    MultivarPoly,
    buchberger,
    closed_form_basis,
    decomposition_generators,
    is_groebner,
    is_interreduced,
    poly_reduce,
    reduce_basis,
    s_polynomial,
)
from factorlab.core.mdpv.polynomial import polys_from_text
from tests.reference_values import MDPV_ENTRIES, MDPV_N, MDPV_SOLUTION

XY = ('x', 'y')
XYZ = ('x', 'y', 'z')

SMALL_SOLUTION = {'x1': 7, 'x2': 0, 'x3': 0, 'x4': 1, 'y1': 5, 'y2': 0, 'y3': 0, 'y4': 1}


def texts(polys):
    return [poly.to_text() for poly in polys]


def from_sympy(expression, gens) -> MultivarPoly:
    terms = {
        monomial: Fraction(int(coefficient.p), int(coefficient.q))
        for monomial, coefficient in Poly(expression, *symbols(' '.join(gens))).terms()
    }
    return MultivarPoly(terms, gens).monic()


@pytest.mark.parametrize('generators', [['x*y - 1', 'y^2 - 1'], ['x - y', 'y^2 - 1'], ['y^2 - 1', 'x - y']])
def test_reduced_basis_given_toy_ideal(generators):
    assert texts(buchberger(polys_from_text(generators, XY))) == ['x - y', 'y^2 - 1']


def test_remainder_free_of_leading_monomials_given_toy_division():
    x_minus_y, = polys_from_text(['x - y'], XY)
    assert poly_reduce(MultivarPoly.from_text('x*y - 1', XY), [x_minus_y]).to_text() == 'y^2 - 1'
    assert poly_reduce(MultivarPoly.constant(5, XY), [x_minus_y]) == 5


@pytest.mark.parametrize('dividend', ['x^3*y + 2*x*y^2 - y + 3', 'x^2 - y^3 + 1/2*x', 'y^4 - 7'])
def test_remainder_unchanged_when_reduced_again(dividend):
    divisors = polys_from_text(['x*y - 1', 'y^2 - x'], XY)
    once = poly_reduce(MultivarPoly.from_text(dividend, XY), divisors)
    assert poly_reduce(once, divisors) == once


def test_remainder_unchanged_when_reduced_again_given_worked_generators():
    generators = decomposition_generators(Matrix2(*MDPV_ENTRIES), MDPV_N)
    dividend = generators[0] * generators[1] + MultivarPoly.variable('y4')
    once = poly_reduce(dividend, generators[2:])
    assert poly_reduce(once, generators[2:]) == once


def test_zero_remainder_when_dividing_by_itself():
    generator = decomposition_generators(Matrix2(*MDPV_ENTRIES), MDPV_N)[0]
    assert poly_reduce(generator, [generator]).is_zero()


def test_s_polynomial_cancels_leading_terms():
    f, g = polys_from_text(['x*y - 1', 'y^2 - 1'], XY)
    assert s_polynomial(f, g).to_text() == 'x - y'


def test_unit_ideal_given_inconsistent_generators():
    assert buchberger(polys_from_text(['x - 1', 'x - 2'], XY)) == [MultivarPoly.constant(1, XY)]


@pytest.mark.parametrize('generators', [[], ['x', '0']])
def test_domain_error_raised_given_empty_or_zero_generators(generators):
    with pytest.raises(DomainError):
        buchberger(polys_from_text(generators, XY))


def test_progress_reported_when_pair_limit_reached():
    with pytest.raises(ResourceBudgetError) as error:
        buchberger(decomposition_generators(Matrix2(35, 0, 0, 1)), pair_limit=1)
    progress = error.value.progress
    assert progress['reductions'] == 1
    assert set(progress) == {'basis_size', 'reductions', 'pending_pairs', 'skipped_pairs'}


@pytest.mark.parametrize('generators', [
    ['x^2 + y + z - 1', 'x + y^2 + z - 1', 'x + y + z^2 - 1'],
    ['x^2 - y', 'x^3 - z'],
    ['x*y - z', 'x*z - y', 'y*z - x'],
])
def test_basis_matches_sympy_given_three_variables(generators):
    ours = buchberger(polys_from_text(generators, XYZ))
    x, y, z = symbols('x y z')
    expressions = [expression.replace('^', '**') for expression in generators]
    reference = groebner(expressions, x, y, z, order='lex')
    assert set(texts(ours)) == set(texts(from_sympy(g, XYZ) for g in reference.exprs))
    assert is_groebner(ours)
    assert is_interreduced(ours)


def test_reduction_removes_redundant_generators():
    basis = polys_from_text(['x*y - 1', 'y^2 - 1', 'x - y'], XY)
    assert is_groebner(basis)
    assert not is_interreduced(basis)
    assert texts(reduce_basis(basis)) == ['x - y', 'y^2 - 1']


def test_five_generators_vanish_at_worked_solution():
    generators = decomposition_generators(Matrix2(*MDPV_ENTRIES), MDPV_N)
    assert len(generators) == 5
    assert all(g.evaluate(MDPV_SOLUTION) == 0 for g in generators)


@pytest.mark.parametrize('entries, n, solution', [
    (MDPV_ENTRIES, MDPV_N, MDPV_SOLUTION),
    ((35, 0, 0, 1), 35, SMALL_SOLUTION),
])
def test_closed_forms_vanish_at_known_decomposition(entries, n, solution):
    basis = closed_form_basis(*entries, n)
    assert len(basis) == 15
    for label, poly in basis.items():
        assert poly.evaluate(solution) == 0, label


@pytest.mark.slow
@pytest.mark.parametrize('entries, n, solution', [
    ((35, 0, 0, 1), 35, SMALL_SOLUTION),
    (MDPV_ENTRIES, MDPV_N, MDPV_SOLUTION),
])
def test_groebner_basis_vanishes_at_known_decomposition(entries, n, solution):
    basis = buchberger(decomposition_generators(Matrix2(*entries), n))
    assert is_interreduced(basis)
    assert is_groebner(basis)
    assert all(g.evaluate(solution) == 0 for g in basis)
    assert all(poly_reduce(g, basis).is_zero() for g in decomposition_generators(Matrix2(*entries), n))


def test_closed_forms_in_ideal_given_worked_matrix():
    basis = buchberger(decomposition_generators(Matrix2(*MDPV_ENTRIES), MDPV_N))
    assert is_groebner(basis)
    assert is_interreduced(basis)
    for label, poly in closed_form_basis(*MDPV_ENTRIES, MDPV_N).items():
        assert poly_reduce(poly, basis).is_zero(), label
