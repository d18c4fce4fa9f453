from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Tuple

from sympy import Poly, factor_list, nextprime, resultant, symbols

from ..arith import mod_inverse
from ..base import ensure_deadline
from ..lattice import LatticeBasis, lll_reduce
from ..lib.deadline import Deadline
from ..lib.exceptions import AlgebraicDependenceError, BoundViolationError, DomainError
from ..lib.log import LOGGER
from ..lib.settings import DEFAULT_LATTICE_PARAM, DEFAULT_LLL_DELTA
from .small_roots import Root, SmallRootProblem

X_SYMBOL, Y_SYMBOL = symbols('x y')

BivariatePoly = Dict[Tuple[int, int], int]


def default_modulus(n: int) -> int:
    return int(nextprime(4 * n))


def smallest_valid_modulus(n: int, X: int, Y: int) -> int:
    """
    The least prime M with M > 4n and M > (XY)^2. A larger M only makes the
    reduced rows that are independent of the target polynomial longer.
    """
    return int(nextprime(max(4 * n, (X * Y) ** 2)))


def _multiply(first: BivariatePoly, second: BivariatePoly) -> BivariatePoly:
    product: BivariatePoly = {}
    for (i, j), a in first.items():
        for (k, l), b in second.items():
            key = (i + k, j + l)
            product[key] = product.get(key, 0) + a * b
    return {key: value for key, value in product.items() if value}


def target_polynomial(problem: SmallRootProblem) -> BivariatePoly:
    """
    form(x, y) - n, which vanishes over the integers at every root.
    """
    poly = dict(problem.form.coefficients())
    poly[(0, 0)] -= problem.n
    return {key: value for key, value in poly.items() if value}


def shift_lattice(problem: SmallRootProblem, modulus: int, lattice_param: int) -> Tuple[List[Tuple[int, int]], LatticeBasis]:
    """
    Rows x^(u-k) y^(v-k) f^k M^(m-k) with k = min(u, v) for every monomial
    x^u y^v, 0 <= u, v <= m, where f is the target polynomial made monic in
    xy modulo M. Column x^u y^v is scaled by X^u Y^v. Ordering the columns
    lexicographically makes the basis lower triangular.
    """
    m = lattice_param
    inverse = mod_inverse(36, modulus)
    monic = {key: (value * inverse) % modulus for key, value in target_polynomial(problem).items()}
    monic[(1, 1)] = 1

    powers = [{(0, 0): 1}]
    for _ in range(m):
        powers.append(_multiply(powers[-1], monic))

    monomials = [(u, v) for u in range(m + 1) for v in range(m + 1)]
    column = {monomial: index for index, monomial in enumerate(monomials)}
    rows = []
    for u, v in monomials:
        k = min(u, v)
        scale = modulus ** (m - k)
        row = [0] * len(monomials)
        for (i, j), value in powers[k].items():
            a, b = i + u - k, j + v - k
            row[column[(a, b)]] = value * scale * problem.X ** a * problem.Y ** b
        rows.append(row)
    return monomials, LatticeBasis(rows)


def _unscale(row: List[int], monomials: List[Tuple[int, int]], problem: SmallRootProblem) -> BivariatePoly:
    poly = {}
    for value, (i, j) in zip(row, monomials):
        if value:
            scale = problem.X ** i * problem.Y ** j
            assert value % scale == 0
            poly[(i, j)] = value // scale
    return poly


def _to_sympy(poly: BivariatePoly) -> Poly:
    return Poly.from_dict(poly, X_SYMBOL, Y_SYMBOL)


def _integer_roots(eliminated: Poly) -> Iterator[int]:
    if eliminated.degree() < 1:
        return
    _, factors = factor_list(eliminated)
    for factor, _ in factors:
        if factor.degree() != 1:
            continue
        leading, constant = (int(value) for value in factor.all_coeffs())
        if (-constant) % leading == 0:
            yield -constant // leading


def _candidate_pairs(rows: int, short: int) -> Iterator[Tuple[int, int]]:
    """
    Index pairs into [target, h_1, ..., h_rows]: the two shortest reduced
    rows first, then every reduced row against the target polynomial, then
    the remaining pairs of short rows.
    """
    seen = set()
    ordered = [(1, 2)] if rows >= 2 else []
    ordered += [(0, index) for index in range(1, rows + 1)]
    ordered += list(combinations(range(1, short + 1), 2))
    for pair in ordered:
        if pair not in seen:
            seen.add(pair)
            yield pair


def coppersmith_bivariate(
    problem: SmallRootProblem,
    lattice_param: int = DEFAULT_LATTICE_PARAM,
    delta: Fraction = DEFAULT_LLL_DELTA,
    deadline: Optional[Deadline] = None,
) -> List[Root]:
    """
    Lattice search for small roots of form(x, y) = n modulo M.

    The shift lattice is LLL-reduced and short rows are read back as
    integer polynomials. Short rows vanish over the integers at every root
    in the box, so eliminating x with a resultant leaves a polynomial in y
    whose integer roots are tried. Only roots that satisfy form(x, y) = n
    exactly are returned.
    """
    if lattice_param < 1:
        raise DomainError(f"lattice parameter must be positive, got {lattice_param}")
    deadline = ensure_deadline(deadline)
    modulus = problem.M if problem.M is not None else default_modulus(problem.n)
    if modulus % 2 == 0 or modulus % 3 == 0:
        raise DomainError(f"auxiliary modulus {modulus} must be coprime to 6")
    if (problem.X * problem.Y) ** 2 >= modulus:
        raise BoundViolationError(f"(XY)^2 = {(problem.X * problem.Y) ** 2} is not below M = {modulus}")

    monomials, basis = shift_lattice(problem, modulus, lattice_param)
    deadline.check()
    reduced = lll_reduce(basis, delta, deadline=deadline)
    deadline.check()

    limit = modulus ** (2 * lattice_param) // len(monomials)
    short = sum(1 for row in reduced.rows if sum(value * value for value in row) < limit)
    LOGGER.debug(f"Coppersmith lattice of dimension {len(monomials)}: {short} rows under the root-vanishing bound")

    candidates = [target_polynomial(problem)] + [_unscale(row, monomials, problem) for row in reduced.rows]
    expressions = [_to_sympy(poly).as_expr() for poly in candidates]

    roots = set()
    independent = False
    for first, second in _candidate_pairs(len(reduced.rows), max(short, 2)):
        deadline.check()
        eliminated = Poly(resultant(expressions[first], expressions[second], X_SYMBOL), Y_SYMBOL)
        if eliminated.is_zero:
            continue
        independent = True
        for y in _integer_roots(eliminated):
            if 1 <= y <= problem.Y:
                x = problem.solve_for_x(y)
                if x is not None and problem.is_root(x, y):
                    roots.add((x, y))
        if roots:
            break

    if not independent:
        raise AlgebraicDependenceError()
    return sorted(roots)
