from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, Iterator, Mapping

from ..lib.exceptions import DomainError, SpecializationError
from .matrix import Matrix2

REQUIRED_VARIABLES = ('x3', 'x4', 'y3', 'y4')
Specialization = Mapping[str, int]


@dataclass(frozen=True)
class DecompositionSolution:
    """
    A factorization N = P @ Q of a determinant-n matrix into integer matrices.
    """
    P: Matrix2
    Q: Matrix2

    @property
    def factors(self):
        return abs(self.P.det()), abs(self.Q.det())

    def product(self) -> Matrix2:
        return self.P @ self.Q


def _integral(value: Fraction, name: str) -> int:
    if value.denominator != 1:
        raise SpecializationError(SpecializationError.INFEASIBLE, f"{name} = {value} is not an integer")
    return value.numerator


def _solve_second_row_of_q(matrix: Matrix2, x3: int, x4: int, y3: int, y4: int, specialization: Specialization):
    # x3*y1 + x4*y3 = c and x3*y2 + x4*y4 = d
    if x3 != 0:
        y1 = _integral(Fraction(matrix.c - x4 * y3, x3), 'y1')
        y2 = _integral(Fraction(matrix.d - x4 * y4, x3), 'y2')
        return y1, y2
    if matrix.c != x4 * y3 or matrix.d != x4 * y4:
        raise SpecializationError(SpecializationError.INFEASIBLE, "x3 = 0 but the second row of N is not x4 * (y3, y4)")
    if 'y1' not in specialization or 'y2' not in specialization:
        raise SpecializationError(SpecializationError.DEGENERATE, "x3 = 0 leaves y1 and y2 undetermined")
    return int(specialization['y1']), int(specialization['y2'])


def solve_decomposition(matrix: Matrix2, specialization: Specialization) -> DecompositionSolution:
    """
    Fixes x3, x4, y3, y4 (and optionally more entries) and solves
    P @ Q = N for the remaining entries of P = [[x1, x2], [x3, x4]] and
    Q = [[y1, y2], [y3, y4]].

    The second row of N determines y1, y2 linearly; the first row then
    gives (x1, x2) = (a, b) @ Q^-1. Any supplied value for x1, x2, y1 or y2
    has to agree with the solution.
    """
    missing = [name for name in REQUIRED_VARIABLES if name not in specialization]
    if missing:
        raise DomainError(f"a specialization must fix {', '.join(missing)}")
    x3, x4, y3, y4 = (int(specialization[name]) for name in REQUIRED_VARIABLES)

    y1, y2 = _solve_second_row_of_q(matrix, x3, x4, y3, y4, specialization)
    det_q = y1 * y4 - y2 * y3
    if det_q == 0:
        raise SpecializationError(SpecializationError.DEGENERATE, "Q is singular")
    x1 = _integral(Fraction(matrix.a * y4 - matrix.b * y3, det_q), 'x1')
    x2 = _integral(Fraction(matrix.b * y1 - matrix.a * y2, det_q), 'x2')

    solved = {'x1': x1, 'x2': x2, 'y1': y1, 'y2': y2}
    for name, value in solved.items():
        if name in specialization and int(specialization[name]) != value:
            raise SpecializationError(SpecializationError.INFEASIBLE, f"{name} is fixed to {specialization[name]} but solves to {value}")

    P = Matrix2(x1, x2, x3, x4)
    Q = Matrix2(y1, y2, y3, y4)
    if P @ Q != matrix:
        raise SpecializationError(SpecializationError.INFEASIBLE, "P @ Q does not reproduce N")
    if abs(P.det()) == 1 or abs(Q.det()) == 1:
        raise SpecializationError(SpecializationError.TRIVIAL, f"det P = {P.det()}, det Q = {Q.det()}")
    return DecompositionSolution(P, Q)


def enumerate_specializations(box: int) -> Iterator[Dict[str, int]]:
    """
    Every (x3, x4, y3, y4) in [-box, box]^4, shell by shell in increasing
    max-norm, lexicographic inside a shell.
    """
    if box < 0:
        raise DomainError(f"specialization box must be nonnegative, got {box}")
    for radius in range(box + 1):
        for values in product(range(-radius, radius + 1), repeat=len(REQUIRED_VARIABLES)):
            if max(map(abs, values), default=0) == radius:
                yield dict(zip(REQUIRED_VARIABLES, values))


def groebner_identity_check(matrix: Matrix2, assignment: Mapping[str, int]) -> bool:
    """
    Evaluates the closed forms of x1..x4 in terms of y1..y4 and checks
    x1*x4 - x2*x3 == (a*d - b*c) / (y1*y4 - y2*y3) exactly.
    """
    y1, y2, y3, y4 = (Fraction(assignment[name]) for name in ('y1', 'y2', 'y3', 'y4'))
    delta = y1 * y4 - y2 * y3
    if delta == 0:
        raise DomainError("y1*y4 - y2*y3 must be nonzero")
    a, b, c, d = matrix.a, matrix.b, matrix.c, matrix.d
    x1 = (a * y4 - b * y3) / delta
    x2 = (b * y1 - a * y2) / delta
    x3 = (c * y4 - d * y3) / delta
    x4 = (d * y1 - c * y2) / delta

    # the closed forms must solve the four linear equations as well
    if (x1 * y1 + x2 * y3, x1 * y2 + x2 * y4, x3 * y1 + x4 * y3, x3 * y2 + x4 * y4) != (a, b, c, d):
        return False
    return x1 * x4 - x2 * x3 == Fraction(matrix.det()) / delta
