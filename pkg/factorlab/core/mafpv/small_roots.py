from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..base import ensure_deadline
from ..lib.deadline import Deadline
from ..lib.exceptions import DomainError, ResourceBudgetError
from ..lib.settings import DEFAULT_BRUTE_FORCE_GUARD
from .forms import FormSpec

DEADLINE_STRIDE = 1 << 14

Root = Tuple[int, int]


@dataclass(frozen=True)
class SmallRootProblem:
    """
    Find (x, y) with 1 <= x <= X, 1 <= y <= Y and form(x, y) = n.
    M is the auxiliary modulus of the lattice solver (None picks a default).
    """
    form: FormSpec
    n: int
    X: int
    Y: int
    M: Optional[int] = None

    def __post_init__(self):
        if self.X < 1 or self.Y < 1:
            raise DomainError(f"root bounds must be positive, got X = {self.X}, Y = {self.Y}")
        if self.M is not None and self.M <= self.n:
            raise DomainError(f"auxiliary modulus {self.M} must exceed n = {self.n}")

    @property
    def W(self) -> int:
        return max(abs(coefficient) * self.X ** i * self.Y ** j for (i, j), coefficient in self.form.coefficients().items())

    def is_root(self, x: int, y: int) -> bool:
        return self.form.evaluate(x, y) == self.n

    def solve_for_x(self, y: int) -> Optional[int]:
        """
        The x in [1, X] with form(x, y) = n for a fixed y, if there is one.
        """
        form = self.form
        numerator = self.n - 6 * form.s1 * y - form.c
        denominator = 36 * y + 6 * form.s2
        if denominator == 0 or numerator % denominator:
            return None
        x = numerator // denominator
        return x if 1 <= x <= self.X else None


@dataclass(frozen=True)
class BoundCheck:
    holds: bool
    W: int
    xy_cubed: int

    @property
    def gap(self) -> int:
        """
        W - (XY)^3; positive exactly when the bound holds.
        """
        return self.W - self.xy_cubed

    def __bool__(self):
        return self.holds


def integer_bound_check(problem: SmallRootProblem) -> BoundCheck:
    """
    Whether XY < W^(1/3), compared exactly as (XY)^3 < W. With W = 36XY this
    only holds for XY <= 5, so it documents why the integer variant is not
    usable for real bounds.
    """
    xy_cubed = (problem.X * problem.Y) ** 3
    return BoundCheck(holds=xy_cubed < problem.W, W=problem.W, xy_cubed=xy_cubed)


def brute_force_roots(
    problem: SmallRootProblem,
    guard: int = DEFAULT_BRUTE_FORCE_GUARD,
    deadline: Optional[Deadline] = None,
) -> List[Root]:
    """
    Every root in the box, one linear equation in y per x:
    y * (36x + 6*s1) = n - 6*s2*x - c.
    """
    if problem.X * problem.Y > guard:
        raise ResourceBudgetError(
            f"brute force over {problem.X} x {problem.Y} exceeds the guard {guard}",
            progress={'X': problem.X, 'Y': problem.Y, 'guard': guard},
        )
    deadline = ensure_deadline(deadline)
    form, n = problem.form, problem.n
    roots = []
    for x in range(1, problem.X + 1):
        if x % DEADLINE_STRIDE == 0:
            deadline.check()
        numerator = n - 6 * form.s2 * x - form.c
        denominator = 36 * x + 6 * form.s1
        if numerator % denominator:
            continue
        y = numerator // denominator
        if 1 <= y <= problem.Y:
            roots.append((x, y))
    return roots
