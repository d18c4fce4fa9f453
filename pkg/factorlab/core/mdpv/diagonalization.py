import time
from typing import Optional

from ..arith import ceil_sqrt, is_perfect_square
from ..base import elapsed_ms, ensure_deadline, timed
from ..lib.deadline import Deadline
from ..lib.exceptions import DomainError
from ..lib.methods import MethodCode
from ..lib.result import FactorResult, FailureReason
from ..lib.settings import DEFAULT_TRACE_WINDOW
from .matrix import Matrix2, companion_matrix

DEADLINE_STRIDE = 1 << 10


def _eigen_split(matrix: Matrix2) -> Optional[int]:
    """
    Returns |lambda_1| when the characteristic polynomial of matrix splits
    over the integers into a nontrivial factorization of det(matrix).
    """
    n = matrix.det()
    trace = matrix.trace()
    discriminant = trace * trace - 4 * n
    if discriminant < 0:
        return None
    is_square, root = is_perfect_square(discriminant)
    if not is_square or (trace + root) % 2:
        return None
    first, second = (trace + root) // 2, (trace - root) // 2
    assert first * second == n and first + second == trace
    if {abs(first), abs(second)} & {1, abs(n)}:
        return None
    return abs(first)


def diagonalization_factor(matrix: Matrix2) -> FactorResult:
    """
    Splits det(N) through the integer eigenvalues of N, which exist exactly
    when (a + d)^2 - 4n is a square.
    """
    start = time.perf_counter()
    return _diagonalize(matrix).with_elapsed(elapsed_ms(start))


def _diagonalize(matrix: Matrix2) -> FactorResult:
    n = matrix.det()
    if n < 4:
        raise DomainError(f"diagonalization needs det(N) >= 4, got {n}")
    trace = matrix.trace()
    discriminant = trace * trace - 4 * n
    if discriminant < 0 or not is_perfect_square(discriminant)[0]:
        return FactorResult.failed(n, MethodCode.MDPV, FailureReason.NOT_SQUARE)
    factor = _eigen_split(matrix)
    if factor is None:
        return FactorResult.failed(n, MethodCode.MDPV, FailureReason.TRIVIAL_EIGENVALUES)
    return FactorResult.found(n, factor, MethodCode.MDPV)


@timed(MethodCode.MDPV)
def trace_sweep(n: int, window: int = DEFAULT_TRACE_WINDOW, deadline: Optional[Deadline] = None) -> FactorResult:
    """
    Diagonalizes the companion matrices [[t, -n], [1, 0]] for window
    consecutive traces starting at ceil(2 sqrt(n)), the smallest trace with
    a real spectrum.
    """
    if n < 4:
        raise DomainError(f"trace sweep needs n >= 4, got {n}")
    deadline = ensure_deadline(deadline)
    start = ceil_sqrt(4 * n)
    for offset in range(window):
        if offset % DEADLINE_STRIDE == 0:
            deadline.check()
        factor = _eigen_split(companion_matrix(n, start + offset))
        if factor is not None:
            return FactorResult.found(n, factor, MethodCode.MDPV)
    return FactorResult.failed(n, MethodCode.MDPV, FailureReason.STEPS_EXHAUSTED)
