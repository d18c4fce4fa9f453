from typing import Optional

from ..arith import ceil_sqrt, is_perfect_square
from ..base import BaseFactorService, ensure_deadline, timed
from ..lib.deadline import Deadline
from ..lib.exceptions import DomainError
from ..lib.methods import MethodCode
from ..lib.result import FactorResult, FailureReason
from ..lib.settings import DEFAULT_FERMAT_MAX_STEPS

DEADLINE_STRIDE = 1 << 12


@timed(MethodCode.FERMAT)
def fermat_factor(n: int, max_steps: int = DEFAULT_FERMAT_MAX_STEPS, deadline: Optional[Deadline] = None) -> FactorResult:
    """
    Walks a upwards from ceil(sqrt(n)) until a^2 - n = b^2, then n = (a - b)(a + b).
    """
    if n < 3 or n % 2 == 0:
        raise DomainError(f"Fermat's method needs an odd n >= 3, got {n}")
    deadline = ensure_deadline(deadline)

    a = ceil_sqrt(n)
    b_squared = a * a - n
    for step in range(max_steps + 1):
        if step % DEADLINE_STRIDE == 0:
            deadline.check()
        is_square, b = is_perfect_square(b_squared)
        if is_square:
            if a - b > 1:
                return FactorResult.found(n, a - b, MethodCode.FERMAT)
            # a - b == 1 is the trivial representation n = 1 * n
            return FactorResult.failed(n, MethodCode.FERMAT, FailureReason.PRIME_INPUT)
        b_squared += 2 * a + 1
        a += 1

    return FactorResult.failed(n, MethodCode.FERMAT, FailureReason.STEPS_EXHAUSTED)


class FermatService(BaseFactorService):
    code = MethodCode.FERMAT

    def factor(self, n: int, deadline: Deadline) -> FactorResult:
        if n % 2 == 0:
            return FactorResult.found(n, 2, self.code)
        return fermat_factor(n, self.settings.classical.fermat_max_steps, deadline=deadline)
