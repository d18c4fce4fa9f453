from typing import Optional

from ..arith import isqrt
from ..base import BaseFactorService, ensure_deadline, timed
from ..lib.deadline import Deadline
from ..lib.exceptions import DomainError
from ..lib.log import LOGGER
from ..lib.methods import MethodCode
from ..lib.result import FactorResult, FailureReason

DEADLINE_STRIDE = 1 << 12


@timed(MethodCode.TRIAL)
def trial_division(n: int, bound: Optional[int] = None, deadline: Optional[Deadline] = None) -> FactorResult:
    """
    Smallest prime factor of n up to `bound` (default and cap: isqrt(n)).
    """
    if n < 4:
        raise DomainError(f"trial division needs n >= 4, got {n}")
    deadline = ensure_deadline(deadline)

    root = isqrt(n)
    limit = root if bound is None else min(bound, root)

    if limit >= 2 and n % 2 == 0:
        return FactorResult.found(n, 2, MethodCode.TRIAL)

    for index, divisor in enumerate(range(3, limit + 1, 2)):
        if index % DEADLINE_STRIDE == 0:
            deadline.check()
        if n % divisor == 0:
            LOGGER.debug(f"Trial division found {divisor} | {n}")
            return FactorResult.found(n, divisor, MethodCode.TRIAL)

    reason = FailureReason.PRIME_INPUT if limit == root else FailureReason.BOUND_EXHAUSTED
    return FactorResult.failed(n, MethodCode.TRIAL, reason)


class TrialDivisionService(BaseFactorService):
    code = MethodCode.TRIAL

    def factor(self, n: int, deadline: Deadline) -> FactorResult:
        return trial_division(n, deadline=deadline)
