from typing import Optional

from ..arith import is_perfect_square
from ..base import BaseFactorService, timed
from ..lib.deadline import Deadline
from ..lib.exceptions import DomainError
from ..lib.log import LOGGER
from ..lib.methods import MethodCode
from ..lib.result import FactorResult, FailureReason


def triangular_index(n: int) -> Optional[int]:
    """
    k with n = k(k + 1)/2, or None when n is not triangular.
    """
    if n < 0:
        return None
    is_square, root = is_perfect_square(8 * n + 1)
    if not is_square:
        return None
    return (root - 1) // 2


@timed(MethodCode.TRIANGULAR)
def triangular_factor(n: int) -> FactorResult:
    """
    If 8n + 1 = s^2 then n = k(k + 1)/2 with k = (s - 1)/2, and one of
    (s - 1)/2, (s + 1)/2 divides n. Both candidates are tried: which one
    divides depends on the parity of k.
    """
    if n < 4:
        raise DomainError(f"triangular test needs n >= 4, got {n}")

    is_square, root = is_perfect_square(8 * n + 1)
    if not is_square:
        return FactorResult.failed(n, MethodCode.TRIANGULAR, FailureReason.NOT_TRIANGULAR)

    for candidate in ((root - 1) // 2, (root + 1) // 2):
        if 1 < candidate < n and n % candidate == 0:
            LOGGER.debug(f"{n} is triangular, 8n + 1 = {root}^2, factor {candidate}")
            return FactorResult.found(n, candidate, MethodCode.TRIANGULAR)

    return FactorResult.failed(n, MethodCode.TRIANGULAR, FailureReason.TRIVIAL_COFACTOR)


class TriangularService(BaseFactorService):
    code = MethodCode.TRIANGULAR

    def factor(self, n: int, deadline: Deadline) -> FactorResult:
        return triangular_factor(n)
