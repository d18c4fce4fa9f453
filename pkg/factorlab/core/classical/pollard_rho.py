from math import gcd
from typing import Optional

from ..arith import is_perfect_square, is_probable_prime
from ..base import BaseFactorService, ensure_deadline, timed
from ..lib.deadline import Deadline
from ..lib.exceptions import DomainError
from ..lib.log import LOGGER
from ..lib.methods import MethodCode
from ..lib.result import FactorResult, FailureReason
from ..lib.settings import DEFAULT_RHO_MAX_ITERS, DEFAULT_RHO_POLYNOMIAL

DEADLINE_STRIDE = 1 << 10

POLYNOMIAL_CONSTANTS = {
    'x^2+1': 1,
    'x^2-1': -1,
}


@timed(MethodCode.RHO)
def pollard_rho(
    n: int,
    seed: int = 2,
    max_iters: int = DEFAULT_RHO_MAX_ITERS,
    polynomial: str = DEFAULT_RHO_POLYNOMIAL,
    deadline: Optional[Deadline] = None,
) -> FactorResult:
    """
    Floyd cycle detection on g(x) = x^2 + 1 mod n (or x^2 - 1), with a gcd
    at every step. A cycle that closes with gcd = n fails with
    CYCLE_WITHOUT_SPLIT so the caller can reseed.
    """
    if n < 4:
        raise DomainError(f"Pollard rho needs n >= 4, got {n}")
    deadline = ensure_deadline(deadline)
    constant = POLYNOMIAL_CONSTANTS[polynomial]

    if n % 2 == 0:
        return FactorResult.found(n, 2, MethodCode.RHO)
    is_square, root = is_perfect_square(n)
    if is_square:
        return FactorResult.found(n, root, MethodCode.RHO)

    tortoise = hare = seed % n
    for step in range(max_iters):
        if step % DEADLINE_STRIDE == 0:
            deadline.check()
        tortoise = (tortoise * tortoise + constant) % n
        hare = (hare * hare + constant) % n
        hare = (hare * hare + constant) % n
        divisor = gcd(abs(tortoise - hare), n)
        if divisor == n:
            return FactorResult.failed(n, MethodCode.RHO, FailureReason.CYCLE_WITHOUT_SPLIT)
        if divisor > 1:
            return FactorResult.found(n, divisor, MethodCode.RHO)

    return FactorResult.failed(n, MethodCode.RHO, FailureReason.STEPS_EXHAUSTED)


class PollardRhoService(BaseFactorService):
    code = MethodCode.RHO

    def factor(self, n: int, deadline: Deadline) -> FactorResult:
        if is_probable_prime(n):
            return FactorResult.failed(n, self.code, FailureReason.PRIME_INPUT)
        classical = self.settings.classical
        seed = self.settings.general.seed + 2
        result = None
        for attempt in range(classical.rho_retries):
            result = pollard_rho(
                n,
                seed=seed + attempt,
                max_iters=classical.rho_max_iters,
                polynomial=classical.rho_polynomial,
                deadline=deadline,
            )
            if result.reason != FailureReason.CYCLE_WITHOUT_SPLIT:
                return result
            LOGGER.warning(f"Rho cycle closed without a split on {n}, reseeding (attempt {attempt + 1})")
        return result
