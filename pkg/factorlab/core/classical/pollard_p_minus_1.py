from math import gcd
from typing import Optional

from ..arith import is_probable_prime, primes_up_to
from ..base import BaseFactorService, ensure_deadline, timed
from ..lib.deadline import Deadline
from ..lib.exceptions import DomainError
from ..lib.methods import MethodCode
from ..lib.result import FactorResult, FailureReason
from ..lib.settings import DEFAULT_P_MINUS_1_BOUND

DEADLINE_STRIDE = 1 << 8


@timed(MethodCode.P_MINUS_1)
def pollard_p_minus_1(
    n: int,
    smoothness_bound: int = DEFAULT_P_MINUS_1_BOUND,
    base: int = 2,
    deadline: Optional[Deadline] = None,
) -> FactorResult:
    """
    Raises `base` to the largest power of each prime not above the bound
    and takes gcd(a - 1, n) after every prime, so a factor p with B-smooth
    p - 1 is caught before the other factor's order is absorbed too.
    """
    if n < 3 or n % 2 == 0:
        raise DomainError(f"p - 1 needs an odd n >= 3, got {n}")
    deadline = ensure_deadline(deadline)
    if is_probable_prime(n):
        return FactorResult.failed(n, MethodCode.P_MINUS_1, FailureReason.PRIME_INPUT)

    divisor = gcd(base, n)
    if 1 < divisor < n:
        return FactorResult.found(n, divisor, MethodCode.P_MINUS_1)

    a = base
    for index, prime in enumerate(primes_up_to(smoothness_bound)):
        if index % DEADLINE_STRIDE == 0:
            deadline.check()
        power = prime
        while power * prime <= smoothness_bound:
            power *= prime
        a = pow(a, power, n)
        divisor = gcd(a - 1, n)
        if divisor == n:
            return FactorResult.failed(n, MethodCode.P_MINUS_1, FailureReason.BOUND_TOO_LARGE)
        if divisor > 1:
            return FactorResult.found(n, divisor, MethodCode.P_MINUS_1)

    return FactorResult.failed(n, MethodCode.P_MINUS_1, FailureReason.BOUND_TOO_SMALL)


class PollardPMinus1Service(BaseFactorService):
    code = MethodCode.P_MINUS_1

    def factor(self, n: int, deadline: Deadline) -> FactorResult:
        if n % 2 == 0:
            return FactorResult.found(n, 2, self.code)
        return pollard_p_minus_1(n, self.settings.classical.p_minus_1_bound, deadline=deadline)
