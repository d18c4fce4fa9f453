import random
from math import gcd
from typing import Optional

from ..arith import is_probable_prime, primes_up_to
from ..base import BaseFactorService, ensure_deadline, timed
from ..lib.deadline import Deadline
from ..lib.exceptions import DomainError, InversionFailure, UnsupportedInputError
from ..lib.log import LOGGER
from ..lib.methods import MethodCode
from ..lib.result import FactorResult, FailureReason
from ..lib.settings import DEFAULT_ECM_CURVES, DEFAULT_ECM_STAGE1_BOUND
from .curve import AffineCurve, Point


def _extract_factor(failure: InversionFailure, n: int) -> Optional[int]:
    divisor = failure.gcd
    if 1 < divisor < n:
        assert n % divisor == 0, f"inversion witness {divisor} does not divide {n}"
        return divisor
    return None


def ecm_on_curve(curve: AffineCurve, point: Point, stage1_bound: int, deadline: Optional[Deadline] = None) -> Optional[int]:
    """
    Stage 1 on one curve: multiplies the point by the largest power of each
    prime not above stage1_bound, so the accumulated scalar is the lcm of
    1..stage1_bound. Returns the factor revealed by a failed inversion, or
    None when the curve gives nothing (including gcd = n).
    """
    deadline = ensure_deadline(deadline)
    n = curve.n
    try:
        for prime in primes_up_to(stage1_bound):
            deadline.check()
            power = prime
            while power * prime <= stage1_bound:
                power *= prime
            point = curve.multiply(power, point)
            if point is None:
                return None
    except InversionFailure as failure:
        return _extract_factor(failure, n)
    return None


@timed(MethodCode.ECM)
def ecm_factor(
    n: int,
    curve_count: int = DEFAULT_ECM_CURVES,
    stage1_bound: int = DEFAULT_ECM_STAGE1_BOUND,
    rng_seed: int = 0,
    deadline: Optional[Deadline] = None,
) -> FactorResult:
    """
    Lenstra's method with random affine curves through random points.
    """
    if gcd(n, 6) != 1:
        raise UnsupportedInputError(f"ECM needs gcd(n, 6) = 1, got n = {n}", reason='gcd(n, 6) != 1')
    deadline = ensure_deadline(deadline)
    if is_probable_prime(n):
        return FactorResult.failed(n, MethodCode.ECM, FailureReason.PRIME_INPUT)

    rng = random.Random(rng_seed)
    for curve_index in range(curve_count):
        deadline.check()
        a = rng.randrange(n)
        x0 = rng.randrange(n)
        y0 = rng.randrange(n)
        b = (y0 * y0 - x0 * x0 * x0 - a * x0) % n
        try:
            curve = AffineCurve(a, b, n)
        except InversionFailure as failure:
            divisor = _extract_factor(failure, n)
            if divisor:
                return FactorResult.found(n, divisor, MethodCode.ECM)
            continue
        except DomainError:
            continue

        divisor = ecm_on_curve(curve, (x0, y0), stage1_bound, deadline)
        if divisor:
            LOGGER.debug(f"ECM curve {curve_index} revealed {divisor} | {n}")
            return FactorResult.found(n, divisor, MethodCode.ECM)

    return FactorResult.failed(n, MethodCode.ECM, FailureReason.CURVES_EXHAUSTED)


class EcmService(BaseFactorService):
    code = MethodCode.ECM

    def factor(self, n: int, deadline: Deadline) -> FactorResult:
        for small in (2, 3):
            if n % small == 0:
                return FactorResult.found(n, small, self.code)
        classical = self.settings.classical
        return ecm_factor(
            n,
            curve_count=classical.ecm_curves,
            stage1_bound=classical.ecm_stage1_bound,
            rng_seed=self.settings.general.seed,
            deadline=deadline,
        )
