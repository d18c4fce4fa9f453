import time
from typing import Dict, Optional

from .arith import is_probable_prime
from .base import BaseFactorService, elapsed_ms
from .classical import (
    EcmService,
    FermatService,
    PollardPMinus1Service,
    PollardRhoService,
    TrialDivisionService,
    trial_division,
)
from .lib.deadline import Deadline
from .lib.exceptions import DomainError, FactorlabError
from .lib.log import LOGGER
from .lib.methods import MethodCode
from .lib.result import FactorResult, FailureReason
from .lib.settings import FactorlabSettings
from .mafpv import MafpvBruteService, MafpvLatticeService
from .mdpv import MdpvService
from .rpv import TriangularService, triangular_factor

# Share of the remaining budget each auto stage may use.
AUTO_TRIAL_SLICE = 0.1
AUTO_RHO_SLICE = 0.5


class FactorDispatcher:
    """
    Routes a modulus to the service registered for a method code and keeps
    every failure inside a FactorResult.
    """

    def __init__(self, settings: Optional[FactorlabSettings] = None):
        self.settings = settings if settings is not None else FactorlabSettings()
        self.services: Dict[MethodCode, BaseFactorService] = {
            service.code: service
            for service in (
                TrialDivisionService(self.settings),
                FermatService(self.settings),
                PollardRhoService(self.settings),
                PollardPMinus1Service(self.settings),
                EcmService(self.settings),
                TriangularService(self.settings),
                MdpvService(self.settings),
                MafpvBruteService(self.settings),
                MafpvLatticeService(self.settings),
            )
        }

    def new_deadline(self) -> Deadline:
        return Deadline(self.settings.general.timeout_ms)

    def run(self, n: int, method: MethodCode, deadline: Optional[Deadline] = None) -> FactorResult:
        if n < 4:
            raise DomainError(f"only integers >= 4 can be factored, got {n}")
        deadline = self.new_deadline() if deadline is None else deadline
        LOGGER.debug(f"Running {method.value} on {n}")
        if method == MethodCode.AUTO:
            start = time.perf_counter()
            return self._guarded(n, method, lambda: self._auto(n, deadline)).with_elapsed(elapsed_ms(start))
        service = self.services[method]
        return self._guarded(n, method, lambda: service.run(n, deadline))

    def _guarded(self, n: int, method: MethodCode, call) -> FactorResult:
        try:
            return call()
        except FactorlabError as error:
            LOGGER.debug(f"{method.value} cannot handle {n}: {error}")
            return FactorResult.failed(n, method, str(error))
        except Exception as error:
            LOGGER.error(f"Unexpected error while running {method.value} on {n}: {error}")
            return FactorResult.failed(n, method, f"internal error: {error}")

    def _auto(self, n: int, deadline: Deadline) -> FactorResult:
        """
        Cheapest screens first: triangular test, trial division up to the
        configured bound, rho, then ECM with whatever time is left.
        """
        if is_probable_prime(n):
            return FactorResult.failed(n, MethodCode.AUTO, FailureReason.PROBABLE_PRIME)

        stages = (
            (MethodCode.TRIANGULAR, lambda: triangular_factor(n)),
            (MethodCode.TRIAL, lambda: trial_division(n, self.settings.classical.trial_bound, deadline=deadline.slice(AUTO_TRIAL_SLICE))),
            (MethodCode.RHO, lambda: self.services[MethodCode.RHO].run(n, deadline.slice(AUTO_RHO_SLICE))),
            (MethodCode.ECM, lambda: self.services[MethodCode.ECM].run(n, deadline)),
        )
        for code, stage in stages:
            result = self._guarded(n, code, stage)
            if result.is_ok:
                LOGGER.debug(f"auto: {code.value} split {n} = {result.p} * {result.q}")
                return FactorResult.found(n, result.p, MethodCode.AUTO)
            if deadline.expired():
                return FactorResult.timed_out(n, MethodCode.AUTO)
            LOGGER.debug(f"auto: {code.value} gave up on {n} ({result.status}, {result.reason})")

        return FactorResult.failed(n, MethodCode.AUTO, FailureReason.NO_SPLIT)
