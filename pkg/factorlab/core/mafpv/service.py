from ..arith import isqrt
from ..base import BaseFactorService
from ..lib.deadline import Deadline
from ..lib.exceptions import AlgebraicDependenceError, BoundViolationError, ResourceBudgetError
from ..lib.log import LOGGER
from ..lib.methods import MethodCode
from ..lib.result import FactorResult, FailureReason
from .coppersmith import smallest_valid_modulus, coppersmith_bivariate
from .forms import candidate_forms, roots_to_factors
from .small_roots import SmallRootProblem, brute_force_roots


def root_box(n: int):
    """
    Bounds covering every split of n into 6x +/- 1 factors with x on the
    smaller side: x <= (sqrt(n) + 1) / 6 and y <= (n / 5 + 1) / 6.
    """
    return (isqrt(n) + 1) // 6 + 1, (n // 5 + 1) // 6 + 1


class _MafpvService(BaseFactorService):
    def _small_factor(self, n: int):
        for prime in (2, 3):
            if n % prime == 0:
                return FactorResult.found(n, prime, self.code)
        return None

    def _roots(self, problem: SmallRootProblem, deadline: Deadline):
        raise NotImplementedError

    def factor(self, n: int, deadline: Deadline) -> FactorResult:
        shortcut = self._small_factor(n)
        if shortcut is not None:
            return shortcut
        X, Y = root_box(n)
        for form in candidate_forms(n):
            problem = self._problem(form, n, X, Y)
            try:
                roots = self._roots(problem, deadline)
            except ResourceBudgetError as error:
                LOGGER.debug(f"{self.code.value} skipped {n}: {error}")
                return FactorResult.failed(n, self.code, FailureReason.BOUND_TOO_LARGE)
            except BoundViolationError as error:
                LOGGER.debug(f"{self.code.value} skipped {n}: {error}")
                return FactorResult.failed(n, self.code, FailureReason.BOUND_TOO_SMALL)
            for x, y in roots:
                p, q = roots_to_factors(form, x, y)
                if 1 < p < n:
                    LOGGER.debug(f"Root ({x}, {y}) of {form} gives {n} = {p} * {q}")
                    return FactorResult.found(n, p, self.code)
        return FactorResult.failed(n, self.code, FailureReason.NO_ROOT)

    def _problem(self, form, n, X, Y) -> SmallRootProblem:
        return SmallRootProblem(form, n, X, Y)


class MafpvBruteService(_MafpvService):
    code = MethodCode.MAFPV_BRUTE

    def _roots(self, problem: SmallRootProblem, deadline: Deadline):
        return brute_force_roots(problem, self.settings.mafpv.brute_force_guard, deadline=deadline)


class MafpvLatticeService(_MafpvService):
    code = MethodCode.MAFPV_LATTICE

    def _problem(self, form, n, X, Y) -> SmallRootProblem:
        modulus = self.settings.mafpv.modulus
        modulus = int(modulus) if modulus is not None else smallest_valid_modulus(n, X, Y)
        return SmallRootProblem(form, n, X, Y, M=modulus)

    def _roots(self, problem: SmallRootProblem, deadline: Deadline):
        lattice_param = self.settings.mafpv.lattice_param
        try:
            return coppersmith_bivariate(problem, lattice_param, self.settings.lattice.delta, deadline=deadline)
        except AlgebraicDependenceError:
            LOGGER.warning(f"Short vectors dependent at lattice parameter {lattice_param} for {problem.n}, retrying with {lattice_param + 1}")
            try:
                return coppersmith_bivariate(problem, lattice_param + 1, self.settings.lattice.delta, deadline=deadline)
            except AlgebraicDependenceError:
                return []
