from ..base import BaseFactorService
from ..lib.deadline import Deadline
from ..lib.exceptions import DomainError, SpecializationError
from ..lib.log import LOGGER
from ..lib.methods import MethodCode
from ..lib.result import FactorResult
from .decomposition import enumerate_specializations, solve_decomposition
from .diagonalization import diagonalization_factor, trace_sweep
from .matrix import matrix_from_modulus

DEFAULT_FIRST_ROW = (1, 0)


class MdpvService(BaseFactorService):
    """
    Matrix decomposition search: diagonalize N = matrix_from_modulus(n, a, b),
    try every specialization in the configured box, then sweep the traces
    of companion matrices of n.
    """
    code = MethodCode.MDPV

    def _first_row(self):
        mdpv = self.settings.mdpv
        if mdpv.matrix_a is None and mdpv.matrix_b is None:
            return DEFAULT_FIRST_ROW
        return int(mdpv.matrix_a or 0), int(mdpv.matrix_b or 0)

    def factor(self, n: int, deadline: Deadline) -> FactorResult:
        if n < 4:
            raise DomainError(f"mdpv needs n >= 4, got {n}")
        a, b = self._first_row()
        matrix = matrix_from_modulus(n, a, b)
        LOGGER.debug(f"MDpv on {n} with N = {matrix}")

        result = diagonalization_factor(matrix)
        if result.is_ok:
            return result

        outcomes = {kind: 0 for kind in SpecializationError.MESSAGES}
        for specialization in enumerate_specializations(self.settings.mdpv.spec_box):
            deadline.check()
            try:
                solution = solve_decomposition(matrix, specialization)
            except SpecializationError as error:
                outcomes[error.kind] += 1
                continue
            LOGGER.debug(f"Specialization {specialization} splits {n}: P = {solution.P}, Q = {solution.Q}")
            return FactorResult.found(n, solution.factors[0], self.code)
        LOGGER.debug(f"No specialization in box {self.settings.mdpv.spec_box} split {n}: {outcomes}")

        return trace_sweep(n, self.settings.mdpv.trace_window, deadline=deadline)
