from typing import Any, Dict, Optional


class FactorlabError(Exception):
    """
    Base class for every error raised by factorlab.
    """


class DomainError(FactorlabError, ValueError):
    pass


class UnsupportedInputError(FactorlabError, ValueError):
    def __init__(self, message: str, reason: str = 'unsupported input'):
        super().__init__(message)
        self.reason = reason


class SmallPrimeError(UnsupportedInputError):
    """
    Raised for the primes 2 and 3, which have no 6x +/- 1 form.
    """

    def __init__(self, prime: int):
        super().__init__(f"{prime} is a prime below 5 and has no 6x +/- 1 form", reason='small prime')
        self.prime = prime


class NotCoprimeError(DomainError):
    def __init__(self, a: int, b: int, gcd: int):
        super().__init__(f"entries not coprime: gcd({a}, {b}) = {gcd}")
        self.gcd = gcd


class SpecializationError(FactorlabError):
    INFEASIBLE = 'infeasible'
    TRIVIAL = 'trivial'
    DEGENERATE = 'degenerate'

    MESSAGES = {
        INFEASIBLE: 'specialization infeasible',
        TRIVIAL: 'trivial split',
        DEGENERATE: 'degenerate specialization',
    }

    def __init__(self, kind: str, detail: str = ''):
        message = self.MESSAGES[kind]
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)
        self.kind = kind


class ResourceBudgetError(FactorlabError):
    def __init__(self, message: str, progress: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.progress = {} if progress is None else progress


class BoundViolationError(FactorlabError, ValueError):
    pass


class AlgebraicDependenceError(FactorlabError):
    def __init__(self, message: str = 'algebraically dependent short vectors'):
        super().__init__(message)


class InversionFailure(FactorlabError):
    """
    A residue had no inverse modulo n; `gcd` is the witness gcd(value, n).
    """

    def __init__(self, value: int, modulus: int, gcd: int):
        super().__init__(f"{value} is not invertible modulo {modulus} (gcd {gcd})")
        self.value = value
        self.modulus = modulus
        self.gcd = gcd


class DeadlineExceeded(FactorlabError):
    pass
