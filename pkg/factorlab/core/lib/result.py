from typing import Any, Dict, Optional

from .methods import MethodCode


class FactorStatus:
    OK = 'ok'
    FAILED = 'failed'
    TIMEOUT = 'timeout'


class FailureReason:
    PRIME_INPUT = 'prime input'
    PROBABLE_PRIME = 'probable prime'
    BOUND_EXHAUSTED = 'bound exhausted'
    STEPS_EXHAUSTED = 'step budget exhausted'
    BOUND_TOO_LARGE = 'bound too large'
    BOUND_TOO_SMALL = 'bound too small'
    CYCLE_WITHOUT_SPLIT = 'cycle without split'
    CURVES_EXHAUSTED = 'all curves exhausted'
    NOT_TRIANGULAR = 'not triangular'
    TRIVIAL_COFACTOR = 'trivial cofactor'
    NOT_SQUARE = 'discriminant not a square'
    TRIVIAL_EIGENVALUES = 'eigenvalues trivial or non-integer'
    NO_ROOT = 'no root in search box'
    NO_SPLIT = 'no method found a split'


class FactorResult:
    """
    Outcome of one factorization attempt on n.

    When status is ok, p * q == n and 1 < p <= q < n; the constructor
    refuses anything else, so an ok result is always a verified split.
    """

    def __init__(
        self,
        n: int,
        method: MethodCode,
        status: str,
        p: Optional[int] = None,
        q: Optional[int] = None,
        elapsed: float = 0.0,
        reason: Optional[str] = None,
    ):
        if status == FactorStatus.OK:
            if p is None or q is None:
                raise ValueError("an ok result needs both factors")
            p, q = min(p, q), max(p, q)
            if p * q != n or not 1 < p <= q < n:
                raise ValueError(f"({p}, {q}) is not a nontrivial split of {n}")
        self.n = n
        self.method = method
        self.status = status
        self.p = p
        self.q = q
        self.elapsed = elapsed
        self.reason = reason

    @classmethod
    def found(cls, n: int, factor: int, method: MethodCode, elapsed: float = 0.0) -> 'FactorResult':
        return cls(n, method, FactorStatus.OK, p=factor, q=n // factor, elapsed=elapsed)

    @classmethod
    def failed(cls, n: int, method: MethodCode, reason: str, elapsed: float = 0.0) -> 'FactorResult':
        return cls(n, method, FactorStatus.FAILED, elapsed=elapsed, reason=reason)

    @classmethod
    def timed_out(cls, n: int, method: MethodCode, elapsed: float = 0.0) -> 'FactorResult':
        return cls(n, method, FactorStatus.TIMEOUT, elapsed=elapsed, reason='time budget exhausted')

    @property
    def is_ok(self) -> bool:
        return self.status == FactorStatus.OK

    @property
    def factors(self) -> tuple:
        return (self.p, self.q) if self.is_ok else ()

    def with_elapsed(self, elapsed: float) -> 'FactorResult':
        self.elapsed = elapsed
        return self

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'method': self.method.value,
            'status': self.status,
            'p': self.p,
            'q': self.q,
            'elapsed': self.elapsed,
            'reason': self.reason,
        }

    def __repr__(self):
        if self.is_ok:
            return f'FactorResult({self.method.value}: {self.n} = {self.p} * {self.q})'
        return f'FactorResult({self.method.value}: {self.status}, {self.reason})'
