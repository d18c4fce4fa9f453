import time
import functools
from typing import Optional

from .lib.deadline import Deadline
from .lib.exceptions import DeadlineExceeded
from .lib.methods import MethodCode
from .lib.result import FactorResult
from .lib.settings import FactorlabSettings


def elapsed_ms(start: float) -> float:
    return (time.perf_counter() - start) * 1000.0


def timed(method_code: MethodCode):
    """
    Stamps the elapsed time on the FactorResult a method returns and turns
    an exhausted deadline into a timeout result.
    """
    def decorator(func):
        @functools.wraps(func)
        def wrapper(n, *args, **kwargs):
            start = time.perf_counter()
            try:
                result = func(n, *args, **kwargs)
            except DeadlineExceeded:
                result = FactorResult.timed_out(n, method_code)
            return result.with_elapsed(elapsed_ms(start))
        return wrapper
    return decorator


def ensure_deadline(deadline: Optional[Deadline]) -> Deadline:
    return Deadline.unbounded() if deadline is None else deadline


class BaseFactorService:
    """
    A factorization method bound to a settings object.
    Subclasses set `code` and implement `factor`.
    """
    code: MethodCode = None

    def __init__(self, settings: Optional[FactorlabSettings] = None):
        self.settings = settings if settings is not None else FactorlabSettings()

    def factor(self, n: int, deadline: Deadline) -> FactorResult:
        raise NotImplementedError

    def run(self, n: int, deadline: Optional[Deadline] = None) -> FactorResult:
        start = time.perf_counter()
        try:
            result = self.factor(n, ensure_deadline(deadline))
        except DeadlineExceeded:
            result = FactorResult.timed_out(n, self.code)
        return result.with_elapsed(elapsed_ms(start))
