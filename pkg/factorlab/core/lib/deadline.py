import time
from typing import Optional

from .exceptions import DeadlineExceeded


class Deadline:
    """
    Cooperative time budget polled by the iterative methods.
    A `timeout_ms` of None never expires.
    """

    def __init__(self, timeout_ms: Optional[int] = None, clock=time.monotonic):
        self._clock = clock
        self.timeout_ms = timeout_ms
        self._expires_at = None if timeout_ms is None else clock() + timeout_ms / 1000.0

    @classmethod
    def unbounded(cls) -> 'Deadline':
        return cls(None)

    def expired(self) -> bool:
        return self._expires_at is not None and self._clock() >= self._expires_at

    def remaining_ms(self) -> Optional[int]:
        if self._expires_at is None:
            return None
        return max(0, int((self._expires_at - self._clock()) * 1000))

    def check(self):
        if self.expired():
            raise DeadlineExceeded(f"time budget of {self.timeout_ms} ms exhausted")

    def slice(self, fraction: float) -> 'Deadline':
        """Child deadline covering `fraction` of the time that is left."""
        remaining = self.remaining_ms()
        if remaining is None:
            return Deadline(None, self._clock)
        return Deadline(int(remaining * fraction), self._clock)
