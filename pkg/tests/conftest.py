import pytest

from factorlab.core.dispatcher import FactorDispatcher
from factorlab.core.lib.deadline import Deadline
from factorlab.core.lib.settings import FactorlabSettings


@pytest.fixture
def settings():
    return FactorlabSettings()


@pytest.fixture
def dispatcher(settings):
    return FactorDispatcher(settings)


@pytest.fixture
def expired_deadline():
    return Deadline(0)


class FakeClock:
    """Monotonic clock that only moves when told to."""

    def __init__(self, start: float = 100.0):
        self.now = start

    def advance(self, seconds: float):
        self.now += seconds

    def __call__(self) -> float:
        return self.now


@pytest.fixture
def clock():
    return FakeClock()
