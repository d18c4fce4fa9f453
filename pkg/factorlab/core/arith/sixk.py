from dataclasses import dataclass

from ..lib.exceptions import DomainError, SmallPrimeError, UnsupportedInputError


@dataclass(frozen=True)
class SixKForm:
    """
    A prime p >= 5 written as p = 6x + sign with sign in {+1, -1}.
    """
    x: int
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DomainError(f"sign must be +1 or -1, got {self.sign}")
        if self.x < 0:
            raise DomainError(f"x must be nonnegative, got {self.x}")

    def reconstruct(self) -> int:
        return 6 * self.x + self.sign


def sixk_form(p: int) -> SixKForm:
    """
    Every prime above 3 is 6x - 1 or 6x + 1. Only gcd(p, 6) = 1 is
    checked, so this also decomposes composites coprime to 6.
    """
    if p in (2, 3):
        raise SmallPrimeError(p)
    if p % 2 == 0 or p % 3 == 0:
        raise UnsupportedInputError(f"{p} is divisible by 2 or 3", reason='divisible by 2 or 3')
    if p < 5:
        raise DomainError(f"{p} is below 5")

    if p % 6 == 1:
        return SixKForm(x=p // 6, sign=1)
    return SixKForm(x=(p + 1) // 6, sign=-1)
