from dataclasses import dataclass
from math import gcd
from typing import Dict, List, Tuple

from ..lib.exceptions import DomainError, UnsupportedInputError

SIGNS = (-1, 1)


@dataclass(frozen=True)
class FormSpec:
    """
    One of the four bivariate forms of a modulus whose two factors are
    6x + s1 and 6y + s2:

        n(x, y) = (6x + s1)(6y + s2) = 36xy + 6*s2*x + 6*s1*y + s1*s2
    """
    s1: int
    s2: int

    def __post_init__(self):
        if self.s1 not in SIGNS or self.s2 not in SIGNS:
            raise DomainError(f"form signs must be +1 or -1, got ({self.s1}, {self.s2})")

    @property
    def c(self) -> int:
        return self.s1 * self.s2

    def coefficients(self) -> Dict[Tuple[int, int], int]:
        """
        Coefficients keyed by (power of x, power of y).
        """
        return {(1, 1): 36, (1, 0): 6 * self.s2, (0, 1): 6 * self.s1, (0, 0): self.c}

    def evaluate(self, x: int, y: int) -> int:
        return 36 * x * y + 6 * self.s2 * x + 6 * self.s1 * y + self.c

    @property
    def label(self) -> str:
        if self.s1 == self.s2:
            return f"36xy {'+' if self.s1 > 0 else '-'} 6(x + y) + 1"
        return f"36xy {'+' if self.s2 > 0 else '-'} 6(x - y) - 1"

    def __str__(self):
        return self.label


FORMS = (FormSpec(-1, -1), FormSpec(1, 1), FormSpec(1, -1), FormSpec(-1, 1))


def candidate_forms(n: int) -> List[FormSpec]:
    """
    The forms whose constant term matches n mod 6: c = +1 when n = 1 (mod 6),
    c = -1 when n = 5 (mod 6).
    """
    if gcd(n, 6) != 1:
        raise UnsupportedInputError(f"{n} shares a factor with 6; its factors are not all of the form 6x +/- 1", reason='not coprime to 6')
    constant = 1 if n % 6 == 1 else -1
    return [form for form in FORMS if form.c == constant]


def roots_to_factors(form: FormSpec, x: int, y: int) -> Tuple[int, int]:
    if x < 1 or y < 1:
        raise DomainError(f"roots must be positive, got ({x}, {y})")
    return 6 * x + form.s1, 6 * y + form.s2
