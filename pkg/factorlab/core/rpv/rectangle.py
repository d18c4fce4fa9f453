from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from ..arith import sixk_form
from ..lib.exceptions import DomainError

# Both integrands are the constant 6; the antiderivative is 6t + C.
INTEGRAND = 6


def _antiderivative(t: Fraction) -> Fraction:
    return INTEGRAND * t


def _definite_integral(lower: Fraction, upper: int) -> Fraction:
    return _antiderivative(Fraction(upper)) - _antiderivative(lower)


@dataclass(frozen=True)
class RectangleWitness:
    """
    Upper bounds (alpha, beta) of the double integral of 6 * 6 over
    [-sign_alpha/6, alpha] x [-sign_beta/6, beta]. The lower bounds are
    -1/6 for sign +1 and +1/6 for sign -1, so each side integrates to
    6 * bound + sign.
    """
    alpha: int
    beta: int
    sign_alpha: int
    sign_beta: int

    def __post_init__(self):
        if self.sign_alpha not in (1, -1) or self.sign_beta not in (1, -1):
            raise DomainError("rectangle signs must be +1 or -1")

    @property
    def lower_bounds(self) -> Tuple[Fraction, Fraction]:
        return Fraction(-self.sign_alpha, 6), Fraction(-self.sign_beta, 6)

    def sides(self) -> Tuple[int, int]:
        lower_alpha, lower_beta = self.lower_bounds
        width = _definite_integral(lower_alpha, self.alpha)
        height = _definite_integral(lower_beta, self.beta)
        return int(width), int(height)

    def area(self) -> int:
        width, height = self.sides()
        return width * height

    @property
    def perimeter(self) -> int:
        width, height = self.sides()
        return 2 * (width + height)


def rectangle_integral(witness: RectangleWitness) -> int:
    """
    Exact value of the double integral; by Fubini it splits into the
    product of two one-dimensional integrals.
    """
    lower_alpha, lower_beta = witness.lower_bounds
    value = _definite_integral(lower_alpha, witness.alpha) * _definite_integral(lower_beta, witness.beta)
    assert value.denominator == 1
    return value.numerator


def rectangle_verify(witness: RectangleWitness, n: int) -> bool:
    if witness.alpha < 1 or witness.beta < 1:
        raise DomainError("rectangle bounds alpha and beta must be at least 1")
    return rectangle_integral(witness) == n


def rectangle_witness(p: int, q: int) -> RectangleWitness:
    """Witness whose rectangle has sides p and q (both coprime to 6)."""
    first = sixk_form(p)
    second = sixk_form(q)
    return RectangleWitness(alpha=first.x, beta=second.x, sign_alpha=first.sign, sign_beta=second.sign)
