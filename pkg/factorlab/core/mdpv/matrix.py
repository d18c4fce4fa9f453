from dataclasses import dataclass
from math import gcd
from typing import Tuple

from ..arith import ext_gcd
from ..lib.exceptions import DomainError, NotCoprimeError


@dataclass(frozen=True)
class Matrix2:
    """
    Integer 2x2 matrix [[a, b], [c, d]], row-major.
    """
    a: int
    b: int
    c: int
    d: int

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def trace(self) -> int:
        return self.a + self.d

    def rows(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        return (self.a, self.b), (self.c, self.d)

    def __matmul__(self, other: 'Matrix2') -> 'Matrix2':
        return Matrix2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __str__(self):
        return f'[[{self.a}, {self.b}], [{self.c}, {self.d}]]'


def matrix_from_modulus(n: int, a: int, b: int) -> Matrix2:
    """
    Completes the first row (a, b) to a matrix of determinant n using the
    Bezout coefficients of a and b.
    """
    if a == 0 and b == 0:
        raise DomainError("the first row of a decomposition matrix cannot be (0, 0)")
    g = gcd(a, b)
    if g != 1:
        raise NotCoprimeError(a, b, g)
    _, u, v = ext_gcd(a, b)
    return Matrix2(a, b, -v * n, u * n)


def companion_matrix(n: int, trace: int) -> Matrix2:
    """
    [[t, -n], [1, 0]]: determinant n, trace t, characteristic polynomial x^2 - t*x + n.
    """
    return Matrix2(trace, -n, 1, 0)
