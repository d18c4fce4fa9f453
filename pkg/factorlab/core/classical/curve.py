from math import gcd
from typing import Optional, Tuple

from ..arith import mod_inverse
from ..lib.exceptions import DomainError, InversionFailure

# None stands for the point at infinity.
Point = Optional[Tuple[int, int]]


class AffineCurve:
    """
    Short Weierstrass curve y^2 = x^3 + a*x + b over Z/nZ, used formally
    when n is composite. Every slope needs an inverse mod n; when one does
    not exist, mod_inverse raises InversionFailure carrying gcd(denominator, n).
    """

    def __init__(self, a: int, b: int, n: int):
        if n < 2:
            raise DomainError(f"modulus must be at least 2, got {n}")
        self.a = a % n
        self.b = b % n
        self.n = n

        discriminant = (4 * self.a ** 3 + 27 * self.b ** 2) % n
        divisor = gcd(discriminant, n)
        if divisor == n:
            raise DomainError(f"singular curve: 4a^3 + 27b^2 = 0 mod {n}")
        if divisor > 1:
            raise InversionFailure(discriminant, n, divisor)

    def contains(self, point: Point) -> bool:
        if point is None:
            return True
        x, y = point
        return (y * y - (x * x * x + self.a * x + self.b)) % self.n == 0

    def negate(self, point: Point) -> Point:
        if point is None:
            return None
        x, y = point
        return x, (-y) % self.n

    def double(self, point: Point) -> Point:
        if point is None:
            return None
        x, y = point
        n = self.n
        if y % n == 0:
            return None
        slope = (3 * x * x + self.a) * mod_inverse(2 * y, n) % n
        x3 = (slope * slope - 2 * x) % n
        y3 = (slope * (x - x3) - y) % n
        return x3, y3

    def add(self, first: Point, second: Point) -> Point:
        if first is None:
            return second
        if second is None:
            return first
        x1, y1 = first
        x2, y2 = second
        n = self.n
        if (x1 - x2) % n == 0:
            if (y1 + y2) % n == 0:
                return None
            if (y1 - y2) % n == 0:
                return self.double(first)
            # Same x, unrelated y: y1 + y2 vanishes modulo one factor only.
            mod_inverse(y1 + y2, n)
        slope = (y2 - y1) * mod_inverse(x2 - x1, n) % n
        x3 = (slope * slope - x1 - x2) % n
        y3 = (slope * (x1 - x3) - y1) % n
        return x3, y3

    def multiply(self, k: int, point: Point) -> Point:
        """Left-to-right double-and-add."""
        if k < 0:
            return self.multiply(-k, self.negate(point))
        result = None
        for bit in bin(k)[2:]:
            result = self.double(result)
            if bit == '1':
                result = self.add(result, point)
        return result

    def __repr__(self):
        return f'AffineCurve(y^2 = x^3 + {self.a}x + {self.b} mod {self.n})'
