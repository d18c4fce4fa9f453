"""
Exact integer primitives. No floating point is used anywhere here.
"""
from typing import Tuple

from ..lib.exceptions import DomainError, InversionFailure


def isqrt(n: int) -> int:
    """
    Floor square root by Newton iteration: r*r <= n < (r+1)*(r+1).
    """
    if n < 0:
        raise DomainError(f"isqrt of negative number {n}")
    if n == 0:
        return 0

    # 2^ceil(bits/2) is never below the root, so the iteration only decreases.
    x = 1 << ((n.bit_length() + 1) // 2)
    while True:
        y = (x + n // x) // 2
        if y >= x:
            return x
        x = y


def is_perfect_square(n: int) -> Tuple[bool, int]:
    """
    Returns (True, root) when n is a square, (False, isqrt(n)) otherwise.
    """
    root = isqrt(n)
    return root * root == n, root


def ceil_sqrt(n: int) -> int:
    root = isqrt(n)
    return root if root * root == n else root + 1


def ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """
    Extended Euclid: (g, u, v) with g = gcd(a, b) > 0 and a*u + b*v = g.
    """
    if a == 0 and b == 0:
        raise DomainError("ext_gcd(0, 0) is undefined")

    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r != 0:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_u, u = u, old_u - quotient * u
        old_v, v = v, old_v - quotient * v

    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def mod_inverse(value: int, modulus: int) -> int:
    """
    Inverse of value modulo modulus. Raises InversionFailure carrying
    gcd(value, modulus) when no inverse exists.
    """
    g, u, _ = ext_gcd(value % modulus, modulus)
    if g != 1:
        raise InversionFailure(value, modulus, g)
    return u % modulus
