from .primitives import isqrt, is_perfect_square, ceil_sqrt, ext_gcd, mod_inverse
from .primality import is_probable_prime, primes_up_to
from .sixk import SixKForm, sixk_form

__all__ = [
    'isqrt',
    'is_perfect_square',
    'ceil_sqrt',
    'ext_gcd',
    'mod_inverse',
    'is_probable_prime',
    'primes_up_to',
    'SixKForm',
    'sixk_form',
]
