import random
from typing import List

from .primitives import isqrt

# Deterministic for every n < 3.3 * 10^24, which covers n < 2^64.
_FIXED_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)

DEFAULT_ROUNDS = 20


def _is_strong_probable_prime(n: int, witness: int, d: int, s: int) -> bool:
    x = pow(witness, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_probable_prime(n: int, rounds: int = DEFAULT_ROUNDS) -> bool:
    """
    Miller-Rabin. Exact below 2^64 (fixed witness set); above that each of
    `rounds` random witnesses leaves a composite undetected with
    probability at most 1/4. Witnesses are drawn from a generator seeded
    with n, so the answer for a given n never changes between calls.
    """
    if rounds < 1:
        raise ValueError("rounds must be at least 1")
    if n < 2:
        return False
    for prime in _SMALL_PRIMES:
        if n == prime:
            return True
        if n % prime == 0:
            return False

    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    if n < 1 << 64:
        return all(_is_strong_probable_prime(n, w, d, s) for w in _FIXED_WITNESSES)

    rng = random.Random(n)
    witnesses = list(_FIXED_WITNESSES[:4]) + [rng.randrange(2, n - 1) for _ in range(rounds)]
    return all(_is_strong_probable_prime(n, w, d, s) for w in witnesses)


def primes_up_to(bound: int) -> List[int]:
    """Sieve of Eratosthenes."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(range(i * i, bound + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]

