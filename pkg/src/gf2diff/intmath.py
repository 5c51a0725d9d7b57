"""Integer helpers: primality and factorization of group orders."""

import math
import random
from functools import lru_cache

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n):
    """Miller-Rabin; deterministic for n < 3.3e24 with the fixed witness set."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n, rng):
    if n % 2 == 0:
        return 2
    while True:
        c = rng.randrange(1, n)
        f = lambda v: (v * v + c) % n  # noqa: E731
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = f(x)
            y = f(f(y))
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


@lru_cache(maxsize=None)
def factorize(n):
    """Return the prime factorization of ``n`` as a sorted tuple of (p, e)."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    factors = {}
    # trial division catches everything for the orders 2^m - 1 met at desk scale
    for p in range(2, 1 << 14):
        if p * p > n:
            break
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    rng = random.Random(0)
    while stack:
        k = stack.pop()
        if is_probable_prime(k):
            factors[k] = factors.get(k, 0) + 1
            continue
        d = _pollard_rho(k, rng)
        stack.extend((d, k // d))
    return tuple(sorted(factors.items()))


def prime_divisors(n):
    return [p for p, _ in factorize(n)]
