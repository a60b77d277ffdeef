"""
Primality, factorization and the classical arithmetic functions.

Small inputs are answered from a smallest-prime-factor sieve; anything past
the sieve falls back to Miller-Rabin and trial division.
"""
import logging
import threading
from typing import Dict, List, Tuple

import numpy as np

from config import Config

logger = logging.getLogger(__name__)

# Witness set that makes Miller-Rabin deterministic for n < 2^64
_I64_WITNESSES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_sieve = None
_sieve_lock = threading.Lock()


def smallest_prime_factors(limit: int) -> np.ndarray:
    """spf[k] is the least prime dividing k, for 2 <= k <= limit"""
    spf = np.zeros(limit + 1, dtype=np.int64)
    if limit >= 1:
        spf[1] = 1
    for p in range(2, int(limit ** 0.5) + 1):
        if spf[p] == 0:
            block = spf[p * p::p]
            block[block == 0] = p
    rest = np.nonzero(spf == 0)[0]
    spf[rest[rest >= 2]] = rest[rest >= 2]
    return spf


def _get_sieve() -> np.ndarray:
    global _sieve
    if _sieve is None:
        with _sieve_lock:
            if _sieve is None:
                logger.info(f"Building prime sieve up to {Config.SIEVE_LIMIT}")
                _sieve = smallest_prime_factors(Config.SIEVE_LIMIT)
    return _sieve


def _check_composite(n: int, s: int, d: int, a: int) -> bool:
    """True when a witnesses the compositeness of n, with n - 1 = d * 2^s"""
    a %= n
    if a == 0:
        return False
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(1, s):
        x = x * x % n
        if x == n - 1:
            return False
        if x == 1:
            return True
    return True


def is_prime_miller_rabin(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while not d & 1:
        d >>= 1
        s += 1
    return not any(_check_composite(n, s, d, a) for a in _I64_WITNESSES)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    sieve = _get_sieve()
    if n < len(sieve):
        return int(sieve[n]) == n
    if n >= 2 ** 64:
        logger.warning(f"Primality of {n} is beyond the deterministic Miller-Rabin range")
    return is_prime_miller_rabin(n)


def factorize(n: int) -> Tuple[Tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ascending (p, a) pairs"""
    if n < 1:
        raise ValueError(f"cannot factor {n}")

    factors: Dict[int, int] = {}
    sieve = _get_sieve()

    if n >= len(sieve):
        logger.debug(f"Trial division fallback for {n}")
        p = 2
        while p * p <= n and n >= len(sieve):
            while n % p == 0:
                factors[p] = factors.get(p, 0) + 1
                n //= p
            p += 1 if p == 2 else 2
        if n >= len(sieve):
            factors[n] = factors.get(n, 0) + 1
            n = 1

    while n > 1:
        p = int(sieve[n])
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p

    return tuple(sorted(factors.items()))


def is_squarefree(n: int) -> bool:
    return all(a == 1 for _, a in factorize(n))


def euler_phi(n: int) -> int:
    """Classical Euler totient"""
    result = 1
    for p, a in factorize(n):
        result *= (p - 1) * p ** (a - 1)
    return result


def primes_up_to(limit: int) -> List[int]:
    if limit < 2:
        return []
    sieve = _get_sieve()
    if limit < len(sieve):
        candidates = np.arange(limit + 1)
        return [int(p) for p in candidates[2:][sieve[2:limit + 1] == candidates[2:]]]
    return [p for p in range(2, limit + 1) if is_prime(p)]
