import logging

import numpy as np

from models.field import QuadraticField
from models.splitting import SplittingType
from utils.errors import DegreeOne, NotPrime
from utils.primes import is_prime

logger = logging.getLogger(__name__)


def legendre_symbol(a: int, p: int) -> int:
    """(a/p) for an odd prime p via Euler's criterion"""
    residue = pow(a % p, (p - 1) // 2, p)
    if residue == p - 1:
        return -1
    return residue


def splitting_type(field: QuadraticField, p: int) -> SplittingType:
    if field.is_rational:
        raise DegreeOne("primes do not split over Q")
    if not is_prime(p):
        raise NotPrime(f"{p} is not a prime")

    if field.disc % p == 0:
        return SplittingType.RAMIFIED
    if p == 2:
        # 2 unramified forces m = 1 mod 4
        return SplittingType.SPLIT if field.m % 8 == 1 else SplittingType.INERT
    if legendre_symbol(field.m, p) == 1:
        return SplittingType.SPLIT
    return SplittingType.INERT


def is_irreducible_nat(field: QuadraticField, d: int) -> bool:
    """Whether the natural number d >= 2 is an irreducible element of O_K"""
    if d < 2:
        return False
    if not is_prime(d):
        return False
    if field.is_rational:
        return True
    return splitting_type(field, d) is SplittingType.INERT


def min_poly_root_count(field: QuadraticField, p: int) -> int:
    """Roots mod p of x^2 - t*x - k, the minimal polynomial of w.

    Two roots means split, one (double) root ramified, none inert.
    """
    if field.is_rational:
        raise DegreeOne("Q has no quadratic generator")
    x = np.arange(p, dtype=np.int64)
    values = (x * x - field.trace * x - field.shift) % p
    return int(np.count_nonzero(values == 0))


def splitting_from_root_count(count: int) -> SplittingType:
    return {0: SplittingType.INERT, 1: SplittingType.RAMIFIED, 2: SplittingType.SPLIT}[count]
