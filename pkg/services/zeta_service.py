"""
Exact rational brackets for zeta(s) and finite Euler products.

zeta(s) lies between the partial sum S_N = sum_{k <= N} k^-s and
S_N + 1/((s - 1) N^(s - 1)), the tail being bounded by the integral of x^-s.
"""
import logging
from math import lcm
from typing import Iterable, Tuple

from config import Config
from models.rational import RationalValue
from models.report import ZetaBound
from utils.errors import BudgetExceeded
from utils.primes import factorize

logger = logging.getLogger(__name__)


def tail_bound(s: int, terms: int) -> RationalValue:
    return RationalValue(1, (s - 1) * terms ** (s - 1))


def terms_for_tolerance(s: int, tol: RationalValue) -> int:
    """Least N with 1/((s - 1) N^(s - 1)) <= tol"""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    # least N with N^(s-1) >= ceil(den / ((s-1) num)), in integers only
    need = -(-tol.den // ((s - 1) * tol.num))
    high = 1
    while high ** (s - 1) < need:
        high *= 2
    low = high // 2 + 1 if high > 1 else 1
    while low < high:
        middle = (low + high) // 2
        if middle ** (s - 1) >= need:
            high = middle
        else:
            low = middle + 1
    return low


def partial_sum(s: int, terms: int) -> RationalValue:
    """sum_{k <= terms} k^-s over a common denominator"""
    common = lcm(*range(1, terms + 1)) ** s
    numerator = sum(common // k ** s for k in range(1, terms + 1))
    return RationalValue(numerator, common)


def zeta_bounds(s: int, tol: RationalValue) -> ZetaBound:
    if s < 2:
        raise ValueError(f"zeta bounds need s >= 2, got {s}")
    terms = terms_for_tolerance(s, tol)
    if terms > Config.ZETA_TERMS_CAP:
        raise BudgetExceeded(f"tolerance {tol} needs {terms} terms, "
                             f"above the cap {Config.ZETA_TERMS_CAP}")
    lower = partial_sum(s, terms)
    upper = lower + tail_bound(s, terms)
    logger.info(f"zeta({s}) bracketed with {terms} terms")
    return ZetaBound(s, lower, upper, terms)


def euler_factor_bound(primes: Iterable[int], n: int) -> RationalValue:
    """prod over the given primes of p^n/(p^n - 1), i.e. 1/(1 - p^-n)"""
    result = RationalValue(1)
    for p in primes:
        result = result * RationalValue(p ** n, p ** n - 1)
    return result


def lehmer_ratio_identity(d: int) -> Tuple[RationalValue, RationalValue]:
    """Both sides of (d - 1)/phi(d) = prod_{p | d} p/(p - 1) - 1/phi(d)"""
    if d < 2:
        raise ValueError(f"expected d >= 2, got {d}")
    factors = factorize(d)
    phi = 1
    for p, a in factors:
        phi *= (p - 1) * p ** (a - 1)
    product = RationalValue(1)
    for p, _ in factors:
        product = product * RationalValue(p, p - 1)
    return RationalValue(d - 1, phi), product - RationalValue(1, phi)
