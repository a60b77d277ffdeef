import logging
import threading
from math import gcd
from typing import Dict, List, Optional, Tuple

import numpy as np

from config import Config
from models.field import QuadraticField, norm
from models.residue import ResidueClass
from models.splitting import SplittingType
from services.splitting_service import splitting_type
from utils.errors import BudgetExceeded, FieldMismatch, NotCoprime
from utils.primes import factorize

logger = logging.getLogger(__name__)

# Upper bound on the number of entries in one block of the x*y table
_TABLE_BLOCK = 2_000_000


def _check_budget(d: int, cap: Optional[int]):
    if d < 1:
        raise ValueError(f"modulus must be positive, got {d}")
    cap = Config.ORACLE_CAP if cap is None else cap
    if d > cap:
        raise BudgetExceeded(f"d = {d} is above the enumeration cap {cap}")


def enumerate_residues(field: QuadraticField, d: int, cap: int = None) -> List[ResidueClass]:
    """All of Z_d|_K, ordered by (a, b)"""
    _check_budget(d, cap)
    if field.is_rational:
        return [ResidueClass(field, d, a, 0) for a in range(d)]
    return [ResidueClass(field, d, a, b) for a in range(d) for b in range(d)]


def is_unit(x: ResidueClass) -> bool:
    """Units of Z_d|_K are the classes whose norm is prime to d.

    In a principal ideal domain x is coprime to d exactly when x is
    invertible mod d, and that happens iff det(mult_matrix(x)) = norm(x)
    is invertible mod d. The zero ring (d = 1) has no units by convention.
    """
    if x.d == 1:
        return False
    return gcd(norm(x.lift()) % x.d, x.d) == 1


def _coordinate_arrays(field: QuadraticField, d: int) -> Tuple[np.ndarray, np.ndarray]:
    if field.is_rational:
        return np.arange(d, dtype=np.int64), np.zeros(d, dtype=np.int64)
    return (np.repeat(np.arange(d, dtype=np.int64), d),
            np.tile(np.arange(d, dtype=np.int64), d))


def _product_blocks(field: QuadraticField, d: int):
    """Yield (start, prod_a, prod_b) blocks of the full multiplication table"""
    A, B = _coordinate_arrays(field, d)
    size = len(A)
    rows = max(1, _TABLE_BLOCK // size)
    t, k = field.trace, field.shift
    for start in range(0, size, rows):
        xa = A[start:start + rows, None]
        xb = B[start:start + rows, None]
        prod_a = (xa * A + k * xb * B) % d
        prod_b = (xa * B + xb * A + t * xb * B) % d
        yield start, prod_a, prod_b


def inverse_search_mask(field: QuadraticField, d: int, cap: int = None) -> np.ndarray:
    """mask[i] is True when residue i (in enumerate_residues order) has an inverse.

    Searches the multiplication table directly; never consults the norm.
    """
    _check_budget(d, cap)
    A, _ = _coordinate_arrays(field, d)
    mask = np.zeros(len(A), dtype=bool)
    one = 1 % d
    for start, prod_a, prod_b in _product_blocks(field, d):
        found = ((prod_a == one) & (prod_b == 0)).any(axis=1)
        mask[start:start + len(found)] = found
    return mask


def phi_oracle(field: QuadraticField, d: int, cap: int = None) -> int:
    """phi_K(d) by counting residues that have a multiplicative inverse"""
    count = int(inverse_search_mask(field, d, cap).sum())
    logger.debug(f"Oracle phi_K({d}) over {field} = {count}")
    return count


def count_units(field: QuadraticField, d: int, cap: int = None) -> int:
    """phi_K(d) by applying is_unit to every residue"""
    if d == 1:
        _check_budget(d, cap)
        return 1
    return sum(1 for x in enumerate_residues(field, d, cap) if is_unit(x))


def has_zero_divisors(field: QuadraticField, d: int, cap: int = None) -> bool:
    """Whether some nonzero x, y in Z_d|_K have x*y = 0"""
    _check_budget(d, cap)
    if d == 1:
        return False
    for start, prod_a, prod_b in _product_blocks(field, d):
        zero = (prod_a == 0) & (prod_b == 0)
        # residue 0 sits at index 0 of both axes
        zero[:, 0] = False
        if start == 0:
            zero[0, :] = False
        if zero.any():
            return True
    return False


def local_phi(field: QuadraticField, p: int, a: int) -> int:
    """phi_K(p^a) from the splitting type of p"""
    if field.is_rational:
        return p ** a - p ** (a - 1)
    kind = splitting_type(field, p)
    if kind is SplittingType.INERT:
        return p ** (2 * a) - p ** (2 * a - 2)
    if kind is SplittingType.SPLIT:
        return (p ** a - p ** (a - 1)) ** 2
    return p ** (2 * a) - p ** (2 * a - 1)


class TotientEngine:
    """Memoized phi_K for one field; safe to share between scan threads"""

    def __init__(self, field: QuadraticField):
        self.field = field
        self.factor_cache: Dict[int, Tuple[Tuple[int, int], ...]] = {}
        self.phi_cache: Dict[int, int] = {}
        self._lock = threading.Lock()

    def factor(self, n: int) -> Tuple[Tuple[int, int], ...]:
        with self._lock:
            cached = self.factor_cache.get(n)
        if cached is not None:
            return cached
        result = factorize(n)
        with self._lock:
            self.factor_cache[n] = result
        return result

    def phi(self, n: int) -> int:
        """Classical Euler totient, sharing the factor cache"""
        result = 1
        for p, a in self.factor(n):
            result *= (p - 1) * p ** (a - 1)
        return result

    def phi_k(self, d: int) -> int:
        """phi_K(d) as the product of its prime-power local values"""
        if d < 1:
            raise ValueError(f"phi_K is defined for d >= 1, got {d}")
        with self._lock:
            cached = self.phi_cache.get(d)
        if cached is not None:
            return cached

        result = 1
        for p, a in self.factor(d):
            result *= local_phi(self.field, p, a)

        with self._lock:
            self.phi_cache[d] = result
        return result

    def cache_sizes(self) -> Dict[str, int]:
        with self._lock:
            return {'factors': len(self.factor_cache), 'phi': len(self.phi_cache)}


def phi_fast(engine: TotientEngine, d: int) -> int:
    return engine.phi_k(d)


def crt_map(field: QuadraticField, m: int, n: int,
            x: ResidueClass) -> Tuple[ResidueClass, ResidueClass]:
    """Reduce a class mod mn to its pair of classes mod m and mod n"""
    if m < 2 or n < 2:
        raise ValueError(f"moduli must be at least 2, got ({m}, {n})")
    if gcd(m, n) != 1:
        raise NotCoprime(f"{m} and {n} are not coprime")
    if x.field != field or x.d != m * n:
        raise FieldMismatch(f"expected a residue mod {m * n} over {field}")
    return (ResidueClass.of(field, m, x.a, x.b), ResidueClass.of(field, n, x.a, x.b))


def _crt_coordinate(r: int, s: int, m: int, n: int) -> int:
    return (r + m * ((s - r) * pow(m, -1, n) % n)) % (m * n)


def crt_lift(field: QuadraticField, m: int, n: int,
             pair: Tuple[ResidueClass, ResidueClass]) -> ResidueClass:
    """Inverse of crt_map"""
    if gcd(m, n) != 1:
        raise NotCoprime(f"{m} and {n} are not coprime")
    x_m, x_n = pair
    if x_m.d != m or x_n.d != n:
        raise FieldMismatch(f"expected residues mod {m} and mod {n}")
    return ResidueClass(field, m * n,
                        _crt_coordinate(x_m.a, x_n.a, m, n),
                        _crt_coordinate(x_m.b, x_n.b, m, n))
