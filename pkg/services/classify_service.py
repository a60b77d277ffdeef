import logging
from typing import Dict, List, Optional

from config import Config
from models.classification import ClassificationRecord
from models.field import QuadraticField
from models.splitting import SplittingType
from services.splitting_service import is_irreducible_nat, splitting_type
from services.totient_service import TotientEngine
from utils.errors import BudgetExceeded, InternalInconsistency, NotSquarefree
from utils.parallel import scan_range
from utils.primes import is_prime

logger = logging.getLogger(__name__)


def _require_natural(d: int, least: int):
    if d < least:
        raise ValueError(f"expected d >= {least}, got {d}")


class ClassificationService:
    """Number predicates over one field, sharing a totient cache"""

    def __init__(self, field: QuadraticField, engine: Optional[TotientEngine] = None):
        self.field = field
        self.engine = engine or TotientEngine(field)
        self.n = field.degree

    def prime_product(self, d: int) -> int:
        """prod over p | d of (p^n - 1)"""
        result = 1
        for p, _ in self.engine.factor(d):
            result *= p ** self.n - 1
        return result

    def is_squarefree(self, d: int) -> bool:
        return all(a == 1 for _, a in self.engine.factor(d))

    def divides(self, d: int) -> bool:
        """phi_K(d) | d^n - 1"""
        return (d ** self.n - 1) % self.engine.phi_k(d) == 0

    def is_realizable(self, d: int) -> bool:
        """Every rational prime divisor of d stays irreducible in O_K"""
        _require_natural(d, 1)
        if self.field.is_rational:
            return True
        return all(splitting_type(self.field, p) is SplittingType.INERT
                   for p, _ in self.engine.factor(d))

    def check_prop12(self, d: int) -> bool:
        """realizable(d) <=> phi_K(d) = prod_{p | d}(p^n - 1), for squarefree d"""
        _require_natural(d, 1)
        if not self.is_squarefree(d):
            raise NotSquarefree(f"{d} is not squarefree")
        return self.is_realizable(d) == (self.engine.phi_k(d) == self.prime_product(d))

    def is_normal(self, d: int) -> bool:
        """phi_K(d)/phi(d) divides (d^n - 1)/(d - 1)"""
        _require_natural(d, 2)
        phi_k = self.engine.phi_k(d)
        phi = self.engine.phi(d)
        if phi_k % phi != 0:
            logger.error(f"phi({d}) = {phi} does not divide phi_K({d}) = {phi_k} over {self.field}")
            raise InternalInconsistency(f"phi({d}) does not divide phi_K({d})")
        top = d ** self.n - 1
        if top % (d - 1) != 0:
            raise InternalInconsistency(f"{d - 1} does not divide {top}")
        return (top // (d - 1)) % (phi_k // phi) == 0

    def is_irreducible(self, d: int) -> bool:
        return is_irreducible_nat(self.field, d)

    def is_lehmer(self, d: int) -> bool:
        """Divisibility and irreducibility hold or fail together"""
        _require_natural(d, 2)
        return self.divides(d) == self.is_irreducible(d)

    def is_strongly_lehmer(self, d: int) -> bool:
        """Divisibility, irreducibility in O_K and primality in Z are pairwise equivalent"""
        _require_natural(d, 2)
        return self.is_lehmer(d) and is_prime(d) == self.is_irreducible(d)

    def classify(self, d: int) -> ClassificationRecord:
        _require_natural(d, 2)
        irreducible = self.is_irreducible(d)
        divides = self.divides(d)
        lehmer = divides == irreducible
        prime = is_prime(d)
        splitting = None
        if prime and not self.field.is_rational:
            splitting = splitting_type(self.field, d)

        return ClassificationRecord(
            d=d,
            squarefree=self.is_squarefree(d),
            phi=self.engine.phi(d),
            phiK=self.engine.phi_k(d),
            splitting=splitting,
            irreducible=irreducible,
            divides=divides,
            realizable=self.is_realizable(d),
            normal=self.is_normal(d),
            lehmer=lehmer,
            strongly_lehmer=lehmer and prime == irreducible,
        )

    def classify_range(self, d_max: int, squarefree_only: bool = False,
                       threads: int = 1) -> List[ClassificationRecord]:
        """One record per d in [2, d_max], ascending"""
        _require_natural(d_max, 2)
        if d_max > Config.SCAN_CAP:
            raise BudgetExceeded(f"d_max = {d_max} is above the scan cap {Config.SCAN_CAP}")

        logger.info(f"Classifying d <= {d_max} over {self.field} on {threads} thread(s)")

        def classify_one(d: int) -> Optional[ClassificationRecord]:
            if squarefree_only and not self.is_squarefree(d):
                return None
            return self.classify(d)

        records = [r for r in scan_range(classify_one, 2, d_max, threads) if r is not None]
        logger.info(f"Classified {len(records)} values; cache sizes {self.engine.cache_sizes()}")
        return records

    def field_scan(self, bound: int, threads: int = 1) -> Dict[str, Dict]:
        """Field-level predicates checked for every d <= bound.

        A field is Lehmer / realizable / normal / strongly Lehmer when every
        natural number has the property; here only d in [2, bound] are
        examined and the least failing d is reported.
        """
        records = self.classify_range(bound, threads=threads)
        checks = {
            'lehmer': lambda r: r.lehmer,
            'realizable': lambda r: r.realizable,
            'normal': lambda r: r.normal,
            'strongly_lehmer': lambda r: r.strongly_lehmer,
        }
        summary = {}
        for name, check in checks.items():
            witness = next((r.d for r in records if not check(r)), None)
            summary[name] = {'bound': bound, 'holds_to_bound': witness is None,
                             'first_witness': witness}
        return summary
