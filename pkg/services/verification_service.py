import logging
import time
from math import gcd
from typing import Callable, List, Optional

from config import Config
from models.field import QuadraticField, make_field
from models.rational import RationalValue
from models.report import RatioScanResult, VerificationReport
from models.residue import ResidueClass
from models.splitting import SplittingType
from services.classify_service import ClassificationService
from services.splitting_service import (is_irreducible_nat, min_poly_root_count,
                                        splitting_from_root_count, splitting_type)
from services.totient_service import (TotientEngine, count_units, crt_lift, crt_map,
                                      enumerate_residues, has_zero_divisors,
                                      inverse_search_mask, is_unit, phi_oracle)
from services.zeta_service import euler_factor_bound, lehmer_ratio_identity, zeta_bounds
from utils.errors import BudgetExceeded, DegreeOne, NotCoprime, NotSquarefree, UnknownSuite
from utils.parallel import scan_range
from utils.primes import factorize, is_prime, is_squarefree, primes_up_to

logger = logging.getLogger(__name__)


class VerificationService:
    """Bounded checks of the totient results for one field"""

    # name -> needs a quadratic field
    SUITES = {
        'cardinality': False,
        'oracle': False,
        'determinant': False,
        'multiplicativity': False,
        'embedding': False,
        'lemma1': False,
        'field_criterion': False,
        'splitting': True,
        'prop12': False,
        'theorem1': True,
        'normal_lemma': False,
        'theorem2': False,
        'realizable_field': True,
        'theorem3': True,
        'lehmer_rationals': False,
        'ratio_identity': False,
    }

    def __init__(self, field: QuadraticField, threads: int = 1, oracle_cap: int = None):
        self.field = field
        self.threads = threads
        self.oracle_cap = Config.ORACLE_CAP if oracle_cap is None else oracle_cap
        self.engine = TotientEngine(field)
        self.classifier = ClassificationService(field, self.engine)
        self.n = field.degree

    @classmethod
    def suite_names(cls) -> List[str]:
        return list(cls.SUITES)

    def applicable_suites(self) -> List[str]:
        return [name for name, quadratic in self.SUITES.items()
                if not (quadratic and self.field.is_rational)]

    def run_suite(self, name: str, bound: int) -> VerificationReport:
        if name not in self.SUITES:
            raise UnknownSuite(f"no suite named {name!r}")
        if self.SUITES[name] and self.field.is_rational:
            raise DegreeOne(f"suite {name} needs a quadratic field")
        if bound < 1:
            raise ValueError(f"bound must be positive, got {bound}")

        logger.info(f"Running suite {name} over {self.field} up to {bound}")
        report = VerificationReport(name, self.field.m, bound)
        started = time.perf_counter()
        try:
            getattr(self, f'_suite_{name}')(report, bound)
        except Exception as e:
            logger.error(f"Suite {name} aborted over {self.field}: {str(e)}")
            raise
        report.elapsed = time.perf_counter() - started

        if report.passed:
            logger.info(f"Suite {name} passed: {report.checked} checks")
        else:
            logger.warning(f"Suite {name} found {len(report.failures)} counterexamples")
        return report

    def _scan(self, report: VerificationReport, check: Callable[[int], Optional[bool]],
              lo: int, hi: int):
        """Record check(d) for d in [lo, hi]; None means d is out of scope"""
        outcomes = scan_range(check, lo, hi, self.threads)
        for d, ok in zip(range(lo, hi + 1), outcomes):
            if ok is not None:
                report.record(ok, d)

    def _oracle_limit(self, bound: int) -> int:
        return min(bound, Config.ORACLE_SCAN_LIMIT, self.oracle_cap)

    # ------------------------------------------------------------------
    # Residue ring structure
    # ------------------------------------------------------------------

    def _suite_cardinality(self, report: VerificationReport, bound: int):
        limit = self._oracle_limit(bound)
        report.details['limit'] = limit

        def check(d: int) -> bool:
            residues = enumerate_residues(self.field, d, self.oracle_cap)
            return len(residues) == d ** self.n == len(set(residues))

        self._scan(report, check, 1, limit)

    def _suite_oracle(self, report: VerificationReport, bound: int):
        limit = self._oracle_limit(bound)
        report.details['limit'] = limit
        self._scan(report,
                   lambda d: self.engine.phi_k(d) == phi_oracle(self.field, d, self.oracle_cap),
                   1, limit)

    def _suite_determinant(self, report: VerificationReport, bound: int):
        limit = self._oracle_limit(bound)
        report.details['limit'] = limit

        def check(d: int) -> bool:
            mask = inverse_search_mask(self.field, d, self.oracle_cap)
            residues = enumerate_residues(self.field, d, self.oracle_cap)
            return all(is_unit(x) == bool(found) for x, found in zip(residues, mask))

        self._scan(report, check, 2, limit)

    def _suite_multiplicativity(self, report: VerificationReport, bound: int):
        phi_k = self.engine.phi_k
        for m in range(2, bound + 1):
            if m * (m + 1) > bound:
                break
            for n in range(m + 1, bound // m + 1):
                if gcd(m, n) == 1:
                    report.record(phi_k(m * n) == phi_k(m) * phi_k(n), (m, n))

    def _suite_embedding(self, report: VerificationReport, bound: int):
        self._scan(report, lambda d: self.engine.phi_k(d) % self.engine.phi(d) == 0, 1, bound)

    def _suite_lemma1(self, report: VerificationReport, bound: int):
        limit = self._oracle_limit(bound)
        report.details['oracle_limit'] = limit
        top = lambda d: d ** self.n - 1

        def oracle_check(d: int) -> bool:
            return is_irreducible_nat(self.field, d) == (
                phi_oracle(self.field, d, self.oracle_cap) == top(d))

        def maximality_check(d: int) -> bool:
            value = self.engine.phi_k(d)
            irreducible = is_irreducible_nat(self.field, d)
            if value > top(d) or (value == top(d)) != irreducible:
                return False
            return is_prime(d) or value < top(d)

        self._scan(report, oracle_check, 2, limit)
        self._scan(report, maximality_check, 2, bound)

    def _suite_field_criterion(self, report: VerificationReport, bound: int):
        limit = min(bound, Config.FIELD_CRITERION_LIMIT, self.oracle_cap)
        report.details['limit'] = limit
        self._scan(report,
                   lambda d: (not has_zero_divisors(self.field, d, self.oracle_cap))
                   == is_irreducible_nat(self.field, d),
                   2, limit)

    def _suite_splitting(self, report: VerificationReport, bound: int):
        expected_phi = {
            SplittingType.INERT: lambda p: p * p - 1,
            SplittingType.SPLIT: lambda p: (p - 1) ** 2,
            SplittingType.RAMIFIED: lambda p: p * p - p,
        }
        gaussian = self.field.m == -1
        trichotomy_limit = min(bound, Config.TRICHOTOMY_PRIME_LIMIT, self.oracle_cap)
        report.details['trichotomy_limit'] = trichotomy_limit

        for p in primes_up_to(bound):
            kind = splitting_type(self.field, p)
            ok = splitting_from_root_count(min_poly_root_count(self.field, p)) is kind
            if gaussian:
                ok = ok and (kind is SplittingType.INERT) == (p % 4 == 3)
            if p <= trichotomy_limit:
                ok = ok and phi_oracle(self.field, p, self.oracle_cap) == expected_phi[kind](p)
            report.record(ok, p)

    # ------------------------------------------------------------------
    # Number predicates
    # ------------------------------------------------------------------

    def _suite_prop12(self, report: VerificationReport, bound: int):
        classifier = self.classifier
        self._scan(report,
                   lambda d: classifier.check_prop12(d) if classifier.is_squarefree(d) else None,
                   1, bound)

    def _suite_theorem1(self, report: VerificationReport, bound: int):
        zeta = zeta_bounds(self.n, RationalValue(*Config.ZETA_TOLERANCE))
        report.details['zeta_upper'] = str(zeta.upper)
        report.details['zeta_upper_below_two'] = zeta.upper < 2
        if not zeta.upper < 2:
            report.record(False, 0)
        classifier = self.classifier

        def check(d: int) -> Optional[bool]:
            if not (classifier.is_squarefree(d) and classifier.is_realizable(d)):
                return None
            ratio = RationalValue(d ** self.n - 1, self.engine.phi_k(d))
            euler = euler_factor_bound((p for p, _ in self.engine.factor(d)), self.n)
            chain = ratio <= euler <= zeta.upper < 2
            return chain and classifier.is_lehmer(d)

        self._scan(report, check, 2, bound)

    def _suite_normal_lemma(self, report: VerificationReport, bound: int):
        classifier = self.classifier
        for p in primes_up_to(bound):
            report.record(classifier.is_normal(p) == classifier.divides(p), p)

    def _suite_theorem2(self, report: VerificationReport, bound: int):
        classifier = self.classifier

        def check(d: int) -> bool:
            lehmer_over_q = (d - 1) % self.engine.phi(d) == 0
            if classifier.is_lehmer(d) and classifier.is_normal(d) and lehmer_over_q:
                return is_prime(d)
            return True

        self._scan(report, check, 2, bound)

    def _bounded_field_facts(self, bound: int):
        records = self.classifier.classify_range(bound, threads=self.threads)
        primes = [r for r in records if is_prime(r.d)]
        first = lambda rows, key: next((r.d for r in rows if not key(r)), None)
        return records, primes, first

    def _suite_realizable_field(self, report: VerificationReport, bound: int):
        records, primes, first = self._bounded_field_facts(bound)
        for r in primes:
            report.record(r.realizable == (r.lehmer and r.normal), r.d)

        all_realizable = all(r.realizable for r in records)
        lehmer_and_normal = all(r.lehmer for r in records) and all(r.normal for r in primes)
        report.details.update({
            'realizable_to_bound': all_realizable,
            'lehmer_and_primes_normal_to_bound': lehmer_and_normal,
            'first_non_realizable': first(records, lambda r: r.realizable),
            'first_non_lehmer': first(records, lambda r: r.lehmer),
            'first_non_normal_prime': first(primes, lambda r: r.normal),
        })
        report.record(all_realizable == lehmer_and_normal, bound)

    def _suite_theorem3(self, report: VerificationReport, bound: int):
        records, primes, first = self._bounded_field_facts(bound)
        for r in primes:
            report.record(r.realizable == r.strongly_lehmer, r.d)

        separating_prime = first(primes, lambda r: r.realizable)
        report.details.update({
            'realizable_to_bound': all(r.realizable for r in records),
            'strongly_lehmer_to_bound': all(r.strongly_lehmer for r in records),
            'first_separating_prime': separating_prime,
            'first_non_strongly_lehmer_prime': first(primes, lambda r: r.strongly_lehmer),
        })
        report.record(separating_prime == report.details['first_non_strongly_lehmer_prime'],
                      ('first_prime', bound))
        report.record(report.details['realizable_to_bound']
                      == report.details['strongly_lehmer_to_bound'], bound)

    # ------------------------------------------------------------------
    # Over Q
    # ------------------------------------------------------------------

    def _suite_lehmer_rationals(self, report: VerificationReport, bound: int):
        rationals = ClassificationService(make_field(1))

        def check(d: int) -> bool:
            if not rationals.is_lehmer(d):
                return False
            if (d - 1) % rationals.engine.phi(d) == 0:
                return rationals.is_squarefree(d)
            return True

        self._scan(report, check, 2, bound)

    def _suite_ratio_identity(self, report: VerificationReport, bound: int):
        def check(d: int) -> Optional[bool]:
            if not is_squarefree(d):
                return None
            ratio, identity = lehmer_ratio_identity(d)
            return ratio == identity

        self._scan(report, check, 2, bound)


def run_suite(name: str, field: QuadraticField, bound: int,
              threads: int = 1, oracle_cap: int = None) -> VerificationReport:
    return VerificationService(field, threads, oracle_cap).run_suite(name, bound)


def crt_suite(field: QuadraticField, m: int, n: int, oracle_cap: int = None) -> VerificationReport:
    """Exhaustive check that Z_mn|_K -> Z_m|_K x Z_n|_K is a ring isomorphism"""
    if m < 2 or n < 2:
        raise ValueError(f"moduli must be at least 2, got ({m}, {n})")
    if gcd(m, n) != 1:
        raise NotCoprime(f"{m} and {n} are not coprime")
    cap = Config.ORACLE_CAP if oracle_cap is None else oracle_cap
    if m * n > cap:
        raise BudgetExceeded(f"mn = {m * n} is above the enumeration cap {cap}")

    started = time.perf_counter()
    report = VerificationReport('crt', field.m, m * n)
    residues = enumerate_residues(field, m * n, cap)
    images = {x: crt_map(field, m, n, x) for x in residues}

    image_set = set(images.values())
    target_size = len(enumerate_residues(field, m, cap)) * len(enumerate_residues(field, n, cap))
    report.record(len(image_set) == len(residues) == target_size, ('bijection', m, n))
    for x, pair in images.items():
        report.record(crt_lift(field, m, n, pair) == x, (x.a, x.b))

    if m * n <= Config.CRT_PAIR_LIMIT:
        samples = residues
    else:
        samples = [ResidueClass.of(field, m * n, a, 0 if field.is_rational else b)
                   for a, b in ((0, 0), (1, 0), (0, 1), (1, 1), (-1, 0), (2, -1))]
        samples = list(dict.fromkeys(samples))
    report.details['samples'] = len(samples)

    for x in residues:
        x_m, x_n = images[x]
        for y in samples:
            y_m, y_n = images[y]
            plus = images[x + y] == (x_m + y_m, x_n + y_n)
            times = images[x * y] == (x_m * y_m, x_n * y_n)
            report.record(plus and times, ((x.a, x.b), (y.a, y.b)))
        report.record(is_unit(x) == (is_unit(x_m) and is_unit(x_n)), (x.a, x.b))

    units = (count_units(field, m * n, cap), count_units(field, m, cap), count_units(field, n, cap))
    report.details.update({'elements': len(residues), 'units': list(units)})
    report.record(units[0] == units[1] * units[2], ('units', m, n))
    report.elapsed = time.perf_counter() - started
    return report


def ratio_scan(w: int, l: RationalValue, bound: int, threads: int = 1) -> RatioScanResult:
    """Squarefree d <= bound with w | d and (d - 1)/phi(d) = l"""
    if w < 1 or not is_squarefree(w):
        raise NotSquarefree(f"w = {w} must be a squarefree natural number")
    if bound < w:
        raise ValueError(f"bound {bound} is below w = {w}")
    if bound > Config.SCAN_CAP:
        raise BudgetExceeded(f"bound {bound} is above the scan cap {Config.SCAN_CAP}")

    phi_w = 1
    for p, _ in factorize(w):
        phi_w *= p - 1
    hypothesis = l < RationalValue(w, phi_w)

    def check(k: int) -> Optional[int]:
        d = k * w
        factors = factorize(d)
        if any(a > 1 for _, a in factors):
            return None
        phi = 1
        for p, _ in factors:
            phi *= p - 1
        # (d - 1)/phi = num/den, cross-multiplied
        if (d - 1) * l.den == l.num * phi:
            return d
        return None

    matches = [d for d in scan_range(check, 1, bound // w, threads) if d is not None]
    logger.info(f"Ratio scan w={w}, l={l} up to {bound}: {len(matches)} matches")
    return RatioScanResult(w, l, bound, matches, hypothesis)
