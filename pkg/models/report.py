from typing import Any, Dict, List, Optional

from models.rational import RationalValue


class VerificationReport:
    def __init__(self, suite_name: str, field_m: Optional[int], bound: int):
        self.suite_name = suite_name
        self.field_m = field_m
        self.bound = bound
        self.checked = 0
        self.failures: List[Any] = []  # re-checkable inputs: d, p or (m, n)
        self.details: Dict[str, Any] = {}
        self.elapsed = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, witness: Any):
        self.checked += 1
        if not ok:
            self.failures.append(witness)

    def to_dict(self) -> Dict:
        return {
            'suite': self.suite_name,
            'field': self.field_m,
            'bound': self.bound,
            'checked': self.checked,
            'passed': self.passed,
            'failures': list(self.failures),
            'details': dict(self.details),
            'elapsed': round(self.elapsed, 3),
        }

    @classmethod
    def from_dict(cls, data: Dict):
        report = cls(data['suite'], data.get('field'), data['bound'])
        report.checked = data.get('checked', 0)
        report.failures = list(data.get('failures', []))
        report.details = dict(data.get('details', {}))
        report.elapsed = data.get('elapsed', 0.0)
        return report

    def __eq__(self, other) -> bool:
        """Equal outcomes; elapsed time is ignored"""
        if not isinstance(other, VerificationReport):
            return NotImplemented
        mine, theirs = self.to_dict(), other.to_dict()
        mine.pop('elapsed')
        theirs.pop('elapsed')
        return mine == theirs


class ZetaBound:
    def __init__(self, s: int, lower: RationalValue, upper: RationalValue, terms: int):
        self.s = s
        self.lower = lower
        self.upper = upper
        self.terms = terms  # N, the length of the partial sum

    @property
    def width(self) -> RationalValue:
        return self.upper - self.lower


class RatioScanResult:
    def __init__(self, w: int, l: RationalValue, bound: int, matches: List[int],
                 hypothesis_holds: bool):
        self.w = w
        self.l = l
        self.bound = bound
        self.matches = matches
        self.hypothesis_holds = hypothesis_holds
