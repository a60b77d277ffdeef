from typing import Dict, List, Optional

from models.splitting import SplittingType

CSV_COLUMNS = ['d', 'squarefree', 'phi', 'phiK', 'splitting', 'irreducible', 'divides',
               'realizable', 'normal', 'lehmer', 'strongly_lehmer']

FLAG_COLUMNS = ['squarefree', 'irreducible', 'divides', 'realizable', 'normal',
                'lehmer', 'strongly_lehmer']


class ClassificationRecord:
    def __init__(self, d: int, squarefree: bool, phi: int, phiK: int,
                 splitting: Optional[SplittingType], irreducible: bool, divides: bool,
                 realizable: bool, normal: bool, lehmer: bool, strongly_lehmer: bool):
        self.d = d
        self.squarefree = squarefree
        self.phi = phi
        self.phiK = phiK
        self.splitting = splitting  # None unless d is prime over a quadratic field
        self.irreducible = irreducible
        self.divides = divides
        self.realizable = realizable
        self.normal = normal
        self.lehmer = lehmer
        self.strongly_lehmer = strongly_lehmer

    def to_dict(self) -> Dict:
        return {
            'd': self.d,
            'squarefree': self.squarefree,
            'phi': self.phi,
            'phiK': self.phiK,
            'splitting': self.splitting.value if self.splitting else None,
            'irreducible': self.irreducible,
            'divides': self.divides,
            'realizable': self.realizable,
            'normal': self.normal,
            'lehmer': self.lehmer,
            'strongly_lehmer': self.strongly_lehmer,
        }

    @classmethod
    def from_dict(cls, data: Dict):
        splitting = data.get('splitting')
        return cls(
            d=int(data['d']),
            squarefree=bool(data['squarefree']),
            phi=int(data['phi']),
            phiK=int(data['phiK']),
            splitting=SplittingType(splitting) if splitting else None,
            irreducible=bool(data['irreducible']),
            divides=bool(data['divides']),
            realizable=bool(data['realizable']),
            normal=bool(data['normal']),
            lehmer=bool(data['lehmer']),
            strongly_lehmer=bool(data['strongly_lehmer']),
        )

    def to_row(self) -> List[str]:
        """CSV cells: booleans as 0/1, empty splitting for composites"""
        data = self.to_dict()
        row = []
        for column in CSV_COLUMNS:
            value = data[column]
            if column in FLAG_COLUMNS:
                row.append('1' if value else '0')
            elif value is None:
                row.append('')
            else:
                row.append(str(value))
        return row

    @classmethod
    def from_row(cls, row: List[str]):
        data = dict(zip(CSV_COLUMNS, row))
        for column in FLAG_COLUMNS:
            data[column] = data[column] == '1'
        data['splitting'] = data['splitting'] or None
        return cls.from_dict(data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassificationRecord):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self) -> str:
        return f"ClassificationRecord({self.to_dict()})"
