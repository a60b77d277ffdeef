from dataclasses import dataclass

from models.field import AlgInt, QuadraticField
from utils.errors import FieldMismatch


@dataclass(frozen=True)
class ResidueClass:
    """[a + b*w] modulo d, kept in the canonical box 0 <= a, b < d"""
    field: QuadraticField
    d: int
    a: int
    b: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"modulus must be positive, got {self.d}")
        if not (0 <= self.a < self.d and 0 <= self.b < self.d):
            raise ValueError(f"({self.a}, {self.b}) is not reduced mod {self.d}")
        if self.field.is_rational and self.b != 0:
            raise FieldMismatch("residues over Q have b = 0")

    @classmethod
    def of(cls, field: QuadraticField, d: int, a: int, b: int = 0) -> 'ResidueClass':
        return cls(field, d, a % d, b % d)

    @classmethod
    def from_alg(cls, x: AlgInt, d: int) -> 'ResidueClass':
        return cls.of(x.field, d, x.a, x.b)

    def lift(self) -> AlgInt:
        return AlgInt(self.a, self.b, self.field)

    def _check(self, other: 'ResidueClass'):
        if self.field != other.field or self.d != other.d:
            raise FieldMismatch(f"cannot combine residues mod {self.d} and mod {other.d}")

    def __add__(self, other: 'ResidueClass') -> 'ResidueClass':
        self._check(other)
        return ResidueClass.of(self.field, self.d, self.a + other.a, self.b + other.b)

    def __neg__(self) -> 'ResidueClass':
        return ResidueClass.of(self.field, self.d, -self.a, -self.b)

    def __mul__(self, other: 'ResidueClass') -> 'ResidueClass':
        self._check(other)
        return ResidueClass.from_alg(self.lift() * other.lift(), self.d)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __str__(self) -> str:
        if self.field.is_rational:
            return f'[{self.a}] mod {self.d}'
        return f'[{self.a} + {self.b}w] mod {self.d}'
