"""
Quadratic fields of class number one and exact arithmetic in their rings
of integers.

Every element is stored by its coordinates (a, b) over the integral basis
{1, w}. The basis element w satisfies w^2 = trace * w + shift, where

    PlainRoot  (m = 2, 3 mod 4):  w = sqrt(m),          trace = 0, shift = m
    HalfTrace  (m = 1 mod 4):     w = (1 + sqrt(m))/2,  trace = 1, shift = (m - 1)/4

so a single product formula covers both shapes. Q itself is the degree one
field with m = 1; its elements always have b = 0.
"""
import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from utils.errors import FieldMismatch, NotSquarefree, UnsupportedField
from utils.primes import is_squarefree

logger = logging.getLogger(__name__)

IMAGINARY_CLASS_NUMBER_ONE = (-1, -2, -3, -7, -11, -19, -43, -67, -163)
REAL_CLASS_NUMBER_ONE = (2, 3, 5, 6, 7, 11, 13, 17, 19, 21, 29)
SUPPORTED_RADICANDS = IMAGINARY_CLASS_NUMBER_ONE + REAL_CLASS_NUMBER_ONE


class BasisShape(Enum):
    PLAIN_ROOT = 'PlainRoot'
    HALF_TRACE = 'HalfTrace'


@dataclass(frozen=True)
class QuadraticField:
    m: int
    degree: int
    disc: int
    basis_shape: BasisShape

    @property
    def trace(self) -> int:
        """Coefficient t in w^2 = t*w + k"""
        return 1 if self.basis_shape is BasisShape.HALF_TRACE else 0

    @property
    def shift(self) -> int:
        """Constant k in w^2 = t*w + k"""
        if self.basis_shape is BasisShape.HALF_TRACE:
            return (self.m - 1) // 4
        return self.m

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    def element(self, a: int, b: int = 0) -> 'AlgInt':
        return AlgInt(a, b, self)

    def one(self) -> 'AlgInt':
        return AlgInt(1, 0, self)

    def omega(self) -> 'AlgInt':
        if self.is_rational:
            raise FieldMismatch("Q has no second basis element")
        return AlgInt(0, 1, self)

    def label(self) -> str:
        if self.is_rational:
            return 'Q'
        return f'Q(sqrt({self.m}))'

    def __str__(self) -> str:
        return self.label()


@dataclass(frozen=True)
class AlgInt:
    """a + b*w in the ring of integers of `field`"""
    a: int
    b: int
    field: QuadraticField

    def __post_init__(self):
        if self.field.is_rational and self.b != 0:
            raise FieldMismatch(f"element of Q cannot have b = {self.b}")

    def __add__(self, other: 'AlgInt') -> 'AlgInt':
        return add(self, other)

    def __sub__(self, other: 'AlgInt') -> 'AlgInt':
        return add(self, neg(other))

    def __neg__(self) -> 'AlgInt':
        return neg(self)

    def __mul__(self, other: 'AlgInt') -> 'AlgInt':
        return mul(self, other)

    def __str__(self) -> str:
        if self.field.is_rational:
            return str(self.a)
        return f'{self.a} + {self.b}w'


def make_field(m: int) -> QuadraticField:
    """Validate a radicand and build Q(sqrt(m)); m = 1 gives Q"""
    if m == 0:
        raise NotSquarefree("radicand 0 does not define a field")
    if m == 1:
        return QuadraticField(m=1, degree=1, disc=1, basis_shape=BasisShape.PLAIN_ROOT)
    if not is_squarefree(abs(m)):
        raise NotSquarefree(f"radicand {m} is not squarefree")
    if m not in SUPPORTED_RADICANDS:
        raise UnsupportedField(
            f"Q(sqrt({m})) is not on the class-number-one list; its ring of "
            f"integers is not known to be a unique factorization domain")

    if m % 4 == 1:
        return QuadraticField(m=m, degree=2, disc=m, basis_shape=BasisShape.HALF_TRACE)
    return QuadraticField(m=m, degree=2, disc=4 * m, basis_shape=BasisShape.PLAIN_ROOT)


def supported_fields(include_rationals: bool = False):
    fields = [make_field(m) for m in SUPPORTED_RADICANDS]
    if include_rationals:
        fields.insert(0, make_field(1))
    return fields


def _same_field(x: AlgInt, y: AlgInt):
    if x.field != y.field:
        raise FieldMismatch(f"{x.field} and {y.field} differ")


def add(x: AlgInt, y: AlgInt) -> AlgInt:
    _same_field(x, y)
    return AlgInt(x.a + y.a, x.b + y.b, x.field)


def neg(x: AlgInt) -> AlgInt:
    return AlgInt(-x.a, -x.b, x.field)


def mul(x: AlgInt, y: AlgInt) -> AlgInt:
    _same_field(x, y)
    field = x.field
    a = x.a * y.a + field.shift * x.b * y.b
    b = x.a * y.b + x.b * y.a + field.trace * x.b * y.b
    return AlgInt(a, b, field)


def norm(x: AlgInt) -> int:
    field = x.field
    return x.a * x.a + field.trace * x.a * x.b - field.shift * x.b * x.b


def mult_matrix(x: AlgInt) -> np.ndarray:
    """Matrix of y -> x*y; columns are the coordinates of x*1 and x*w"""
    if x.field.is_rational:
        return np.array([[x.a]], dtype=object)
    field = x.field
    return np.array([
        [x.a, field.shift * x.b],
        [x.b, x.a + field.trace * x.b],
    ], dtype=object)


def matrix_det(matrix: np.ndarray) -> int:
    """Exact determinant of a 1x1 or 2x2 object matrix"""
    if matrix.shape == (1, 1):
        return matrix[0, 0]
    return matrix[0, 0] * matrix[1, 1] - matrix[0, 1] * matrix[1, 0]
