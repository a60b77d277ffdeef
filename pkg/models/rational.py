from __future__ import annotations

from fractions import Fraction
from typing import Union


class RationalValue:
    """Exact reduced fraction num/den with den > 0"""
    __slots__ = ('_f',)

    def __init__(self, num: Union[int, Fraction], den: int = 1):
        if isinstance(num, Fraction):
            self._f = num
        else:
            if den == 0:
                raise ZeroDivisionError("rational with zero denominator")
            self._f = Fraction(num, den)

    @classmethod
    def parse(cls, text: str) -> RationalValue:
        """Read 'num/den' or a bare integer"""
        text = text.strip()
        if '/' in text:
            num, den = text.split('/', 1)
            return cls(int(num), int(den))
        return cls(int(text))

    @property
    def num(self) -> int:
        return self._f.numerator

    @property
    def den(self) -> int:
        return self._f.denominator

    def as_fraction(self) -> Fraction:
        return self._f

    def _coerce(self, other) -> Fraction:
        if isinstance(other, RationalValue):
            return other._f
        return Fraction(other)

    def __add__(self, other) -> RationalValue:
        return RationalValue(self._f + self._coerce(other))

    def __sub__(self, other) -> RationalValue:
        return RationalValue(self._f - self._coerce(other))

    def __mul__(self, other) -> RationalValue:
        return RationalValue(self._f * self._coerce(other))

    def __truediv__(self, other) -> RationalValue:
        return RationalValue(self._f / self._coerce(other))

    def __eq__(self, other) -> bool:
        if isinstance(other, (RationalValue, int, Fraction)):
            return self._f == self._coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._f)

    def __lt__(self, other) -> bool:
        return self._f < self._coerce(other)

    def __le__(self, other) -> bool:
        return self._f <= self._coerce(other)

    def __gt__(self, other) -> bool:
        return self._f > self._coerce(other)

    def __ge__(self, other) -> bool:
        return self._f >= self._coerce(other)

    def __float__(self) -> float:
        return float(self._f)

    def decimal(self, places: int = 10) -> str:
        """Truncated decimal expansion, computed exactly"""
        sign = '-' if self._f < 0 else ''
        num, den = abs(self.num), self.den
        whole, rest = divmod(num, den)
        digits = (rest * 10 ** places) // den
        return f"{sign}{whole}.{digits:0{places}d}"

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"RationalValue({self.num}, {self.den})"
