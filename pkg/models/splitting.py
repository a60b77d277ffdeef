from enum import Enum


class SplittingType(Enum):
    """How a rational prime factors in the ring of integers"""
    INERT = 'inert'
    SPLIT = 'split'
    RAMIFIED = 'ramified'

    def __str__(self) -> str:
        return self.value
