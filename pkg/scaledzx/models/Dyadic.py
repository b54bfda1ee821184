"""
Dyadic rationals n / 2^e, the coefficient field of the exact ring.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional, Union


class Dyadic:
    """
    An exact dyadic rational numerator / 2^exponent.

    Canonical form: odd numerator, or numerator 0 with exponent 0. Integers keep exponent 0.

    Attributes:
        numerator (int): The numerator.
        exponent (int): The non-negative denominator exponent.
    """

    __slots__ = ("_num", "_exp")

    def __init__(self, numerator: int = 0, exponent: int = 0) -> None:
        numerator = int(numerator)
        exponent = int(exponent)
        if exponent < 0:
            numerator <<= -exponent
            exponent = 0
        if numerator == 0:
            exponent = 0
        else:
            while exponent > 0 and numerator % 2 == 0:
                numerator //= 2
                exponent -= 1
        self._num = numerator
        self._exp = exponent

    @classmethod
    def coerce(cls, value: Union[int, Dyadic]) -> Dyadic:
        if isinstance(value, Dyadic):
            return value
        return cls(int(value))

    @property
    def numerator(self) -> int:
        return self._num

    @property
    def exponent(self) -> int:
        return self._exp

    def is_zero(self) -> bool:
        return self._num == 0

    def log2(self) -> Optional[int]:
        """
        Returns k when the value is exactly 2^k (k may be negative), otherwise None.
        """
        if self._num <= 0 or self._num & (self._num - 1):
            return None
        return self._num.bit_length() - 1 - self._exp

    @classmethod
    def power_of_two(cls, k: int) -> Dyadic:
        return cls(1 << k) if k >= 0 else cls(1, -k)

    def to_fraction(self) -> Fraction:
        return Fraction(self._num, 1 << self._exp)

    def __add__(self, other: Union[int, Dyadic]) -> Dyadic:
        other = Dyadic.coerce(other)
        exp = max(self._exp, other._exp)
        return Dyadic(
            (self._num << (exp - self._exp)) + (other._num << (exp - other._exp)), exp
        )

    __radd__ = __add__

    def __neg__(self) -> Dyadic:
        return Dyadic(-self._num, self._exp)

    def __sub__(self, other: Union[int, Dyadic]) -> Dyadic:
        return self + (-Dyadic.coerce(other))

    def __rsub__(self, other: Union[int, Dyadic]) -> Dyadic:
        return Dyadic.coerce(other) - self

    def __mul__(self, other: Union[int, Dyadic]) -> Dyadic:
        other = Dyadic.coerce(other)
        return Dyadic(self._num * other._num, self._exp + other._exp)

    __rmul__ = __mul__

    def half(self) -> Dyadic:
        return Dyadic(self._num, self._exp + 1)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Dyadic(other)
        if not isinstance(other, Dyadic):
            return NotImplemented
        return self._num == other._num and self._exp == other._exp

    def __hash__(self) -> int:
        return hash((self._num, self._exp))

    def __str__(self) -> str:
        if self._exp == 0:
            return str(self._num)
        return f"{self._num}/{1 << self._exp}"

    def __repr__(self) -> str:
        return self.__str__()
