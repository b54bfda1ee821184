"""
ExactScalar class: Zero, or √2^r · e^(isπ/4).
"""
from __future__ import annotations

from typing import Optional, Tuple

from scaledzx.errors import ScalarDecompositionError
from scaledzx.models.Dyadic import Dyadic
from scaledzx.models.RingElement import RingElement


class ExactScalar:
    """
    A stabilizer scalar: Zero, or the pair (r, s) denoting √2^r · e^(isπ/4).

    Attributes:
        r (Optional[int]): The modulus exponent; None for Zero.
        s (Optional[int]): The phase index mod 8; None for Zero.

    Methods:
        embed: The value as a RingElement.
        from_ring: Decomposes a RingElement into an ExactScalar.
    """

    __slots__ = ("_r", "_s")

    def __init__(self, r: Optional[int] = None, s: Optional[int] = None) -> None:
        if (r is None) != (s is None):
            raise ValueError("r and s are either both set or both None")
        self._r = None if r is None else int(r)
        self._s = None if s is None else int(s) % 8

    @classmethod
    def zero(cls) -> ExactScalar:
        return cls()

    @classmethod
    def one(cls) -> ExactScalar:
        return cls(0, 0)

    @property
    def is_zero(self) -> bool:
        return self._r is None

    @property
    def r(self) -> Optional[int]:
        return self._r

    @property
    def s(self) -> Optional[int]:
        return self._s

    def as_tuple(self) -> Optional[Tuple[int, int]]:
        return None if self.is_zero else (self._r, self._s)

    def __mul__(self, other: ExactScalar) -> ExactScalar:
        if self.is_zero or other.is_zero:
            return ExactScalar.zero()
        return ExactScalar(self._r + other._r, self._s + other._s)

    def embed(self) -> RingElement:
        """
        Returns √2^r · ω^s as a ring element.
        """
        if self.is_zero:
            return RingElement()
        half, odd = divmod(self._r, 2)
        modulus = Dyadic.power_of_two(half)
        if odd:
            base = RingElement((0, modulus, 0, -modulus))
        else:
            base = RingElement((modulus, 0, 0, 0))
        return base * RingElement.omega_power(self._s)

    @classmethod
    def from_ring(cls, value: RingElement) -> ExactScalar:
        """
        Decomposes `value` into Zero or the unique (r, s).

        Raises:
            ScalarDecompositionError: If the value is not a stabilizer scalar.
        """
        if value.is_zero():
            return cls.zero()
        for s in range(8):
            a, b, c, d = (value * RingElement.omega_power(-s)).coefficients
            if b.is_zero() and c.is_zero() and d.is_zero():
                k = a.log2()
                if k is not None:
                    return cls(2 * k, s)
            if a.is_zero() and c.is_zero() and b == -d:
                k = b.log2()
                if k is not None:
                    return cls(2 * k + 1, s)
        raise ScalarDecompositionError(f"{value} is not a stabilizer scalar")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return self._r == other._r and self._s == other._s

    def __hash__(self) -> int:
        return hash((self._r, self._s))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return f"√2^{self._r}·e^(i{self._s}π/4)"

    def __repr__(self) -> str:
        return f"ExactScalar(r={self._r}, s={self._s})" if not self.is_zero else "ExactScalar(0)"
