"""
RingElement class: exact elements of Z[1/2][ω] with ω = e^(iπ/4).
"""
from __future__ import annotations

from typing import Iterable, Tuple, Union

from scaledzx.models.Dyadic import Dyadic

POWERS = ("", "ω", "ω²", "ω³")


class RingElement:
    """
    a + bω + cω² + dω³ with dyadic coefficients and ω⁴ = −1.

    Attributes:
        coefficients (Tuple[Dyadic, Dyadic, Dyadic, Dyadic]): (a, b, c, d).

    Methods:
        omega_power: ω^k for any integer k.
        conjugate: Complex conjugation, ω ↦ ω̄ = −ω³.
        to_complex: A sympy number, used only for approximate display.
    """

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable[Union[int, Dyadic]] = (0, 0, 0, 0)) -> None:
        coeffs = tuple(Dyadic.coerce(c) for c in coefficients)
        if len(coeffs) != 4:
            raise ValueError("A ring element has exactly four coefficients")
        self._c: Tuple[Dyadic, Dyadic, Dyadic, Dyadic] = coeffs  # type: ignore[assignment]

    @classmethod
    def coerce(cls, value: Union[int, Dyadic, RingElement]) -> RingElement:
        if isinstance(value, RingElement):
            return value
        return cls((value, 0, 0, 0))

    @classmethod
    def omega_power(cls, k: int) -> RingElement:
        k %= 8
        sign = 1 if k < 4 else -1
        coeffs = [0, 0, 0, 0]
        coeffs[k % 4] = sign
        return cls(coeffs)

    @property
    def coefficients(self) -> Tuple[Dyadic, Dyadic, Dyadic, Dyadic]:
        return self._c

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self._c)

    def __add__(self, other: Union[int, Dyadic, RingElement]) -> RingElement:
        other = RingElement.coerce(other)
        return RingElement(x + y for x, y in zip(self._c, other._c))

    __radd__ = __add__

    def __neg__(self) -> RingElement:
        return RingElement(-x for x in self._c)

    def __sub__(self, other: Union[int, Dyadic, RingElement]) -> RingElement:
        return self + (-RingElement.coerce(other))

    def __rsub__(self, other: Union[int, Dyadic, RingElement]) -> RingElement:
        return RingElement.coerce(other) - self

    def __mul__(self, other: Union[int, Dyadic, RingElement]) -> RingElement:
        other = RingElement.coerce(other)
        out = [Dyadic(0)] * 4
        for i, x in enumerate(self._c):
            if x.is_zero():
                continue
            for j, y in enumerate(other._c):
                if y.is_zero():
                    continue
                term = x * y
                if i + j >= 4:
                    out[i + j - 4] = out[i + j - 4] - term
                else:
                    out[i + j] = out[i + j] + term
        return RingElement(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> RingElement:
        if exponent < 0:
            raise ValueError("Only non-negative powers are supported")
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def half(self) -> RingElement:
        return RingElement(x.half() for x in self._c)

    def conjugate(self) -> RingElement:
        a, b, c, d = self._c
        return RingElement((a, -d, -c, -b))

    def to_complex(self):
        """
        Returns the value as a sympy expression in exact radicals.
        """
        import sympy

        omega = sympy.exp(sympy.I * sympy.pi / 4)
        return sum(
            (sympy.Rational(c.numerator, 2 ** c.exponent) * omega ** k for k, c in enumerate(self._c)),
            sympy.Integer(0),
        )

    def approx(self, digits: int = 15) -> str:
        """
        A decimal rendering, not authoritative.
        """
        import sympy

        value = sympy.N(sympy.expand_complex(self.to_complex()), digits)
        return str(value)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Dyadic)):
            other = RingElement.coerce(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __str__(self) -> str:
        terms = []
        for c, power in zip(self._c, POWERS):
            if c.is_zero():
                continue
            negative = c.numerator < 0
            magnitude = -c if negative else c
            if power and magnitude == 1:
                text = power
            else:
                coeff = str(magnitude)
                if power and "/" in coeff:
                    coeff = f"({coeff})"
                text = f"{coeff}{power}"
            terms.append((negative, text))
        if not terms:
            return "0"
        negative, text = terms[0]
        out = f"-{text}" if negative else text
        for negative, text in terms[1:]:
            out += f" - {text}" if negative else f" + {text}"
        return out

    def __repr__(self) -> str:
        return self.__str__()


ZERO = RingElement((0, 0, 0, 0))
ONE = RingElement((1, 0, 0, 0))
OMEGA = RingElement((0, 1, 0, 0))
I = RingElement((0, 0, 1, 0))
SQRT2 = RingElement((0, 1, 0, -1))
INV_SQRT2 = RingElement((0, Dyadic(1, 1), 0, Dyadic(-1, 1)))
HALF = RingElement((Dyadic(1, 1), 0, 0, 0))
