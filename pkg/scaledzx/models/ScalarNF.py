"""
ScalarNF: the canonical diagram of a non-zero stabilizer scalar.
"""
from __future__ import annotations

from typing import List, NamedTuple, Tuple

from scaledzx.models.Diagram import Diagram
from scaledzx.models.ExactScalar import ExactScalar
from scaledzx.models.Phase import Phase


def piece_text(piece: Tuple) -> str:
    if piece[0] == "star":
        return "star"
    _, alpha, beta = piece
    return f"pair({Phase(alpha).file_string()},{Phase(beta).file_string()})"


class ScalarNF(NamedTuple):
    """
    The scalar √2^r e^(isπ/4): its phase representative followed by the modulus part.

    Attributes:
        r (int): Exponent of √2.
        s (int): Phase in eighths of a turn, 0..7.

    Text grammar:
        `scalar r=<int> s=<0..7>: <piece> <piece> ...` with pieces `pair(<phase>,<phase>)` or
        `star`, representative first; `1` stands for the empty diagram.
    """

    r: int
    s: int

    @classmethod
    def of(cls, value: ExactScalar) -> ScalarNF:
        if value.is_zero:
            raise ValueError("Zero has no ScalarNF")
        return cls(value.r, value.s % 8)

    def value(self) -> ExactScalar:
        return ExactScalar(self.r, self.s)

    def pieces(self) -> List[Tuple]:
        from scaledzx.scalar_forms import nf_pieces

        return nf_pieces(self.r, self.s)

    def diagram(self) -> Diagram:
        from scaledzx.scalar_forms import nf_diagram

        return nf_diagram(self.r, self.s)

    def to_text(self) -> str:
        body = " ".join(piece_text(p) for p in self.pieces()) or "1"
        return f"scalar r={self.r} s={self.s}: {body}"
