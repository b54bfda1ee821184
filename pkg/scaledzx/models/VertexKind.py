"""
VertexKind class describing what sits at a diagram vertex.
"""
from __future__ import annotations

from typing import Optional, Union

from scaledzx.models.Phase import Phase

Z = "Z"
X = "X"
HADAMARD = "H"
STAR = "star"
KINDS = (Z, X, HADAMARD, STAR)


class VertexKind:
    """
    One of ZSpider(phase), XSpider(phase), Hadamard or Star.

    Attributes:
        kind (str): "Z", "X", "H" or "star".
        phase (Phase): The spider phase; zero for Hadamard and Star.
    """

    __slots__ = ("_kind", "_phase")

    def __init__(self, kind: str, phase: Optional[Union[int, Phase]] = None) -> None:
        if kind not in KINDS:
            raise ValueError(f"Unknown vertex kind {kind!r}")
        if kind in (HADAMARD, STAR) and phase not in (None, 0, Phase(0)):
            raise ValueError(f"{kind} vertices carry no phase")
        self._kind = kind
        self._phase = Phase(phase or 0)

    @classmethod
    def z(cls, phase: Union[int, Phase] = 0) -> VertexKind:
        return cls(Z, phase)

    @classmethod
    def x(cls, phase: Union[int, Phase] = 0) -> VertexKind:
        return cls(X, phase)

    @classmethod
    def hadamard(cls) -> VertexKind:
        return cls(HADAMARD)

    @classmethod
    def star(cls) -> VertexKind:
        return cls(STAR)

    @property
    def kind(self) -> str:
        return self._kind

    @property
    def phase(self) -> Phase:
        return self._phase

    @property
    def is_spider(self) -> bool:
        return self._kind in (Z, X)

    @property
    def is_z(self) -> bool:
        return self._kind == Z

    @property
    def is_x(self) -> bool:
        return self._kind == X

    @property
    def is_hadamard(self) -> bool:
        return self._kind == HADAMARD

    @property
    def is_star(self) -> bool:
        return self._kind == STAR

    def with_phase(self, phase: Union[int, Phase]) -> VertexKind:
        return VertexKind(self._kind, phase)

    def negated(self) -> VertexKind:
        if not self.is_spider:
            return self
        return VertexKind(self._kind, -self._phase)

    def colour_swapped(self) -> VertexKind:
        match self._kind:
            case "Z":
                return VertexKind(X, self._phase)
            case "X":
                return VertexKind(Z, self._phase)
            case _:
                return self

    @classmethod
    def from_label(cls, label: str) -> VertexKind:
        """
        Inverse of `label`.

        Raises:
            ValueError: On unknown labels.
        """
        if label in (HADAMARD, STAR):
            return cls(label)
        if len(label) == 2 and label[0] in (Z, X) and label[1] in "0123":
            return cls(label[0], int(label[1]))
        raise ValueError(f"Unknown vertex label {label!r}")

    def label(self) -> str:
        """
        A hashable text label used for isomorphism checks and canonical orderings.
        """
        if self.is_spider:
            return f"{self._kind}{self._phase.quarter_turns}"
        return self._kind

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexKind):
            return NotImplemented
        return self._kind == other._kind and self._phase == other._phase

    def __hash__(self) -> int:
        return hash((self._kind, self._phase))

    def __str__(self) -> str:
        match self._kind:
            case "Z" | "X":
                return f"{self._kind}({self._phase})"
            case "H":
                return "H"
            case _:
                return "★"

    def __repr__(self) -> str:
        return self.__str__()
