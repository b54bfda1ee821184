"""
Phase class for the quarter-turn phases carried by spiders.
"""
from __future__ import annotations

from typing import Union

PHASE_STRINGS = ("0", "π/2", "π", "−π/2")
FILE_STRINGS = ("0", "pi/2", "pi", "-pi/2")


class Phase:
    """
    A phase k·π/2 with k in Z4.

    Attributes:
        quarter_turns (int): k, reduced mod 4.

    Methods:
        parse: Builds a phase from its file spelling ("0", "pi/2", "pi", "-pi/2").
        file_string: The file spelling of the phase.
    """

    __slots__ = ("_k",)

    def __init__(self, quarter_turns: Union[int, Phase] = 0) -> None:
        if isinstance(quarter_turns, Phase):
            quarter_turns = quarter_turns.quarter_turns
        self._k = int(quarter_turns) % 4

    @property
    def quarter_turns(self) -> int:
        return self._k

    @property
    def is_pauli(self) -> bool:
        return self._k % 2 == 0

    @property
    def is_proper_clifford(self) -> bool:
        return self._k % 2 == 1

    @classmethod
    def parse(cls, text: str) -> Phase:
        """
        Builds a phase from its file spelling.

        Args:
            text (str): One of "0", "pi/2", "pi", "-pi/2".

        Returns:
            Phase: The parsed phase.

        Raises:
            ValueError: For any other spelling.
        """
        if text not in FILE_STRINGS:
            raise ValueError(f"Unknown phase {text!r}; expected one of {', '.join(FILE_STRINGS)}")
        return cls(FILE_STRINGS.index(text))

    def file_string(self) -> str:
        return FILE_STRINGS[self._k]

    def __add__(self, other: Union[int, Phase]) -> Phase:
        return Phase(self._k + Phase(other).quarter_turns)

    __radd__ = __add__

    def __sub__(self, other: Union[int, Phase]) -> Phase:
        return Phase(self._k - Phase(other).quarter_turns)

    def __neg__(self) -> Phase:
        return Phase(-self._k)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Phase):
            return self._k == other._k
        if isinstance(other, int):
            return self._k == other % 4
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Phase", self._k))

    def __lt__(self, other: Phase) -> bool:
        return self._k < Phase(other).quarter_turns

    def __int__(self) -> int:
        return self._k

    def __str__(self) -> str:
        return PHASE_STRINGS[self._k]

    def __repr__(self) -> str:
        return self.__str__()


ZERO = Phase(0)
HALF_PI = Phase(1)
PI = Phase(2)
MINUS_HALF_PI = Phase(3)
ALL_PHASES = (ZERO, HALF_PI, PI, MINUS_HALF_PI)
