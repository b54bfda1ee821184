"""
Derivation and DerivationStep: recorded graphical proofs.
"""
from __future__ import annotations

from typing import Iterable, List, NamedTuple, Optional

from scaledzx.models.Diagram import Diagram
from scaledzx.models.MatchSite import MatchSite

FORWARD = "forward"
BACKWARD = "backward"
DIRECTIONS = (FORWARD, BACKWARD)


def opposite(direction: str) -> str:
    return BACKWARD if direction == FORWARD else FORWARD


class DerivationStep(NamedTuple):
    """
    One rule application.

    Attributes:
        rule_id (str): Registry id of the rule, closure suffixes included.
        direction (str): "forward" (lhs to rhs) or "backward".
        site (MatchSite): Where the rule was applied.
    """

    rule_id: str
    direction: str
    site: MatchSite

    def to_text(self) -> str:
        return f"{self.rule_id} {self.direction} {self.site.to_text()}"

    @classmethod
    def parse(cls, line: str) -> DerivationStep:
        parts = line.split()
        if len(parts) != 3 or parts[1] not in DIRECTIONS:
            raise ValueError(f"Bad derivation line {line!r}")
        return cls(parts[0], parts[1], MatchSite.parse(parts[2]))


class Derivation:
    """
    A sequence of rule applications leading from `start` to `end`.

    Attributes:
        start (Diagram): The first diagram.
        steps (List[DerivationStep]): The applied steps, in order.
        end (Diagram): The diagram reached after the last step.
    """

    def __init__(
        self,
        start: Diagram,
        steps: Optional[Iterable[DerivationStep]] = None,
        end: Optional[Diagram] = None,
    ) -> None:
        self.start = start
        self.steps: List[DerivationStep] = list(steps or [])
        self.end = start if end is None else end

    def __len__(self) -> int:
        return len(self.steps)

    def append(self, step: DerivationStep, diagram: Diagram) -> None:
        self.steps.append(step)
        self.end = diagram

    def extend(self, other: Derivation) -> None:
        """
        Appends `other`, which must start where this derivation ends.
        """
        if other.start != self.end:
            raise ValueError("Derivations do not join")
        self.steps.extend(other.steps)
        self.end = other.end

    def to_text(self) -> str:
        """
        One step per line: `<rule-id> <direction> <site-binding>`.
        """
        return "".join(step.to_text() + "\n" for step in self.steps)

    @staticmethod
    def parse_steps(text: str) -> List[DerivationStep]:
        steps = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            steps.append(DerivationStep.parse(line))
        return steps

    def __str__(self) -> str:
        return f"Derivation({len(self.steps)} steps)"

    def __repr__(self) -> str:
        return self.__str__()
