"""
Fixture: a stored derivation between two named diagrams.
"""
from typing import NamedTuple

from scaledzx.models.Derivation import Derivation
from scaledzx.models.Diagram import Diagram


class Fixture(NamedTuple):
    """
    Attributes:
        name (str): Fixture name, e.g. "omega_inverses".
        description (str): The identity derived, in one line.
        start (Diagram): Where the derivation starts.
        target (Diagram): The diagram it must end at, up to isomorphism.
        derivation (Derivation): The recorded steps.
    """

    name: str
    description: str
    start: Diagram
    target: Diagram
    derivation: Derivation

    def to_text(self) -> str:
        return f"# {self.name}: {self.description}\n" + self.derivation.to_text()
