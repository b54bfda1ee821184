"""
MeasurementResult: one post-selected pair of outcomes on a shared Bell state.
"""
from typing import NamedTuple, Tuple, Union

from scaledzx.models.Derivation import Derivation
from scaledzx.models.ExactScalar import ExactScalar
from scaledzx.models.ScalarNF import ScalarNF
from scaledzx.models.ZeroNF import ZeroNF

BASIS_NAMES = {"Z": "computational", "X": "hadamard"}
OUTCOME_NAMES = {"Z": ("0", "1"), "X": ("+", "-")}


class MeasurementResult(NamedTuple):
    """
    Attributes:
        alice (Tuple[str, int]): Alice's basis ("Z" or "X") and outcome (0 or 1).
        bob (Tuple[str, int]): Bob's basis and outcome.
        amplitude (ScalarNF | ZeroNF): Normal form of the amplitude diagram.
        amplitude_derivation (Derivation): From the amplitude diagram to its normal form.
        probability (ScalarNF | ZeroNF): Normal form of amplitude ⊗ its adjoint.
        probability_derivation (Derivation): From the probability diagram to its normal form.
        value (ExactScalar): The exact probability.
    """

    alice: Tuple[str, int]
    bob: Tuple[str, int]
    amplitude: Union[ScalarNF, ZeroNF]
    amplitude_derivation: Derivation
    probability: Union[ScalarNF, ZeroNF]
    probability_derivation: Derivation
    value: ExactScalar

    @property
    def label(self) -> str:
        (a_basis, a_out), (b_basis, b_out) = self.alice, self.bob
        return (
            f"{BASIS_NAMES[a_basis]}/{BASIS_NAMES[b_basis]} "
            f"<{OUTCOME_NAMES[a_basis][a_out]}{OUTCOME_NAMES[b_basis][b_out]}|"
        )

    def to_text(self) -> str:
        value = "0" if self.value.is_zero else str(self.value.embed())
        start = self.amplitude_derivation.start
        return (
            f"{self.label}\n"
            f"  amplitude diagram: {len(start.vertices)} vertices, {len(start.edges)} edges\n"
            f"  amplitude: {self.amplitude.to_text()} ({len(self.amplitude_derivation)} steps)\n"
            f"  probability: {self.probability.to_text()} "
            f"({len(self.probability_derivation)} steps)\n"
            f"  value: {value}"
        )
