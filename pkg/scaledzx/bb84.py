"""
The BB84 example: Alice and Bob share a normalised Bell state and each measure in the
computational or Hadamard basis. Every post-selected outcome pair is turned into an amplitude
diagram and a probability diagram, and both are rewritten to scalar normal form.
"""
import itertools
import logging
from typing import List, Optional, Sequence, Tuple

from scaledzx.core import adjoint, compose, tensor, tensor_all
from scaledzx.models.Diagram import Diagram
from scaledzx.models.MeasurementResult import MeasurementResult
from scaledzx.patterns import bell, pair, star, x_effect, z_effect
from scaledzx.scalars import normalize_scalar_diagram
from scaledzx.semantics import scalar_value

logger = logging.getLogger(__name__)

BASES = ("Z", "X")
Measurement = Tuple[str, int]


def effect(basis: str, outcome: int) -> Diagram:
    """
    The normalised measurement effect: ⟨0|, ⟨1| for basis "Z" and ⟨+|, ⟨-| for basis "X".
    Computational outcomes are X effects and Hadamard outcomes Z effects, each with star ⊗ pair.
    """
    if basis not in BASES or outcome not in (0, 1):
        raise ValueError(f"Unknown measurement {basis}{outcome}")
    node = x_effect(2 * outcome) if basis == "Z" else z_effect(2 * outcome)
    return tensor_all([star(), pair(), node])


def amplitude_diagram(alice: Measurement, bob: Measurement) -> Diagram:
    return compose(bell(), tensor(effect(*alice), effect(*bob)))


def probability_diagram(alice: Measurement, bob: Measurement) -> Diagram:
    amplitude = amplitude_diagram(alice, bob)
    return tensor(amplitude, adjoint(amplitude))


def measure(alice: Measurement, bob: Measurement) -> MeasurementResult:
    amplitude, amplitude_der = normalize_scalar_diagram(amplitude_diagram(alice, bob))
    probability_d = probability_diagram(alice, bob)
    probability, probability_der = normalize_scalar_diagram(probability_d)
    result = MeasurementResult(
        alice, bob, amplitude, amplitude_der, probability, probability_der,
        scalar_value(probability_d),
    )
    logger.debug(f"{result.label}: {probability.to_text()}")
    return result


def scenarios(
    bases: Optional[Sequence[Tuple[str, str]]] = None,
) -> List[Tuple[Measurement, Measurement]]:
    """
    Outcome pairs for the given (Alice, Bob) basis choices; all four choices by default.
    """
    chosen = bases or list(itertools.product(BASES, BASES))
    return [
        ((a, i), (b, j))
        for a, b in chosen
        for i, j in itertools.product((0, 1), (0, 1))
    ]


def run_demo(bases: Optional[Sequence[Tuple[str, str]]] = None) -> List[MeasurementResult]:
    results = [measure(alice, bob) for alice, bob in scenarios(bases)]
    logger.info(f"BB84: {len(results)} outcome pairs normalised")
    return results
