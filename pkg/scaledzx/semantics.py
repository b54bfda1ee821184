"""
Exact interpretation of diagrams as matrices over Z[1/2][ω]: the soundness oracle.
"""
import itertools
import logging
from typing import List, Tuple

import numpy as np

from scaledzx.core import validate
from scaledzx.errors import InvalidDiagramError, NonScalarError
from scaledzx.models.Diagram import Diagram
from scaledzx.models.ExactMatrix import ExactMatrix
from scaledzx.models.ExactScalar import ExactScalar
from scaledzx.models.RingElement import HALF, INV_SQRT2, ONE, ZERO, RingElement
from scaledzx.models.VertexKind import VertexKind

logger = logging.getLogger(__name__)

Labelled = Tuple[np.ndarray, List[object]]


def _phase_factor(kind: VertexKind) -> RingElement:
    return RingElement.omega_power(2 * kind.phase.quarter_turns)


def node_tensor(kind: VertexKind, degree: int) -> np.ndarray:
    """
    The tensor of a single vertex with `degree` legs, one axis of size 2 per leg.

    Args:
        kind (VertexKind): The vertex kind.
        degree (int): Number of legs.

    Returns:
        np.ndarray: Object array of RingElement with `degree` axes (0-d for degree 0).

    Raises:
        ValueError: Hadamard with degree other than 2, or Star with legs.
    """
    tensor = np.empty((2,) * degree, dtype=object)
    match kind.kind:
        case "Z":
            tensor.fill(ZERO)
            phase = _phase_factor(kind)
            if degree == 0:
                tensor[()] = ONE + phase
            else:
                tensor[(0,) * degree] = ONE
                tensor[(1,) * degree] = phase
        case "X":
            phase = _phase_factor(kind)
            scale = ONE
            for _ in range(degree):
                scale = scale * INV_SQRT2
            for idx in itertools.product((0, 1), repeat=degree):
                parity = sum(idx) % 2
                tensor[idx] = scale * (ONE - phase if parity else ONE + phase)
        case "H":
            if degree != 2:
                raise ValueError(f"Hadamard needs degree 2, got {degree}")
            for a, b in itertools.product((0, 1), repeat=2):
                tensor[a, b] = -INV_SQRT2 if a and b else INV_SQRT2
        case _:
            if degree != 0:
                raise ValueError(f"Star needs degree 0, got {degree}")
            tensor[()] = HALF
    return tensor


def _trace_repeats(tensor: np.ndarray, labels: List[object]) -> Labelled:
    """
    Contracts pairs of axes sharing a label (self-loops).
    """
    while True:
        seen = {}
        pair = None
        for axis, label in enumerate(labels):
            if label in seen:
                pair = (seen[label], axis)
                break
            seen[label] = axis
        if pair is None:
            return tensor, labels
        i, j = pair
        tensor = np.diagonal(tensor, axis1=i, axis2=j)
        tensor = np.asarray(tensor[..., 0] + tensor[..., 1], dtype=object)
        labels = [label for axis, label in enumerate(labels) if axis not in pair]


def _contract_pair(a: Labelled, b: Labelled) -> Labelled:
    (ta, la), (tb, lb) = a, b
    shared = [label for label in la if label in lb]
    if not shared:
        return np.multiply.outer(ta, tb), la + lb
    axes_a = [la.index(label) for label in shared]
    axes_b = [lb.index(label) for label in shared]
    out = np.asarray(np.tensordot(ta, tb, axes=(axes_a, axes_b)), dtype=object)
    labels = [label for label in la if label not in shared] + [
        label for label in lb if label not in shared
    ]
    return out, labels


def _result_size(a: Labelled, b: Labelled) -> int:
    shared = set(a[1]) & set(b[1])
    return len(a[1]) + len(b[1]) - 2 * len(shared)


def interpret(d: Diagram) -> ExactMatrix:
    """
    Contracts the diagram's tensor network exactly.

    Every edge carries a summed binary variable; the result is indexed by (outputs; inputs) with
    the first wire as most significant bit. Free loops contribute a factor 2 each.

    Args:
        d (Diagram): A valid diagram.

    Returns:
        ExactMatrix: The interpretation.

    Raises:
        InvalidDiagramError: If `d` does not validate.
    """
    violations = validate(d)
    if violations:
        raise InvalidDiagramError(violations)

    factor = ONE
    for _ in range(d.loops):
        factor = factor * 2
    pending: List[Labelled] = []
    for v, kind in d.vertices.items():
        half_edges = d.half_edges(v)
        tensor, labels = _trace_repeats(node_tensor(kind, len(half_edges)), [e for e, _ in half_edges])
        if not labels:
            factor = factor * tensor[()]
        else:
            pending.append((tensor, labels))
    identity = node_tensor(VertexKind.z(0), 2)
    for b in d.boundary:
        (e, _), = d.half_edges(b)
        pending.append((identity, [("b", b), e]))

    # greedy: always contract the pair with the smallest result
    while len(pending) > 1:
        best = None
        for i, j in itertools.combinations(range(len(pending)), 2):
            connected = bool(set(pending[i][1]) & set(pending[j][1]))
            key = (not connected, _result_size(pending[i], pending[j]), i, j)
            if best is None or key < best:
                best = key
        _, _, i, j = best
        merged = _contract_pair(pending[i], pending[j])
        pending = [t for k, t in enumerate(pending) if k not in (i, j)]
        if merged[1]:
            pending.append(merged)
        else:
            factor = factor * merged[0][()]

    n_out, n_in = len(d.outputs), len(d.inputs)
    if not pending:
        return ExactMatrix.scalar(factor)
    tensor, labels = pending[0]
    order = [labels.index(("b", b)) for b in d.outputs + d.inputs]
    tensor = np.transpose(tensor, order).reshape(2**n_out, 2**n_in)
    return ExactMatrix(tensor, n_out, n_in).scaled(factor)


def scalar_value(d: Diagram) -> ExactScalar:
    """
    The exact value of a scalar diagram.

    Raises:
        NonScalarError: If `d` has boundary wires.
        ScalarDecompositionError: If the value is not a stabilizer scalar.
    """
    if not d.is_scalar:
        raise NonScalarError("scalar_value needs a diagram without inputs or outputs")
    return ExactScalar.from_ring(interpret(d).entries[0, 0])


def is_zero_matrix(d: Diagram) -> bool:
    return interpret(d).is_zero()


def semantically_equal(d1: Diagram, d2: Diagram) -> bool:
    if len(d1.inputs) != len(d2.inputs) or len(d1.outputs) != len(d2.outputs):
        return False
    return interpret(d1) == interpret(d2)
