"""
Structural algebra on diagrams: composition, tensor product, adjoint, colour and flip
closures, validation and isomorphism.
"""
import logging
from collections import Counter
from typing import Dict, List, Optional, Sequence, Set

import networkx as nx

from scaledzx.errors import BoundaryMismatchError
from scaledzx.models.Diagram import Diagram, DiagramBuilder

logger = logging.getLogger(__name__)


def relabel(d: Diagram, node_offset: int = 0, edge_offset: int = 0) -> Diagram:
    """
    Shifts every node id by `node_offset` and every edge id by `edge_offset`.
    """
    return Diagram(
        {v + node_offset: kind for v, kind in d.vertices.items()},
        {e + edge_offset: (u + node_offset, v + node_offset) for e, (u, v) in d.edges.items()},
        [b + node_offset for b in d.inputs],
        [b + node_offset for b in d.outputs],
        d.loops,
    )


def compact(d: Diagram) -> Diagram:
    """
    Renumbers nodes and edges to 0..n-1 in their current order (boundary first).
    """
    order = list(d.boundary) + list(d.vertices)
    nodes = {old: new for new, old in enumerate(order)}
    edges = {
        new: (nodes[u], nodes[v]) for new, (u, v) in enumerate(d.edges.values())
    }
    return Diagram(
        {nodes[v]: kind for v, kind in d.vertices.items()},
        edges,
        [nodes[b] for b in d.inputs],
        [nodes[b] for b in d.outputs],
        d.loops,
    )


def tensor(left: Diagram, right: Diagram) -> Diagram:
    """
    Disjoint union; the boundary order is `left`'s followed by `right`'s.

    Args:
        left (Diagram): The left factor, kept with its ids.
        right (Diagram): The right factor, relabelled past `left`'s ids.

    Returns:
        Diagram: The tensor product.
    """
    shifted = relabel(right, left.next_node_id(), left.next_edge_id())
    vertices = dict(left.vertices)
    vertices.update(shifted.vertices)
    edges = dict(left.edges)
    edges.update(shifted.edges)
    return Diagram(
        vertices,
        edges,
        left.inputs + shifted.inputs,
        left.outputs + shifted.outputs,
        left.loops + shifted.loops,
    )


def tensor_all(diagrams: Sequence[Diagram]) -> Diagram:
    result = Diagram.empty()
    for d in diagrams:
        result = tensor(result, d)
    return result


def compose(first: Diagram, second: Diagram) -> Diagram:
    """
    Plugs the outputs of `first` into the inputs of `second`, in order.

    Args:
        first (Diagram): Applied first.
        second (Diagram): Applied second.

    Returns:
        Diagram: inputs of `first`, outputs of `second`.

    Raises:
        BoundaryMismatchError: When the boundary counts differ.
    """
    if len(first.outputs) != len(second.inputs):
        raise BoundaryMismatchError(
            f"Cannot compose {len(first.outputs)} outputs with {len(second.inputs)} inputs"
        )
    both = tensor(first, second)
    n_first = len(first.outputs)
    joined_out = both.outputs[:n_first]
    joined_in = both.inputs[len(first.inputs):]
    builder = DiagramBuilder(both)
    builder.inputs = list(both.inputs[: len(first.inputs)])
    builder.outputs = list(both.outputs[n_first:])
    for out_b, in_b in zip(joined_out, joined_in):
        builder.joints.update((out_b, in_b))
        builder.add_edge(out_b, in_b)
    return builder.build()


def adjoint(d: Diagram) -> Diagram:
    """
    Swaps inputs and outputs and negates every spider phase.
    """
    return Diagram(
        {v: kind.negated() for v, kind in d.vertices.items()},
        d.edges,
        d.outputs,
        d.inputs,
        d.loops,
    )


def colour_swap(d: Diagram) -> Diagram:
    """
    Exchanges Z and X spiders, keeping phases and ids.
    """
    return Diagram(
        {v: kind.colour_swapped() for v, kind in d.vertices.items()},
        d.edges,
        d.inputs,
        d.outputs,
        d.loops,
    )


def flip(d: Diagram) -> Diagram:
    """
    Turns the diagram upside down: inputs and outputs swap, phases are kept.
    """
    return Diagram(d.vertices, d.edges, d.outputs, d.inputs, d.loops)


def validate(d: Diagram) -> List[str]:
    """
    Checks the structural invariants of a diagram.

    Args:
        d (Diagram): The diagram to check.

    Returns:
        List[str]: One message per violation; empty when the diagram is valid.
    """
    violations = []
    boundary = list(d.boundary)
    counts = Counter(boundary)
    for b, count in sorted(counts.items()):
        if count > 1:
            violations.append(f"boundary point {b} is listed {count} times")
    for b in sorted(counts):
        if b in d.vertices:
            violations.append(f"boundary point {b} is also a vertex")
        elif d.degree(b) != 1:
            violations.append(f"boundary point {b} has {d.degree(b)} attachments")
    known = set(d.vertices) | set(boundary)
    for e, (u, v) in d.edges.items():
        for end in (u, v):
            if end not in known:
                violations.append(f"edge {e} ends at unknown node {end}")
    for v, kind in d.vertices.items():
        if kind.is_hadamard:
            if d.degree(v) != 2:
                violations.append(f"Hadamard {v} has degree {d.degree(v)}")
            if d.self_loops(v):
                violations.append(f"Hadamard {v} has a self-loop")
            for w in d.neighbours(v):
                if w != v and w in d.vertices and d.kind(w).is_hadamard:
                    violations.append(f"Hadamard {v} is wired to Hadamard {w}")
        elif kind.is_star and d.degree(v) != 0:
            violations.append(f"star {v} has degree {d.degree(v)}")
    if d.loops < 0:
        violations.append(f"negative loop count {d.loops}")
    return violations


def to_networkx(d: Diagram, boundary_labels: Optional[Dict[int, object]] = None) -> nx.MultiGraph:
    """
    Returns a labelled multigraph: vertices carry their kind label, boundary points their
    position in `inputs + outputs` (or the label given in `boundary_labels`).
    """
    graph = nx.MultiGraph()
    for v, kind in d.vertices.items():
        graph.add_node(v, label=kind.label())
    if boundary_labels is None:
        boundary_labels = {b: ("b", i) for i, b in enumerate(d.boundary)}
    for b, label in boundary_labels.items():
        graph.add_node(b, label=label)
    for e, (u, v) in d.edges.items():
        graph.add_edge(u, v, key=e)
    return graph


def _node_match(a: dict, b: dict) -> bool:
    return a["label"] == b["label"]


def isomorphic(d1: Diagram, d2: Diagram) -> bool:
    """
    Equality up to relabelling of vertices and edges, with boundary order fixed.
    """
    if (
        d1.loops != d2.loops
        or len(d1.inputs) != len(d2.inputs)
        or len(d1.outputs) != len(d2.outputs)
        or len(d1.vertices) != len(d2.vertices)
        or len(d1.edges) != len(d2.edges)
        or Counter(k.label() for k in d1.vertices.values())
        != Counter(k.label() for k in d2.vertices.values())
    ):
        return False
    return nx.is_isomorphic(to_networkx(d1), to_networkx(d2), node_match=_node_match)


def components(d: Diagram) -> List[Set[int]]:
    """
    Connected components as sets of node ids (boundary points included), ordered by their
    smallest id.
    """
    graph = to_networkx(d)
    return sorted((set(c) for c in nx.connected_components(graph)), key=min)


def vertex_components(d: Diagram) -> List[Set[int]]:
    """
    Connected components restricted to vertices, dropping components made of bare wires only.
    """
    found = []
    for comp in components(d):
        vertices = {n for n in comp if n in d.vertices}
        if vertices:
            found.append(vertices)
    return found


def subdiagram(d: Diagram, keep: Set[int]) -> Diagram:
    """
    The closed subdiagram on the vertex set `keep` (no boundary; edges leaving `keep` are
    dropped, so callers pass whole components).
    """
    return Diagram(
        {v: d.kind(v) for v in keep},
        {e: (u, v) for e, (u, v) in d.edges.items() if u in keep and v in keep},
    )


def bend(d: Diagram) -> Diagram:
    """
    Map-state duality: every boundary point, inputs first, read as an output.
    """
    return Diagram(d.vertices, d.edges, (), d.boundary, d.loops)


def unbend(d: Diagram, n_inputs: int) -> Diagram:
    """
    Inverse of `bend`: the first `n_inputs` outputs become the inputs again.
    """
    boundary = d.boundary
    return Diagram(d.vertices, d.edges, boundary[:n_inputs], boundary[n_inputs:], d.loops)
