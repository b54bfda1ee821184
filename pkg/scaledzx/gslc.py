"""
GS-LC normalization: a graph state with a Clifford word on every wire, times an exact scalar.

After simplification every boundary spider is split into a Z(0) graph vertex and a chain of
two-legged nodes, and each chain is replaced by its canonical Clifford word. The form is then
made unique by a breadth-first search over local complementations and graph stabilizers for the
smallest (edge count, edges, Clifford classes) key.
"""
import itertools
import logging
from collections import deque
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from scaledzx import clifford
from scaledzx.core import bend
from scaledzx.models.Derivation import BACKWARD, FORWARD, Derivation
from scaledzx.models.Diagram import Diagram, HalfEdge
from scaledzx.models.GslcForm import GslcForm
from scaledzx.rewrite import Rewriter
from scaledzx.rules.derived import (
    clifford_chain_site,
    graph_stabilizer_site,
    graph_vertex_spokes,
    gslc_lc_site,
)
from scaledzx.rules.matching import is_kind
from scaledzx.rules.primitive import spider_unfuse_site
from scaledzx.scalars import normalize_scalar_part
from scaledzx.simplify import attach_half_edge, attachment, simplify

logger = logging.getLogger(__name__)

Edges = FrozenSet[Tuple[int, int]]
State = Tuple[Edges, Tuple[int, ...]]
Move = Tuple[str, int]

MOVES = ("lc", "pauli")
# nodes each move puts on the moved qubit and on its neighbours, graph side
MOVE_WORDS = {"lc": (("X3",), ("Z1",)), "pauli": (("X2",), ("Z2",))}


def canonicalize_chain(rw: Rewriter, start: Optional[HalfEdge], nodes: Sequence[int]) -> None:
    """
    Replaces the chain `nodes` (graph side first) by its canonical word unless it already is one.
    """
    if not nodes:
        return
    site = clifford_chain_site(rw.diagram, start, nodes)
    index, s = clifford.classify(site.params)
    if s != 0 or site.params != clifford.canonical_word(index):
        rw.apply("clifford-word", FORWARD, site)


def qubit_chain(d: Diagram, b: int) -> Tuple[int, Optional[HalfEdge], List[int]]:
    """
    Walks in from boundary `b` to the first Z(0). Returns (graph vertex, half-edge at the
    innermost chain node toward it, chain nodes graph side first).
    """
    ((e, k),) = d.half_edges(b)
    node, came = d.edges[e][k], e
    walked: List[int] = []
    while not is_kind(d, node, "Z", 0):
        walked.append(node)
        ((e, k),) = [h for h in d.half_edges(node) if h[0] != came]
        node, came = d.edges[e][k], e
    if not walked:
        return node, None, []
    (start,) = [h for h in d.half_edges(walked[-1]) if h[0] == came]
    return node, start, list(reversed(walked))


def extract(rw: Rewriter) -> None:
    """
    Splits every boundary spider of a simplified diagram into a Z(0) graph vertex and its
    canonical chain.
    """
    for b in bend(rw.diagram).outputs:
        d = rw.diagram
        how, _, w = attachment(d, b)
        attach = attach_half_edge(d, b)
        before = set(d.vertices)
        first = [h for h in d.half_edges(w) if h != attach]
        rw.apply("spider", BACKWARD, spider_unfuse_site(d, w, 0, first))
        d = rw.diagram
        ((eb, k),) = d.half_edges(b)
        nodes = [d.edges[eb][k]]
        if how == "hadamard":
            ((f, j),) = [h for h in d.half_edges(nodes[0]) if h[0] != eb]
            nodes.append(d.edges[f][j])
        v = nodes[-1]
        (u,) = [x for x in d.vertices if x not in before and x != v]
        (start,) = [h for h in d.half_edges(v) if d.edges[h[0]][h[1]] == u]
        canonicalize_chain(rw, start, list(reversed(nodes)))


def read_state(d: Diagram) -> Tuple[List[int], Edges, List[Tuple[str, ...]]]:
    """
    Returns (graph vertex per qubit, graph edges, chain word per qubit).
    """
    chains = [qubit_chain(d, b) for b in bend(d).outputs]
    graph = [g for g, _, _ in chains]
    index = {g: i for i, g in enumerate(graph)}
    edges = set()
    for i, g in enumerate(graph):
        _, spokes = graph_vertex_spokes(d, g)
        for *_, w in spokes:
            j = index[w]
            edges.add((min(i, j), max(i, j)))
    words = [tuple(d.kind(n).label() for n in nodes) for _, _, nodes in chains]
    return graph, frozenset(edges), words


def neighbours(edges: Edges, v: int) -> List[int]:
    return sorted(j if i == v else i for i, j in edges if v in (i, j))


def apply_move(state: State, move: Move) -> State:
    """
    The GS-LC state after `move`, tracked on graph edges and Clifford class indices.
    """
    edges, classes = state
    kind, v = move
    nbrs = neighbours(edges, v)
    own, theirs = MOVE_WORDS[kind]
    if kind == "lc":
        edges = frozenset(edges ^ set(itertools.combinations(nbrs, 2)))
    updated = list(classes)
    updated[v] = clifford.prepend(classes[v], own)[0]
    for w in nbrs:
        updated[w] = clifford.prepend(classes[w], theirs)[0]
    return edges, tuple(updated)


def state_key(state: State) -> Tuple:
    edges, classes = state
    return len(edges), tuple(sorted(edges)), classes


def canonical_moves(state: State, max_states: int) -> List[Move]:
    """
    Moves reaching the state with the smallest key in the orbit of `state`.
    """
    n = len(state[1])
    parents: Dict[State, Optional[Tuple[State, Move]]] = {state: None}
    queue = deque([state])
    best = state
    while queue:
        current = queue.popleft()
        if state_key(current) < state_key(best):
            best = current
        for v, kind in itertools.product(range(n), MOVES):
            following = apply_move(current, (kind, v))
            if following in parents:
                continue
            if len(parents) >= max_states:
                logger.warning(f"GS-LC search stopped at {max_states} states")
                queue.clear()
                break
            parents[following] = (current, (kind, v))
            queue.append(following)
    moves: List[Move] = []
    while parents[best] is not None:
        best, move = parents[best]
        moves.append(move)
    return moves[::-1]


def perform_move(rw: Rewriter, move: Move) -> None:
    """
    Applies `move` to the diagram and re-canonicalizes the chains it touched.
    """
    kind, v = move
    graph, edges, _ = read_state(rw.diagram)
    if kind == "lc":
        rw.apply("gslc-lc", FORWARD, gslc_lc_site(rw.diagram, graph[v]))
    else:
        rw.apply("graph-stabilizer", BACKWARD, graph_stabilizer_site(rw.diagram, graph[v]))
    boundary = bend(rw.diagram).outputs
    for q in [v] + neighbours(edges, v):
        _, start, nodes = qubit_chain(rw.diagram, boundary[q])
        canonicalize_chain(rw, start, nodes)


def gslc_normalize(d: Diagram, max_states: int = 20000) -> Tuple[GslcForm, Derivation]:
    """
    Rewrites `d` to its canonical GS-LC form. Inputs are read as outputs (map-state duality)
    and recorded in the form, so the form reads back as a map.

    Args:
        d (Diagram): Any stabilizer diagram.
        max_states (int): Cap on the canonicalization search.

    Returns:
        Tuple[GslcForm, Derivation]: The form and the derivation reaching its diagram.
    """
    rw = Rewriter(d)
    simplify(rw)
    extract(rw)
    _, edges, words = read_state(rw.diagram)
    state = (edges, tuple(clifford.classify(word)[0] for word in words))
    moves = canonical_moves(state, max_states)
    logger.debug(f"GS-LC canonicalization: {len(moves)} moves")
    for move in moves:
        perform_move(rw, move)
    _, edges, words = read_state(rw.diagram)
    scalar = normalize_scalar_part(rw)
    form = GslcForm(len(d.inputs), len(d.outputs), tuple(sorted(edges)), tuple(words), scalar)
    return form, rw.derivation
