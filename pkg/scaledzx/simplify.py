"""
Graph-like simplification. Turns a diagram into Z spiders joined by Hadamard nodes, gives every
boundary wire its own spider and eliminates the interior spiders. Scalar components end up as
pieces of at most two vertices.

Every step goes through a Rewriter, so the result always comes with its derivation.
"""
import logging
from typing import Callable, List, Optional, Set, Tuple

from scaledzx.core import components
from scaledzx.errors import RuleError
from scaledzx.models.Derivation import BACKWARD, FORWARD
from scaledzx.models.Diagram import Diagram, HalfEdge
from scaledzx.models.MatchSite import MatchSite
from scaledzx.rewrite import Rewriter
from scaledzx.rules.derived import hadamard_identity_site, lcomp_site, pivot_site
from scaledzx.rules.matching import hadamard_spokes, is_kind, other_half_edge, phase_of
from scaledzx.rules.primitive import cup_edge_site

logger = logging.getLogger(__name__)

GRAPH_LIKE_STEPS = (
    ("free-loop", FORWARD),
    ("loop.dual", FORWARD),
    ("hadamard-loop.dual", FORWARD),
    ("colour-h", FORWARD),
    ("loop", FORWARD),
    ("hadamard-loop", FORWARD),
    ("spider", FORWARD),
    ("hadamard-hopf", FORWARD),
)


def scalar_components(d: Diagram) -> List[Set[int]]:
    """
    Vertex sets of the components that touch no boundary point.
    """
    boundary = set(d.boundary)
    return [
        {n for n in comp if n in d.vertices}
        for comp in components(d)
        if not comp & boundary and any(n in d.vertices for n in comp)
    ]


def is_piece(d: Diagram, comp: Set[int]) -> bool:
    """
    True for a star, a spider without legs, or an isolated Z–X pair joined by one edge.
    """
    if len(comp) == 1:
        (v,) = comp
        kind = d.kind(v)
        return kind.is_star or (kind.is_spider and d.degree(v) == 0)
    if len(comp) == 2:
        u, v = sorted(comp)
        if d.kind(u).is_x:
            u, v = v, u
        return (
            is_kind(d, u, "Z") and is_kind(d, v, "X")
            and d.degree(u) == 1 and d.degree(v) == 1
        )
    return False


def settled(d: Diagram) -> Set[int]:
    """
    Vertices of the scalar components that are already pieces.
    """
    done: Set[int] = set()
    for comp in scalar_components(d):
        if is_piece(d, comp):
            done |= comp
    return done


def outside_pieces(d: Diagram) -> Callable[[MatchSite], bool]:
    done = settled(d)
    return lambda site: not done.intersection(site.vertices)


def to_graph_like(rw: Rewriter) -> None:
    """
    Removes X spiders, plain spider edges, self-loops and parallel Hadamard edges.
    """
    while True:
        where = outside_pieces(rw.diagram)
        for rule_id, direction in GRAPH_LIKE_STEPS:
            if rw.try_apply(rule_id, direction, where):
                break
        else:
            return


def attachment(d: Diagram, b: int) -> Tuple[str, int, Optional[int]]:
    """
    How boundary point `b` meets the diagram: ("wire", e, None) for a bare wire, ("h-wire", e,
    None) for a Hadamard between two boundary points, ("plain", e, w) for an edge to spider w and
    ("hadamard", e, w) for a Hadamard between b and spider w. `e` is the edge at b.
    """
    ((e, k),) = d.half_edges(b)
    t = d.edges[e][k]
    if t not in d.vertices:
        return "wire", e, None
    if not d.kind(t).is_hadamard:
        return "plain", e, t
    rest = other_half_edge(d, t, e)
    w = d.edges[rest[0]][rest[1]]
    if w not in d.vertices:
        return "h-wire", e, None
    return "hadamard", e, w


def boundary_spiders(d: Diagram) -> List[Optional[int]]:
    return [attachment(d, b)[2] for b in d.boundary]


def attach_half_edge(d: Diagram, b: int) -> HalfEdge:
    """
    The half-edge at b's spider leading toward b.
    """
    how, e, w = attachment(d, b)
    if how == "plain":
        target_edge = e
    else:
        ((_, k),) = d.half_edges(b)
        h = d.edges[e][k]
        target_edge = other_half_edge(d, h, e)[0]
    (found,) = [h for h in d.half_edges(w) if h[0] == target_edge]
    return found


def unfuse_boundary(rw: Rewriter, b: int) -> None:
    """
    Moves boundary `b` off its spider onto a fresh Z(0), joined through a Hadamard.
    """
    how, e, _ = attachment(rw.diagram, b)
    if how == "plain":
        rw.apply("hadamard-identity", FORWARD, hadamard_identity_site(e))
    else:
        rw.apply("cup", BACKWARD, cup_edge_site(e))


def _boundary_fix(d: Diagram) -> Optional[Tuple[str, str, MatchSite]]:
    owners = set()
    for b in d.boundary:
        how, e, w = attachment(d, b)
        if how in ("wire", "h-wire"):
            return "cup", BACKWARD, cup_edge_site(e)
        if w in owners:
            if how == "plain":
                return "hadamard-identity", FORWARD, hadamard_identity_site(e)
            return "cup", BACKWARD, cup_edge_site(e)
        owners.add(w)
    return None


def prepare_boundaries(rw: Rewriter) -> None:
    """
    Gives every boundary wire a spider of its own.
    """
    while True:
        fix = _boundary_fix(rw.diagram)
        if fix is None:
            return
        rw.apply(*fix)


def _lonely_pauli(d: Diagram, done: Set[int]) -> Optional[int]:
    for v in d.vertices_of("Z"):
        if v in done or phase_of(d, v) % 2 or d.degree(v) == 0:
            continue
        if hadamard_spokes(d, v) is not None:
            return v
    return None


def _pivot_with_boundary(rw: Rewriter, u: int) -> None:
    """
    Pivots interior Pauli `u` with a boundary spider after moving that spider's boundary off.
    """
    d = rw.diagram
    w = hadamard_spokes(d, u)[0][3]
    owned = [b for b in d.boundary if attachment(d, b)[2] == w]
    if not owned:
        raise RuleError(f"spider {w} next to interior spider {u} is neither interior nor boundary")
    unfuse_boundary(rw, owned[0])
    d = rw.diagram
    if phase_of(d, w) % 2 == 0:
        rw.apply("pivot", FORWARD, pivot_site(d, u, w))
    else:
        rw.apply("lcomp", FORWARD, lcomp_site(d, w))


def eliminate(rw: Rewriter) -> None:
    """
    Removes interior spiders: ±π/2 ones by local complementation, adjacent Pauli ones by
    pivoting, and a Pauli one next to boundary spiders only by pivoting with one of them.
    """
    while True:
        where = outside_pieces(rw.diagram)
        if rw.try_apply("lcomp", FORWARD, where) or rw.try_apply("pivot", FORWARD, where):
            continue
        u = _lonely_pauli(rw.diagram, settled(rw.diagram))
        if u is None:
            return
        _pivot_with_boundary(rw, u)


def simplify(rw: Rewriter) -> None:
    """
    Graph-like form, one spider per boundary wire, no interior spiders.
    """
    to_graph_like(rw)
    logger.debug(f"graph-like after {len(rw.derivation)} steps")
    prepare_boundaries(rw)
    eliminate(rw)
    logger.debug(
        f"simplified to {len(rw.diagram.vertices)} vertices after {len(rw.derivation)} steps"
    )
