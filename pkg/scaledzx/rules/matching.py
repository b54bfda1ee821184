"""
Small structural queries shared by the rule matchers.
"""
from typing import Dict, List, Optional, Sequence, Tuple

from scaledzx.models.Diagram import Diagram, HalfEdge

Pair = Tuple[int, int, int]


def phase_of(d: Diagram, v: int) -> int:
    return d.kind(v).phase.quarter_turns


def is_kind(d: Diagram, v: int, kind: str, phase: Optional[int] = None) -> bool:
    if v not in d.vertices or d.kind(v).kind != kind:
        return False
    return phase is None or phase_of(d, v) == phase % 4


def vertices(d: Diagram, kind: str, phase: Optional[int] = None) -> List[int]:
    return [v for v in d.vertices if is_kind(d, v, kind, phase)]


def isolated(d: Diagram, kind: str, phase: Optional[int] = None) -> List[int]:
    """
    Degree-0 vertices of the given kind (and phase).
    """
    return [v for v in vertices(d, kind, phase) if d.degree(v) == 0]


def pairs(d: Diagram, alpha: Optional[int] = None, beta: Optional[int] = None) -> List[Pair]:
    """
    Isolated Z(alpha)–X(beta) components joined by a single edge, as (z, x, edge).
    """
    found = []
    for z in vertices(d, "Z", alpha):
        if d.degree(z) != 1:
            continue
        (e, k), = d.half_edges(z)
        x = d.edges[e][k]
        if x != z and is_kind(d, x, "X", beta) and d.degree(x) == 1:
            found.append((z, x, e))
    return found


def take_pairs(
    d: Diagram, count: int, alpha: int = 0, beta: int = 0, avoid: Sequence[int] = ()
) -> Optional[List[Pair]]:
    """
    The first `count` pairs of the given phases not touching `avoid`, or None.
    """
    found = [p for p in pairs(d, alpha, beta) if p[0] not in avoid and p[1] not in avoid]
    if len(found) < count:
        return None
    return found[:count]


def pair_parts(chosen: Sequence[Pair]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    vs: List[int] = []
    es: List[int] = []
    for z, x, e in chosen:
        vs += [z, x]
        es.append(e)
    return tuple(vs), tuple(es)


def legs_except(d: Diagram, v: int, internal: Sequence[int]) -> List[HalfEdge]:
    """
    The half-edges at `v` whose edge is not internal.
    """
    return [h for h in d.half_edges(v) if h[0] not in internal]


def other_half_edge(d: Diagram, v: int, e: int) -> Optional[HalfEdge]:
    """
    For a degree-2 vertex, the half-edge that is not on edge `e`.
    """
    rest = [h for h in d.half_edges(v) if h[0] != e]
    return rest[0] if len(rest) == 1 else None


def has_self_loop(d: Diagram, v: int) -> bool:
    return bool(d.self_loops(v))


def two_leg(d: Diagram, v: int, kind: str, phase: Optional[int] = None) -> bool:
    """
    True for a degree-2 vertex of the given kind without self-loops.
    """
    return is_kind(d, v, kind, phase) and d.degree(v) == 2 and not has_self_loop(d, v)


Spoke = Tuple[int, int, HalfEdge, int]


def hadamard_spokes(
    d: Diagram, v: int, skip: Sequence[HalfEdge] = ()
) -> Optional[List[Spoke]]:
    """
    For every half-edge at `v` outside `skip`: (hadamard, edge v–h, half-edge h→w, w).

    None unless each one runs through a private Hadamard to a distinct Z vertex w != v.
    """
    found: List[Spoke] = []
    seen = set()
    for e, k in d.half_edges(v):
        if (e, k) in skip:
            continue
        h = d.edges[e][k]
        if not is_kind(d, h, "H"):
            return None
        rest = other_half_edge(d, h, e)
        if rest is None:
            return None
        w = d.edges[rest[0]][rest[1]]
        if w == v or w in seen or not is_kind(d, w, "Z"):
            return None
        seen.add(w)
        found.append((h, e, rest, w))
    return found


def hadamard_edges_among(
    d: Diagram, ws: Sequence[int], classes: Optional[Sequence[int]] = None
) -> Optional[Dict[Tuple[int, int], Tuple[int, int, int]]]:
    """
    Hadamard edges between distinct members of `ws`, keyed by index pair (i, j), i < j, as
    (hadamard, edge at w_i, edge at w_j). With `classes`, only pairs in different classes count.

    None when a counted pair is joined by more than one Hadamard.
    """
    index = {w: i for i, w in enumerate(ws)}
    found: Dict[Tuple[int, int], Tuple[int, int, int]] = {}
    for i, w in enumerate(ws):
        for e, k in d.half_edges(w):
            h = d.edges[e][k]
            if not is_kind(d, h, "H"):
                continue
            rest = other_half_edge(d, h, e)
            if rest is None:
                continue
            j = index.get(d.edges[rest[0]][rest[1]])
            if j is None or j <= i:
                continue
            if classes is not None and classes[i] == classes[j]:
                continue
            if (i, j) in found:
                return None
            found[(i, j)] = (h, e, rest[0])
    return found


def plain_first(d: Diagram, half_edges: Sequence[HalfEdge]) -> List[HalfEdge]:
    """
    Orders half-edges so those not leading to a Hadamard come first.
    """
    return sorted(half_edges, key=lambda h: is_kind(d, d.edges[h[0]][h[1]], "H"))
