"""
Scalar lemmas: equations between tensor products of stars and pairs, plus the Y-state identity.
Matching picks the first free piece of each required type.
"""
import itertools
from typing import Callable, List, Optional, Sequence, Tuple

from scaledzx.core import tensor, tensor_all
from scaledzx.models.Diagram import Diagram
from scaledzx.models.MatchSite import MatchSite
from scaledzx.models.RewriteRule import RewriteRule
from scaledzx.patterns import pair, star, x_state, z_state
from scaledzx.rules.matching import pairs, vertices
from scaledzx.rules.primitive import PHASES

Piece = Tuple
STAR = ("star",)
PAIR = ("pair", 0, 0)
Q_PLUS = ("pair", 1, 1)
Q_MINUS = ("pair", 3, 3)


def _pair(alpha: int, beta: int) -> Piece:
    return ("pair", alpha % 4, beta % 4)


def piece_diagram(pieces: Sequence[Piece]) -> Diagram:
    parts = []
    for piece in pieces:
        match piece:
            case ("star",):
                parts.append(star())
            case ("pair", alpha, beta):
                parts.append(pair(alpha, beta))
            case _:
                raise ValueError(f"Unknown scalar piece {piece!r}")
    return tensor_all(parts)


def find_pieces(
    d: Diagram, pieces: Sequence[Piece], avoid: Sequence[int] = ()
) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """
    Disjoint occurrences of `pieces` in `d`, as (vertices, edges), or None.
    """
    used = set(avoid)
    found_vertices: List[int] = []
    found_edges: List[int] = []
    for piece in pieces:
        if piece == STAR:
            free = [s for s in vertices(d, "star") if s not in used]
            if not free:
                return None
            used.add(free[0])
            found_vertices.append(free[0])
            continue
        _, alpha, beta = piece
        free_pairs = [p for p in pairs(d, alpha, beta) if p[0] not in used and p[1] not in used]
        if not free_pairs:
            return None
        z, x, e = free_pairs[0]
        used.update((z, x))
        found_vertices += [z, x]
        found_edges.append(e)
    return tuple(found_vertices), tuple(found_edges)


PieceSide = Callable[[Tuple], List[Piece]]


def piece_rule(
    rule_id: str,
    description: str,
    lhs: PieceSide,
    rhs: PieceSide,
    space: Sequence[Tuple] = ((),),
) -> RewriteRule:
    """
    A lemma whose sides are tensor products of scalar pieces, over a finite parameter space.
    """

    def matcher(side: PieceSide):
        def match(d: Diagram) -> List[MatchSite]:
            sites = []
            for params in space:
                found = find_pieces(d, side(params))
                if found is not None:
                    sites.append(MatchSite(found[0], found[1], (), 0, tuple(params)))
            return sites

        return match

    return RewriteRule(
        rule_id,
        description,
        lambda p: piece_diagram(lhs(p)),
        lambda p: piece_diagram(rhs(p)),
        lambda legs: list(space),
        matcher(lhs),
        matcher(rhs),
        derived=True,
        closed=False,
    )


# y-state: X(-π/2) state = star ⊗ pair(-π/2,-π/2) ⊗ Z(π/2) state


def y_state_lhs(params: Tuple) -> Diagram:
    return x_state(3)


def y_state_rhs(params: Tuple) -> Diagram:
    return tensor(piece_diagram([STAR, Q_MINUS]), z_state(1))


def _states(d: Diagram, kind: str, phase: int) -> List[int]:
    return [v for v in vertices(d, kind, phase) if d.degree(v) == 1 and not d.self_loops(v)]


def y_state_forward(d: Diagram) -> List[MatchSite]:
    return [MatchSite((x,), (), tuple(d.half_edges(x)), 0, ()) for x in _states(d, "X", 3)]


def y_state_backward(d: Diagram) -> List[MatchSite]:
    sites = []
    for z in _states(d, "Z", 1):
        found = find_pieces(d, [STAR, Q_MINUS], avoid=(z,))
        if found is not None:
            sites.append(MatchSite(found[0] + (z,), found[1], tuple(d.half_edges(z)), 0, ()))
    return sites


def y_state_instances(legs: int):
    return [()]


PAIR_PHASES = list(itertools.product(PHASES, PHASES))

LEMMA_RULES = [
    piece_rule("innerprod-wlog", "pair(α,β) = pair(β,α)",
               lambda p: [_pair(p[0], p[1])], lambda p: [_pair(p[1], p[0])],
               [(a, b) for a, b in PAIR_PHASES if a != b]),
    piece_rule("pi-multiplication", "pair(α,π) ⊗ pair(β,π) = pair(0,0) ⊗ pair(α+β,π)",
               lambda p: [_pair(p[0], 2), _pair(p[1], 2)],
               lambda p: [PAIR, _pair(p[0] + p[1], 2)],
               PAIR_PHASES),
    piece_rule("overlap-ket-zero", "pair(α,0) = pair(0,0)",
               lambda p: [_pair(p[0], 0)], lambda p: [PAIR],
               [(a,) for a in PHASES if a != 0]),
    RewriteRule("y-state", "X(-π/2) state = star ⊗ pair(-π/2,-π/2) ⊗ Z(π/2) state",
                y_state_lhs, y_state_rhs, y_state_instances, y_state_forward, y_state_backward,
                derived=True, closed=False),
    piece_rule("omega-inverses", "star ⊗ pair(-π/2,-π/2) ⊗ star ⊗ pair(π/2,π/2) = 1",
               lambda p: [STAR, Q_MINUS, STAR, Q_PLUS], lambda p: []),
    piece_rule("star-pair-pair", "star ⊗ pair(0,0) ⊗ pair(0,0) = 1",
               lambda p: [STAR, PAIR, PAIR], lambda p: []),
    piece_rule("scalar-pi-2-equality",
               "pair(-π/2,-π/2) = star ⊗ pair(0,0) ⊗ pair(-π/2,π) ⊗ pair(π/2,π/2)",
               lambda p: [Q_MINUS], lambda p: [STAR, PAIR, _pair(3, 2), Q_PLUS]),
    piece_rule("omega-dagger-squared", "pair(-π/2,-π/2)² = pair(0,0)³ ⊗ pair(-π/2,π)",
               lambda p: [Q_MINUS, Q_MINUS], lambda p: [PAIR, PAIR, PAIR, _pair(3, 2)]),
    piece_rule("omega-squared", "pair(π/2,π/2)² = pair(0,0)³ ⊗ pair(π/2,π)",
               lambda p: [Q_PLUS, Q_PLUS], lambda p: [PAIR, PAIR, PAIR, _pair(1, 2)]),
    piece_rule("minus-omega", "pair(π,π) ⊗ pair(π/2,π/2) = pair(-π/2,π) ⊗ pair(-π/2,-π/2)",
               lambda p: [_pair(2, 2), Q_PLUS], lambda p: [_pair(3, 2), Q_MINUS]),
    piece_rule("scalar-pi-2-inverse", "pair(-π/2,-π/2) ⊗ pair(π/2,π/2) = pair(0,0)⁴",
               lambda p: [Q_MINUS, Q_PLUS], lambda p: [PAIR, PAIR, PAIR, PAIR]),
    piece_rule("pi-remove", "pair(0,π) = pair(0,0)",
               lambda p: [_pair(0, 2)], lambda p: [PAIR]),
]
