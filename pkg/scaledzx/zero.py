"""
Zero diagrams: recognising them and rewriting them to the normal form fixed by their arity.
"""
import logging
from typing import Optional, Tuple

from scaledzx.core import isomorphic
from scaledzx.errors import NotZeroError, RuleError
from scaledzx.models.Derivation import BACKWARD, FORWARD, Derivation
from scaledzx.models.Diagram import Diagram
from scaledzx.models.MatchSite import MatchSite
from scaledzx.models.ZeroNF import ZeroNF
from scaledzx.rewrite import Rewriter
from scaledzx.rules.matching import is_kind, isolated, pairs, phase_of, take_pairs, vertices
from scaledzx.rules.primitive import (
    colour_backward_site,
    cup_edge_site,
    spider_unfuse_site,
    zero_edge_site,
    zero_flip_site,
)
from scaledzx.simplify import attachment, is_piece, scalar_components, simplify

logger = logging.getLogger(__name__)

# (Z phase, X phase) of the pairs worth zero
ZERO_PAIRS = ((1, 3), (3, 1))


def find_zero_piece(d: Diagram) -> Optional[int]:
    """
    A vertex of some scalar piece worth zero: Z(π), X(π), pair(π/2,-π/2) or pair(-π/2,π/2).
    For pairs the Z vertex is returned.
    """
    for comp in scalar_components(d):
        if not is_piece(d, comp):
            continue
        if len(comp) == 1:
            (v,) = comp
            if is_kind(d, v, "Z", 2) or is_kind(d, v, "X", 2):
                return v
            continue
        (z,) = [v for v in comp if d.kind(v).is_z]
        (x,) = [v for v in comp if d.kind(v).is_x]
        if (phase_of(d, z), phase_of(d, x)) in ZERO_PAIRS:
            return z
    return None


def is_zero(d: Diagram) -> bool:
    """
    True iff `d` denotes a zero matrix: simplify, then look for a zero scalar piece.
    """
    rw = Rewriter(d)
    simplify(rw)
    return find_zero_piece(rw.diagram) is not None


def expose_marker(rw: Rewriter) -> None:
    """
    Turns some zero piece into an isolated Z(π).

    Raises:
        NotZeroError: If there is no zero piece.
    """
    d = rw.diagram
    if isolated(d, "Z", 2):
        return
    v = find_zero_piece(d)
    if v is None:
        raise NotZeroError("no zero scalar piece found")
    if is_kind(d, v, "X"):
        rw.apply("colour", BACKWARD, colour_backward_site(d, v))
        return
    if phase_of(d, v) == 3:
        rw.apply_first("innerprod-wlog", FORWARD, lambda site: site.params == (3, 1))
    d = rw.diagram
    z, x, _ = pairs(d, 1, 3)[0]
    rw.apply("y-state", FORWARD, MatchSite((x,), (), tuple(d.half_edges(x)), 0, ()))
    (state,) = rw.diagram.neighbours(z)
    rw.apply_first("spider", FORWARD, lambda site: set(site.vertices) == {z, state})


def _cut_edges(rw: Rewriter, scalars_only: bool) -> bool:
    d = rw.diagram
    inside = set().union(*scalar_components(d)) if scalars_only else None
    for e, (u, v) in d.edges.items():
        if u == v or u not in d.vertices or v not in d.vertices:
            continue
        if inside is not None and u not in inside:
            continue
        if not (d.kind(u).is_spider and d.kind(v).is_spider):
            continue
        if d.kind(u).is_x and d.kind(v).is_x:
            rw.apply("zero", BACKWARD, zero_flip_site(d, u, "X"))
            return True
        site = zero_edge_site(d, e)
        if site is not None:
            rw.apply("zero", FORWARD, site)
            return True
    return False


def _absorb_scalars(rw: Rewriter) -> bool:
    d = rw.diagram
    (t, *_) = isolated(d, "Z", 2)
    for w in isolated(d, "X"):
        rw.apply("zero", BACKWARD, zero_flip_site(d, w, "X"))
        return True
    for w in isolated(d, "Z"):
        if w != t:
            rw.apply("zero-scalar", FORWARD, MatchSite((t, w), (), (), 0, (phase_of(d, w),)))
            return True
    if vertices(d, "star"):
        rw.apply("zero-scalar", BACKWARD, MatchSite((t,), (), (), 0, (0,)))
        rw.apply_first("star", FORWARD)
        return True
    return False


def _clear_boundary(rw: Rewriter) -> bool:
    d = rw.diagram
    for b in d.boundary:
        how, e, _ = attachment(d, b)
        if how == "wire":
            rw.apply("cup", BACKWARD, cup_edge_site(e))
            return True
    (t, *_) = isolated(d, "Z", 2)
    for w in d.spiders():
        if w == t or d.degree(w) == 0:
            continue
        if d.kind(w).is_x:
            rw.apply("zero", BACKWARD, zero_flip_site(d, w, "X"))
            return True
        if phase_of(d, w) != 0 or d.degree(w) > 1:
            rw.apply("spider", BACKWARD, spider_unfuse_site(d, w, 0, d.half_edges(w)[:1]))
            return True
    return False


def _zero_step(rw: Rewriter) -> bool:
    d = rw.diagram
    if d.loops:
        rw.apply_first("free-loop", FORWARD)
        return True
    if rw.try_apply("loop", FORWARD) or rw.try_apply("loop.dual", FORWARD):
        return True
    if vertices(d, "H"):
        if take_pairs(d, 2) is None:
            rw.apply("star-pair-pair", BACKWARD, MatchSite())
        rw.apply_first("euler", FORWARD)
        return True
    return _cut_edges(rw, False) or _clear_boundary(rw) or _absorb_scalars(rw)


def absorb_scalar_part(rw: Rewriter) -> None:
    """
    Leaves a single Z(π) as the whole scalar part, the rest of the diagram untouched.
    """
    expose_marker(rw)
    while _cut_edges(rw, True) or _absorb_scalars(rw):
        pass


def zero_normal_form(d: Diagram) -> Tuple[ZeroNF, Derivation]:
    """
    Rewrites a zero diagram to one Z(π) plus a Z(0) on every boundary wire.

    Hadamards are removed by Euler decomposition, every spider edge is cut by the zero rule and
    the leftover scalars are absorbed into the Z(π).

    Raises:
        NotZeroError: If `d` is not zero.
    """
    rw = Rewriter(d)
    simplify(rw)
    expose_marker(rw)
    while _zero_step(rw):
        pass
    form = ZeroNF(len(d.inputs), len(d.outputs))
    if not isomorphic(rw.diagram, form.diagram()):
        raise RuleError(f"zero pipeline stopped at {rw.diagram}")
    logger.debug(f"zero normal form after {len(rw.derivation)} steps")
    return form, rw.derivation
