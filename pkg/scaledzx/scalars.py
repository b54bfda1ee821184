"""
Scalar diagrams: decomposition into small pieces and the scalar normal form.

The pipeline turns every single spider into a pair, orients the pairs, collapses the phase
pieces onto one of the eight representatives and compresses stars against pairs(0,0).
"""
import logging
from collections import Counter
from typing import List, Optional, Tuple, Union

from scaledzx import zero
from scaledzx.errors import NonScalarError, ScalarDecompositionError
from scaledzx.models.Derivation import BACKWARD, FORWARD, Derivation
from scaledzx.models.Diagram import Diagram
from scaledzx.models.ExactScalar import ExactScalar
from scaledzx.models.MatchSite import MatchSite
from scaledzx.models.ScalarNF import ScalarNF
from scaledzx.models.ZeroNF import ZeroNF
from scaledzx.rewrite import Rewriter
from scaledzx.rules.matching import isolated, pairs, phase_of, vertices
from scaledzx.rules.primitive import colour_backward_site, spider_unfuse_site
from scaledzx.scalar_forms import PHASE_REPRESENTATIVES, REPRESENTATIVE_MODULUS, modulus_counts
from scaledzx.simplify import is_piece, scalar_components, simplify

logger = logging.getLogger(__name__)

Step = Tuple[str, str, Optional[Tuple]]


def _require_scalar(d: Diagram) -> None:
    if not d.is_scalar:
        raise NonScalarError(f"expected a scalar diagram, got {len(d.boundary)} boundary wires")


def decompose_scalar(d: Diagram) -> Diagram:
    """
    Rewrites a scalar diagram into stars, single spiders and Z–X pairs.

    Raises:
        NonScalarError: If `d` has boundary wires.
    """
    _require_scalar(d)
    rw = Rewriter(d)
    simplify(rw)
    return rw.diagram


def _new_vertices(rw: Rewriter, before) -> List[int]:
    return [v for v in rw.diagram.vertices if v not in before]


def _z_single_to_pair(rw: Rewriter, z: int) -> None:
    """
    Z(γ) → X(γ) → X(-π/2)–X(γ+π/2) → star ⊗ pair(-π/2,-π/2) ⊗ pair(π/2, γ+π/2).
    """
    d = rw.diagram
    before = set(d.vertices)
    rw.apply("colour", FORWARD, MatchSite((z,), (), (), 0, (phase_of(d, z), 0)))
    (x,) = _new_vertices(rw, before)
    before = set(rw.diagram.vertices)
    rw.apply("spider.dual", BACKWARD, spider_unfuse_site(rw.diagram, x, 3, []))
    d = rw.diagram
    (state,) = [v for v in _new_vertices(rw, before) if phase_of(d, v) == 3]
    rw.apply("y-state", FORWARD, MatchSite((state,), (), tuple(d.half_edges(state)), 0, ()))


def _singles(rw: Rewriter) -> bool:
    d = rw.diagram
    for x in isolated(d, "X"):
        rw.apply("colour", BACKWARD, colour_backward_site(d, x))
        return True
    for z in isolated(d, "Z"):
        if phase_of(d, z) != 2:
            _z_single_to_pair(rw, z)
            return True
    return False


def orient_step(alpha: int, beta: int) -> Optional[Tuple[str, Tuple]]:
    """
    The lemma moving pair(alpha, beta) toward pair(0,0), Q± or pair(a,π); None when it is there.
    """
    if beta == 0:
        return ("overlap-ket-zero", (alpha,)) if alpha else None
    if alpha == 0:
        return ("pi-remove", ()) if beta == 2 else ("innerprod-wlog", (0, beta))
    if alpha == 2 and beta in (1, 3):
        return "innerprod-wlog", (2, beta)
    return None


def _orient(rw: Rewriter) -> bool:
    for z, x, _ in pairs(rw.diagram):
        step = orient_step(phase_of(rw.diagram, z), phase_of(rw.diagram, x))
        if step is not None:
            rule_id, params = step
            rw.apply_first(rule_id, FORWARD, lambda site: site.params == params)
            return True
    return False


def _phase_steps(d: Diagram) -> List[Step]:
    """
    The next lemma applications collapsing phase pieces, empty once at a representative.
    """
    count = Counter((phase_of(d, z), phase_of(d, x)) for z, x, _ in pairs(d))
    q_plus, q_minus = count[(1, 1)], count[(3, 3)]
    halves = sorted(a for (a, b), n in count.items() if b == 2 and a != 0 for _ in range(n))
    if q_plus and q_minus:
        return [("scalar-pi-2-inverse", FORWARD, None)]
    if q_minus >= 2:
        return [("omega-dagger-squared", FORWARD, None)]
    if q_plus >= 2:
        return [("omega-squared", FORWARD, None)]
    if count[(0, 2)]:
        return [("pi-remove", FORWARD, None)]
    if len(halves) >= 2:
        return [("pi-multiplication", FORWARD, (halves[0], halves[1]))]
    if q_plus and halves == [2]:
        return [("minus-omega", FORWARD, None)]
    if q_plus and halves == [3]:
        return [("star-pair-pair", BACKWARD, None), ("scalar-pi-2-equality", BACKWARD, None)]
    if q_minus and halves in ([1], [2]):
        return [("scalar-pi-2-equality", FORWARD, None)]
    return []


def _collapse(rw: Rewriter) -> bool:
    steps = _phase_steps(rw.diagram)
    for rule_id, direction, params in steps:
        if params is None:
            rw.apply_first(rule_id, direction)
        else:
            rw.apply_first(rule_id, direction, lambda site, p=params: site.params == p)
    return bool(steps)


def _compress(rw: Rewriter) -> bool:
    d = rw.diagram
    if vertices(d, "star") and len(pairs(d, 0, 0)) >= 2:
        rw.apply_first("star-pair-pair", FORWARD)
        return True
    return False


def read_scalar_nf(d: Diagram) -> ScalarNF:
    """
    Reads the ScalarNF off a scalar part already in normal form.

    Raises:
        ScalarDecompositionError: If the scalar part is not a normal form.
    """
    phase_pairs, n_pairs, n_stars = [], 0, 0
    for comp in scalar_components(d):
        if not is_piece(d, comp):
            raise ScalarDecompositionError(f"component {sorted(comp)} is not a scalar piece")
        if len(comp) == 1:
            (v,) = comp
            if not d.kind(v).is_star:
                raise ScalarDecompositionError(f"single spider {v} left in the scalar part")
            n_stars += 1
            continue
        (z,) = [v for v in comp if d.kind(v).is_z]
        (x,) = [v for v in comp if d.kind(v).is_x]
        phases = (phase_of(d, z), phase_of(d, x))
        if phases == (0, 0):
            n_pairs += 1
        else:
            phase_pairs.append(phases)
    for s, representative in PHASE_REPRESENTATIVES.items():
        if sorted(representative) != sorted(phase_pairs):
            continue
        r = REPRESENTATIVE_MODULUS[s] + n_pairs - 2 * n_stars
        if modulus_counts(r - REPRESENTATIVE_MODULUS[s]) != (n_pairs, n_stars):
            raise ScalarDecompositionError(
                f"{n_pairs} pairs and {n_stars} stars is not a modulus form"
            )
        return ScalarNF(r, s)
    raise ScalarDecompositionError(f"phase pieces {sorted(phase_pairs)} are not a representative")


def normalize_scalar_part(rw: Rewriter) -> Union[ScalarNF, ZeroNF]:
    """
    Brings the scalar components of an already simplified diagram to normal form; the rest of
    the diagram is left alone. A zero scalar part becomes a single Z(π).
    """
    while _singles(rw):
        pass
    if zero.find_zero_piece(rw.diagram) is not None:
        zero.absorb_scalar_part(rw)
        return ZeroNF(0, 0)
    while _orient(rw):
        pass
    while _collapse(rw):
        pass
    while _compress(rw):
        pass
    return read_scalar_nf(rw.diagram)


def normalize_scalar_diagram(d: Diagram) -> Tuple[Union[ScalarNF, ZeroNF], Derivation]:
    """
    Rewrites a scalar diagram to its normal form, recording every step.

    Raises:
        NonScalarError: If `d` has boundary wires.
    """
    _require_scalar(d)
    rw = Rewriter(d)
    simplify(rw)
    form = normalize_scalar_part(rw)
    logger.debug(f"scalar normal form {form.to_text()} after {len(rw.derivation)} steps")
    return form, rw.derivation


def scalar_normal_form(value: ExactScalar) -> Union[ScalarNF, ZeroNF]:
    """
    The canonical form of an exact scalar; ZeroNF(0, 0) for zero.
    """
    if value.is_zero:
        return ZeroNF(0, 0)
    return ScalarNF.of(value)
