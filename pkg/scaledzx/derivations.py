"""
Stored derivations of the scalar lemmas and identities, built by driving the rewrite engine.

Each fixture starts at one side of an identity and is rewritten step by step to the other side,
using primitive rules and the lemma rules of fixtures listed before it.
"""
import logging
from functools import lru_cache
from typing import Callable, Dict, List, NamedTuple, Optional

from scaledzx import zero
from scaledzx.core import isomorphic, tensor_all
from scaledzx.errors import DerivationError
from scaledzx.models.Derivation import BACKWARD, FORWARD, Derivation
from scaledzx.models.Diagram import Diagram, HalfEdge
from scaledzx.models.Fixture import Fixture
from scaledzx.models.MatchSite import MatchSite
from scaledzx.patterns import pair, pairs, star, x_scalar, x_state, z_scalar, z_state
from scaledzx.rewrite import Rewriter, replay_steps
from scaledzx.rules.matching import isolated, pairs as find_pairs, phase_of, vertices
from scaledzx.rules.primitive import colour_backward_site, cup_edge_site, spider_unfuse_site

logger = logging.getLogger(__name__)


class _Recipe(NamedTuple):
    description: str
    start: Callable[[], Diagram]
    target: Callable[[], Diagram]
    steps: Callable[[Rewriter], None]
    lemma: Optional[str] = None


def _star_pair_pair(rw: Rewriter) -> None:
    rw.apply("star", BACKWARD, MatchSite())
    (v, *_) = isolated(rw.diagram, "Z", 0)
    rw.apply("loop", BACKWARD, MatchSite((v,), (), (), 0, (0, 0)))
    ((e,),) = [loops for loops in map(rw.diagram.self_loops, vertices(rw.diagram, "Z", 0)) if loops]
    rw.apply("cup.dual", BACKWARD, cup_edge_site(e))
    rw.apply_first("hopf", FORWARD)
    rw.apply_first("star", FORWARD)
    (x,) = isolated(rw.diagram, "X", 0)
    rw.apply("colour", BACKWARD, colour_backward_site(rw.diagram, x))
    rw.apply_first("star", FORWARD)


def _swap_pair(rw: Rewriter) -> None:
    ((z, x, _),) = find_pairs(rw.diagram)
    d = rw.diagram
    site = MatchSite((z,), (), tuple(d.half_edges(z)), 0, (phase_of(d, z), 1))
    rw.apply("colour", FORWARD, site)
    rw.apply("colour", BACKWARD, colour_backward_site(rw.diagram, x))


def _drop_z_phase(rw: Rewriter, z: int, x: int) -> None:
    """
    pair(α,0) → pair(0,0): split Z(α) off a fresh Z(0), then copy the X(0) state through it.
    """
    d = rw.diagram
    rw.apply("spider", BACKWARD, spider_unfuse_site(d, z, phase_of(d, z), d.half_edges(z)))
    rw.apply_first("copy", FORWARD, lambda site: x in site.vertices)


def _overlap_ket_zero(rw: Rewriter) -> None:
    ((z, x, _),) = find_pairs(rw.diagram)
    _drop_z_phase(rw, z, x)


def _new_vertex(rw: Rewriter, before, kind: str, phase: int) -> int:
    (v,) = [v for v in vertices(rw.diagram, kind, phase) if v not in before]
    return v


def _pi_multiplication(rw: Rewriter) -> None:
    """
    pair(π/2,π) ⊗ pair(π/2,π): unfuse -π/2 off the second Z, commute the first pair's X(π) in,
    commute it back out through the Z(π) to leave pair(π,π), then fuse and drop the leftover.
    """
    _, (zb, xb, _) = find_pairs(rw.diagram, 1, 2)
    before = set(rw.diagram.vertices)
    rw.apply("spider", BACKWARD, spider_unfuse_site(rw.diagram, zb, 3, []))
    zm = _new_vertex(rw, before, "Z", 3)
    zc = _new_vertex(rw, before, "Z", 2)
    before = set(rw.diagram.vertices)
    rw.apply_first("pi-comm", BACKWARD, lambda site: zm in site.vertices)
    za = _new_vertex(rw, before, "Z", 1)
    rw.apply_first("pi-comm", FORWARD, lambda site: zc in site.vertices)
    rw.apply_first("spider.dual", FORWARD, lambda site: xb in site.vertices)
    (zn,) = rw.diagram.neighbours(za)
    rw.apply_first("spider", FORWARD, lambda site: set(site.vertices) == {za, zn})
    ((z, x, _),) = find_pairs(rw.diagram, 3, 0)
    _drop_z_phase(rw, z, x)


def _colour_scalar(rw: Rewriter) -> None:
    (x,) = isolated(rw.diagram, "X", 2)
    rw.apply("colour", BACKWARD, colour_backward_site(rw.diagram, x))


def _toward(d: Diagram, v: int, w: int) -> List[HalfEdge]:
    return [h for h in d.half_edges(v) if d.far_end(h) == w]


def _y_state(rw: Rewriter) -> None:
    """
    X(-π/2) state: recolour to Z(-π/2)–H, expand the H by euler, then fuse and copy the
    chain away until only the Z(π/2) state is left.
    """
    rw.apply_first("colour.dual", FORWARD)
    rw.apply("star-pair-pair", BACKWARD, MatchSite())
    rw.apply_first("euler", FORWARD)
    rw.apply_first("spider", FORWARD)
    rw.apply_first("copy.dual", FORWARD)
    rw.apply_first("spider", FORWARD)


def _swap_omega(rw: Rewriter, x: int) -> None:
    """
    pair(0,0) ⊗ pair(α,α) → pair(α,π) ⊗ pair(-α,-α): split an X(π) off the pair's X(α) and
    commute it through the Z(α).
    """
    d = rw.diagram
    before = set(d.vertices)
    rw.apply("spider.dual", BACKWARD, spider_unfuse_site(d, x, 2, d.half_edges(x)))
    x2 = _new_vertex(rw, before, "X", 2)
    rw.apply_first("pi-comm", FORWARD, lambda site: x2 in site.vertices)


def _scalar_pi_2_equality(rw: Rewriter) -> None:
    rw.apply("star-pair-pair", BACKWARD, MatchSite())
    ((_, x, _),) = find_pairs(rw.diagram, 3, 3)
    _swap_omega(rw, x)


def _euler_square(rw: Rewriter, e: int) -> None:
    """
    Grows Z(π/2)X(π/2)Z(π/2) twice over on edge `e` at the cost of a pair(π,π/2), then folds
    each copy back into a Hadamard with euler, spending a pair(-π/2,-π/2) each time. The two
    Hadamards cancel and leave `e` as it was.
    """
    d = rw.diagram
    p, q = d.edges[e]
    before = set(d.vertices)
    rw.apply("cup", BACKWARD, cup_edge_site(e))
    c = _new_vertex(rw, before, "Z", 0)

    d = rw.diagram
    before = set(d.vertices)
    rw.apply("spider", BACKWARD, spider_unfuse_site(d, c, 3, _toward(d, c, p)))
    j = _new_vertex(rw, before, "Z", 3)
    f = _new_vertex(rw, before, "Z", 1)

    (middle,) = rw.diagram.edges_between(j, f)
    before = set(rw.diagram.vertices)
    rw.apply("cup.dual", BACKWARD, cup_edge_site(middle))
    k = _new_vertex(rw, before, "X", 0)

    d = rw.diagram
    before = set(d.vertices)
    rw.apply("spider.dual", BACKWARD, spider_unfuse_site(d, k, 3, _toward(d, k, j)))
    i = _new_vertex(rw, before, "X", 3)
    e1 = _new_vertex(rw, before, "X", 1)

    d = rw.diagram
    rw.apply("spider", BACKWARD, spider_unfuse_site(d, j, 1, _toward(d, j, p)))

    before = set(rw.diagram.vertices)
    rw.apply_first("pi-comm.dual", BACKWARD, lambda site: i in site.vertices)
    g = _new_vertex(rw, before, "Z", 2)
    b = _new_vertex(rw, before, "X", 1)

    d = rw.diagram
    rw.apply("spider", BACKWARD, spider_unfuse_site(d, g, 1, _toward(d, g, b)))
    for x in (b, e1):
        rw.apply_first("euler", BACKWARD, lambda site: x in site.vertices)

    h1, h2 = vertices(rw.diagram, "H")
    (between,) = rw.diagram.edges_between(h1, h2)
    before = set(rw.diagram.vertices)
    rw.apply("cup.dual", BACKWARD, cup_edge_site(between))
    x0 = _new_vertex(rw, before, "X", 0)
    before = set(rw.diagram.vertices)
    rw.apply("colour", BACKWARD, colour_backward_site(rw.diagram, x0))
    z0 = _new_vertex(rw, before, "Z", 0)
    rw.apply_first("cup", FORWARD, lambda site: site.vertices == (z0,))


def _omega_dagger_squared(rw: Rewriter) -> None:
    rw.apply("star-pair-pair", BACKWARD, MatchSite())
    rw.apply_first("pi-remove", BACKWARD)
    rw.apply_first("pi-multiplication", BACKWARD, lambda site: site.params == (1, 3))
    rw.apply_first("innerprod-wlog", FORWARD, lambda site: site.params == (1, 2))
    ((_, _, e),) = find_pairs(rw.diagram, 3, 2)
    _euler_square(rw, e)
    rw.apply_first("star-pair-pair", FORWARD)


def _omega_squared(rw: Rewriter) -> None:
    rw.apply("star-pair-pair", BACKWARD, MatchSite())
    for _ in range(2):
        _, x, _ = find_pairs(rw.diagram, 1, 1)[0]
        _swap_omega(rw, x)
    rw.apply_first("omega-dagger-squared", FORWARD)
    rw.apply_first("pi-multiplication", FORWARD, lambda site: site.params == (1, 1))
    rw.apply_first("pi-multiplication", FORWARD, lambda site: site.params == (2, 3))
    rw.apply_first("star-pair-pair", FORWARD)


def _minus_omega(rw: Rewriter) -> None:
    rw.apply("star-pair-pair", BACKWARD, MatchSite())
    rw.apply_first("pi-multiplication", BACKWARD, lambda site: site.params == (3, 3))
    rw.apply_first("scalar-pi-2-equality", BACKWARD)


def _lemmas(*names: str) -> Callable[[Rewriter], None]:
    def steps(rw: Rewriter) -> None:
        for rule_id in names:
            rw.apply_first(rule_id, FORWARD)

    return steps


def _omega_inverse_pair(rw: Rewriter) -> None:
    rw.apply_first("scalar-pi-2-equality", FORWARD)
    rw.apply_first("omega-squared", FORWARD)
    rw.apply_first("pi-multiplication", FORWARD, lambda site: site.params == (3, 1))
    rw.apply_first("pi-remove", FORWARD)
    rw.apply_first("star-pair-pair", FORWARD)


def _pi_remove(rw: Rewriter) -> None:
    rw.apply_first("innerprod-wlog", FORWARD, lambda site: site.params == (0, 2))
    rw.apply_first("overlap-ket-zero", FORWARD, lambda site: site.params == (2,))


def _zero_marker_target() -> Diagram:
    return tensor_all([star(), pair(3, 3), z_scalar(2)])


RECIPES: Dict[str, _Recipe] = {
    "halfscalar_innerprodgr2": _Recipe(
        "star ⊗ pair(0,0) ⊗ pair(0,0) = 1",
        lambda: tensor_all([star(), pair(), pair()]), Diagram.empty, _star_pair_pair,
        "star-pair-pair",
    ),
    "innerprod_wlog": _Recipe(
        "pair(π/2,π) = pair(π,π/2)", lambda: pair(1, 2), lambda: pair(2, 1), _swap_pair,
        "innerprod-wlog",
    ),
    "pi_multiplication": _Recipe(
        "pair(π/2,π) ⊗ pair(π/2,π) = pair(0,0) ⊗ pair(π,π)",
        lambda: pairs(2, 1, 2), lambda: tensor_all([pair(2, 2), pair()]), _pi_multiplication,
        "pi-multiplication",
    ),
    "overlap_with_ket_zero": _Recipe(
        "pair(π/2,0) = pair(0,0)", lambda: pair(1, 0), pair, _overlap_ket_zero,
        "overlap-ket-zero",
    ),
    "y_states": _Recipe(
        "X(-π/2) state = star ⊗ pair(-π/2,-π/2) ⊗ Z(π/2) state",
        lambda: x_state(3), lambda: tensor_all([star(), pair(3, 3), z_state(1)]), _y_state,
        "y-state",
    ),
    "unique_zero_x": _Recipe(
        "X(π) scalar = Z(π) scalar", lambda: x_scalar(2), lambda: z_scalar(2), _colour_scalar,
    ),
    "unique_zero_plus": _Recipe(
        "pair(π/2,-π/2) = star ⊗ pair(-π/2,-π/2) ⊗ Z(π) scalar",
        lambda: pair(1, 3), _zero_marker_target, zero.expose_marker,
    ),
    "unique_zero_minus": _Recipe(
        "pair(-π/2,π/2) = star ⊗ pair(-π/2,-π/2) ⊗ Z(π) scalar",
        lambda: pair(3, 1), _zero_marker_target, zero.expose_marker,
    ),
    "pi_remove": _Recipe(
        "pair(0,π) = pair(0,0)", lambda: pair(0, 2), pair, _pi_remove, "pi-remove",
    ),
    "scalar_pi_2_equality": _Recipe(
        "pair(-π/2,-π/2) = star ⊗ pair(0,0) ⊗ pair(-π/2,π) ⊗ pair(π/2,π/2)",
        lambda: pair(3, 3), lambda: tensor_all([star(), pair(), pair(3, 2), pair(1, 1)]),
        _scalar_pi_2_equality, "scalar-pi-2-equality",
    ),
    "omega_dagger_squared": _Recipe(
        "pair(-π/2,-π/2)² = pair(0,0)³ ⊗ pair(-π/2,π)",
        lambda: pairs(2, 3, 3), lambda: tensor_all([pairs(3), pair(3, 2)]),
        _omega_dagger_squared, "omega-dagger-squared",
    ),
    "omega_squared": _Recipe(
        "pair(π/2,π/2)² = pair(0,0)³ ⊗ pair(π/2,π)",
        lambda: pairs(2, 1, 1), lambda: tensor_all([pairs(3), pair(1, 2)]),
        _omega_squared, "omega-squared",
    ),
    "scalar_pi_2_inverse": _Recipe(
        "pair(-π/2,-π/2) ⊗ pair(π/2,π/2) = pair(0,0)⁴",
        lambda: tensor_all([pair(3, 3), pair(1, 1)]), lambda: pairs(4), _omega_inverse_pair,
        "scalar-pi-2-inverse",
    ),
    "omega_inverses": _Recipe(
        "star ⊗ pair(-π/2,-π/2) ⊗ star ⊗ pair(π/2,π/2) = 1",
        lambda: tensor_all([star(), pair(3, 3), star(), pair(1, 1)]), Diagram.empty,
        _lemmas("scalar-pi-2-inverse", "star-pair-pair", "star-pair-pair"), "omega-inverses",
    ),
    "minus_omega": _Recipe(
        "pair(π,π) ⊗ pair(π/2,π/2) = pair(-π/2,π) ⊗ pair(-π/2,-π/2)",
        lambda: tensor_all([pair(2, 2), pair(1, 1)]),
        lambda: tensor_all([pair(3, 2), pair(3, 3)]),
        _minus_omega, "minus-omega",
    ),
}


def fixture_names() -> List[str]:
    return list(RECIPES)


def established_rule(name: str) -> Optional[str]:
    """
    The lemma rule a fixture proves, or None for identities with no rule of their own.
    """
    return RECIPES[name].lemma


@lru_cache(maxsize=None)
def fixture(name: str) -> Fixture:
    """
    Builds the named fixture by running its recipe on the engine.

    Raises:
        KeyError: For unknown names.
        DerivationError: If the recipe does not end at its target.
    """
    try:
        recipe = RECIPES[name]
    except KeyError:
        raise KeyError(f"Unknown fixture {name!r}") from None
    start = recipe.start()
    rw = Rewriter(start)
    recipe.steps(rw)
    target = recipe.target()
    if not isomorphic(rw.diagram, target):
        raise DerivationError(f"{name} ends at {rw.diagram}, not at its target", len(rw.derivation))
    logger.debug(f"{name}: {len(rw.derivation)} steps")
    return Fixture(name, recipe.description, start, target, rw.derivation)


def replay_fixture(fx: Fixture, text: Optional[str] = None) -> Diagram:
    """
    Replays a fixture from its serialised steps (its own text by default).
    """
    steps = Derivation.parse_steps(fx.to_text() if text is None else text)
    return replay_steps(fx.start, steps)
