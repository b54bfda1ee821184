"""
The rewrite engine: site checking, replacement, rule application, derivation replay and the
soundness sweep.
"""
import logging
from typing import Callable, Iterable, List, Optional, Tuple

from scaledzx.core import isomorphic, validate
from scaledzx.errors import DerivationError, RuleError, StaleSiteError
from scaledzx.models.Derivation import DIRECTIONS, Derivation, DerivationStep
from scaledzx.models.Diagram import Diagram, DiagramBuilder
from scaledzx.models.MatchSite import MatchSite
from scaledzx.models.RewriteRule import RewriteRule
from scaledzx.models.SoundnessReport import SoundnessReport
from scaledzx.semantics import interpret

logger = logging.getLogger(__name__)


def match_rule(d: Diagram, rule: RewriteRule, direction: str) -> List[MatchSite]:
    """
    All sites of `rule`'s pattern for `direction` in `d`, in a deterministic order.
    """
    if direction not in DIRECTIONS:
        raise RuleError(f"Unknown direction {direction!r}")
    return rule.matches(d, direction)


def extract_site(d: Diagram, site: MatchSite, n_inputs: int) -> Diagram:
    """
    The matched subdiagram, with one boundary point per leg in leg order. A cut edge (both of
    its legs listed, neither end matched) becomes a bare wire between its two boundary points.

    Raises:
        StaleSiteError: If the site references missing ids or is not closed.
    """
    matched = set(site.vertices)
    if len(matched) != len(site.vertices):
        raise StaleSiteError("site repeats a vertex")
    for v in matched:
        if v not in d.vertices:
            raise StaleSiteError(f"vertex {v} is not in the diagram")
    legs = list(site.legs)
    if len(set(legs)) != len(legs):
        raise StaleSiteError("site repeats a leg")
    leg_edges = {e for e, _ in legs}
    if leg_edges & set(site.edges):
        raise StaleSiteError("an edge is both internal and a leg")
    for e in list(site.edges) + sorted(leg_edges):
        if e not in d.edges:
            raise StaleSiteError(f"edge {e} is not in the diagram")
    for e in site.edges:
        u, v = d.edges[e]
        if u not in matched or v not in matched:
            raise StaleSiteError(f"internal edge {e} leaves the site")
    for v in matched:
        for e, k in d.half_edges(v):
            if e not in site.edges and (e, k) not in legs:
                raise StaleSiteError(f"half-edge ({e},{k}) at vertex {v} is not covered")
    if d.loops < site.loops:
        raise StaleSiteError("not enough free loops")

    first_free = d.next_node_id()
    points = [first_free + i for i in range(len(legs))]
    edges = {e: d.edges[e] for e in site.edges}
    index = {leg: i for i, leg in enumerate(legs)}
    # an edge with both ends in the site and both halves as legs splits into two leg edges
    spare_edge = d.next_edge_id()
    for i, (e, k) in enumerate(legs):
        inner = d.edges[e][1 - k]
        if inner in matched:
            key = e
            if e in edges:
                key, spare_edge = spare_edge, spare_edge + 1
            edges[key] = (inner, points[i]) if k == 1 else (points[i], inner)
            continue
        partner = index.get((e, 1 - k))
        if partner is None or d.edges[e][k] in matched:
            raise StaleSiteError(f"leg ({e},{k}) does not start in the site")
        if partner > i:
            edges[e] = (points[i], points[partner])
    vertices = {v: d.kind(v) for v in site.vertices}
    return Diagram(vertices, edges, points[:n_inputs], points[n_inputs:], site.loops)


def check_site(d: Diagram, site: MatchSite, pattern: Diagram) -> None:
    """
    Raises StaleSiteError unless the site embeds an instance of `pattern` in `d`.
    """
    if len(site.legs) != len(pattern.boundary):
        raise StaleSiteError(
            f"site has {len(site.legs)} legs, pattern has {len(pattern.boundary)} boundary points"
        )
    extracted = extract_site(d, site, len(pattern.inputs))
    if not isomorphic(extracted, pattern):
        raise StaleSiteError("site does not match the pattern")


def replace(d: Diagram, site: MatchSite, replacement: Diagram) -> Diagram:
    """
    Cuts the site out of `d` and plugs `replacement` in, its i-th boundary point joined to the
    i-th leg.

    Args:
        d (Diagram): The host diagram.
        site (MatchSite): A checked site.
        replacement (Diagram): The diagram to insert; same boundary size as the site.

    Returns:
        Diagram: The rewritten diagram.
    """
    matched = set(site.vertices)
    builder = DiagramBuilder(d)
    for e in site.edges:
        builder.remove_edge(e)
    for e in sorted({e for e, _ in site.legs}):
        builder.remove_edge(e)
    for v in site.vertices:
        builder.remove_vertex(v)

    joints = [builder.add_joint() for _ in site.legs]
    index = {leg: i for i, leg in enumerate(site.legs)}
    for i, (e, k) in enumerate(site.legs):
        outer = d.edges[e][k]
        if outer in matched:
            partner = index[(e, 1 - k)]
            if partner > i:
                builder.add_edge(joints[i], joints[partner])
        elif k == 1:
            builder.add_edge(joints[i], outer)
        else:
            builder.add_edge(outer, joints[i])

    plug = {b: joints[i] for i, b in enumerate(replacement.boundary)}
    for v, kind in replacement.vertices.items():
        plug[v] = builder.add_vertex(kind)
    for u, v in replacement.edges.values():
        builder.add_edge(plug[u], plug[v])
    builder.loops += replacement.loops - site.loops
    return builder.build()


def apply_rule(
    d: Diagram, rule: RewriteRule, site: MatchSite, direction: str
) -> Tuple[Diagram, DerivationStep]:
    """
    Applies `rule` at `site` in `direction`.

    Args:
        d (Diagram): The diagram to rewrite.
        rule (RewriteRule): The rule.
        site (MatchSite): A site, normally from `match_rule`.
        direction (str): "forward" or "backward".

    Returns:
        Tuple[Diagram, DerivationStep]: The rewritten diagram and the recorded step.

    Raises:
        StaleSiteError: If the site does not embed the pattern.
        RuleError: If the parameters are invalid or the result fails validation.
    """
    if direction not in DIRECTIONS:
        raise RuleError(f"Unknown direction {direction!r}")
    try:
        pattern = rule.pattern(direction, site.params)
        replacement = rule.replacement(direction, site.params)
    except (TypeError, ValueError, IndexError) as err:
        raise RuleError(f"{rule.rule_id}: bad parameters {site.params!r}: {err}") from err
    check_site(d, site, pattern)
    result = replace(d, site, replacement)
    violations = validate(result)
    if violations:
        raise RuleError(f"{rule.rule_id} produced an invalid diagram: {'; '.join(violations)}")
    return result, DerivationStep(rule.rule_id, direction, site)


def replay_steps(start: Diagram, steps: Iterable[DerivationStep]) -> Diagram:
    """
    Replays steps from `start`, returning the final diagram.

    Raises:
        DerivationError: If a step names an unknown rule or fails to apply.
    """
    from scaledzx.rules import lookup

    current = start
    for i, step in enumerate(steps):
        try:
            rule = lookup(step.rule_id)
            current, _ = apply_rule(current, rule, step.site, step.direction)
        except (KeyError, RuleError) as err:
            raise DerivationError(f"{step.rule_id} {step.direction}: {err}", i) from err
    return current


def replay_derivation(der: Derivation) -> Diagram:
    """
    Replays `der` from its start and checks that it ends where it claims.

    Raises:
        DerivationError: If a step fails or the end differs.
    """
    end = replay_steps(der.start, der.steps)
    if end != der.end:
        raise DerivationError("replay does not reach the recorded end diagram")
    return end


class Rewriter:
    """
    Applies rules to a current diagram while recording a Derivation.

    Attributes:
        diagram (Diagram): The current diagram.
        derivation (Derivation): Every step applied so far.
    """

    def __init__(self, diagram: Diagram) -> None:
        self.diagram = diagram
        self.derivation = Derivation(diagram)

    def apply(self, rule_id: str, direction: str, site: MatchSite) -> Diagram:
        from scaledzx.rules import lookup

        self.diagram, step = apply_rule(self.diagram, lookup(rule_id), site, direction)
        self.derivation.append(step, self.diagram)
        logger.debug(f"{rule_id} {direction} -> {len(self.diagram.vertices)} vertices")
        return self.diagram

    def sites(self, rule_id: str, direction: str) -> List[MatchSite]:
        from scaledzx.rules import lookup

        return match_rule(self.diagram, lookup(rule_id), direction)

    def find(
        self,
        rule_id: str,
        direction: str,
        where: Optional[Callable[[MatchSite], bool]] = None,
    ) -> Optional[MatchSite]:
        for site in self.sites(rule_id, direction):
            if where is None or where(site):
                return site
        return None

    def apply_first(
        self,
        rule_id: str,
        direction: str,
        where: Optional[Callable[[MatchSite], bool]] = None,
    ) -> Diagram:
        """
        Applies the first site satisfying `where`.

        Raises:
            RuleError: If no site qualifies.
        """
        site = self.find(rule_id, direction, where)
        if site is None:
            raise RuleError(f"no {direction} site for {rule_id}")
        return self.apply(rule_id, direction, site)

    def try_apply(
        self,
        rule_id: str,
        direction: str,
        where: Optional[Callable[[MatchSite], bool]] = None,
    ) -> bool:
        site = self.find(rule_id, direction, where)
        if site is None:
            return False
        self.apply(rule_id, direction, site)
        return True

    def run(self, steps: Iterable[Tuple[str, str, MatchSite]]) -> Diagram:
        for rule_id, direction, site in steps:
            self.apply(rule_id, direction, site)
        return self.diagram


def verify_rule_soundness(rule: RewriteRule, legs: int = 3) -> SoundnessReport:
    """
    Compares both sides of every instantiation of `rule` under the exact oracle.

    Args:
        rule (RewriteRule): The rule to check.
        legs (int): Leg-count bound per spider.

    Returns:
        SoundnessReport: Counts and failing parameter tuples.
    """
    failures = []
    count = 0
    for params in rule.instances(legs):
        count += 1
        if interpret(rule.lhs(params)) != interpret(rule.rhs(params)):
            failures.append(tuple(params))
    if failures and not rule.negative_control:
        logger.warning(f"{rule.rule_id}: {len(failures)} of {count} instances unsound")
    return SoundnessReport(rule.rule_id, count, tuple(failures), rule.derived, rule.negative_control)
