import pytest

from scaledzx.core import colour_swap, isomorphic, tensor_all
from scaledzx.errors import DerivationError, RuleError, StaleSiteError
from scaledzx.models.Derivation import BACKWARD, FORWARD, Derivation, DerivationStep
from scaledzx.models.Diagram import Diagram, DiagramBuilder
from scaledzx.models.MatchSite import MatchSite
from scaledzx.models.VertexKind import VertexKind
from scaledzx.patterns import chain, pair, star, x_spider, z_scalar, z_spider
from scaledzx.rewrite import Rewriter, apply_rule, replay_derivation, replay_steps
from scaledzx.rules import lookup
from scaledzx.semantics import semantically_equal


def test_spider_fusion_keeps_semantics():
    d = chain([VertexKind.z(1), VertexKind.z(2)])
    rw = Rewriter(d)
    rw.apply_first("spider", FORWARD)
    assert isomorphic(rw.diagram, z_spider(3, 1, 1))
    assert semantically_equal(d, rw.diagram)
    assert len(rw.derivation) == 1


def test_stale_site_is_rejected():
    d = chain([VertexKind.z(1), VertexKind.z(2)])
    rw = Rewriter(d)
    (site,) = rw.sites("spider", FORWARD)
    rw.apply("spider", FORWARD, site)
    with pytest.raises(StaleSiteError):
        rw.apply("spider", FORWARD, site)


def test_site_must_match_pattern():
    d = tensor_all([star(), z_scalar(1)])
    (s,) = d.vertices_of("star")
    (z,) = d.vertices_of("Z")
    with pytest.raises(StaleSiteError):
        apply_rule(d, lookup("star"), MatchSite((s, z)), FORWARD)


def test_bad_parameters_are_rule_errors():
    with pytest.raises(RuleError):
        apply_rule(pair(), lookup("spider"), MatchSite((0,), (), (), 0, ("x",)), BACKWARD)


def test_apply_first_without_site():
    with pytest.raises(RuleError):
        Rewriter(pair()).apply_first("star", FORWARD)


def test_star_backward_then_forward():
    rw = Rewriter(pair())
    rw.apply("star", BACKWARD, MatchSite())
    assert len(rw.diagram.vertices) == 4
    rw.apply_first("star", FORWARD)
    assert isomorphic(rw.diagram, pair())
    assert rw.try_apply("star", FORWARD) is False


def test_derivation_text_replays():
    d = chain([VertexKind.z(1), VertexKind.z(2), VertexKind.z(3)])
    rw = Rewriter(d)
    while rw.try_apply("spider", FORWARD):
        pass
    steps = Derivation.parse_steps("# fuse\n" + rw.derivation.to_text())
    assert len(steps) == 2
    assert replay_steps(d, steps) == rw.diagram
    assert replay_derivation(rw.derivation) == rw.diagram


def test_replay_reports_failing_step():
    steps = [
        DerivationStep("star", BACKWARD, MatchSite()),
        DerivationStep("loop", FORWARD, MatchSite((99,), (), (), 0, (0, 0))),
    ]
    with pytest.raises(DerivationError) as info:
        replay_steps(pair(), steps)
    assert info.value.step_index == 1


def test_replay_unknown_rule():
    with pytest.raises(DerivationError):
        replay_steps(pair(), [DerivationStep("nope", FORWARD, MatchSite())])


def test_dual_rule_sites_come_from_the_swapped_diagram():
    d = chain([VertexKind.x(1), VertexKind.x(1)])
    rw = Rewriter(d)
    assert rw.sites("spider", FORWARD) == []
    rw.apply_first("spider.dual", FORWARD)
    assert isomorphic(rw.diagram, chain([VertexKind.x(2)]))


def parallel_pair(multiplicity: int) -> Diagram:
    builder = DiagramBuilder()
    u = builder.add_vertex(VertexKind.z(0))
    v = builder.add_vertex(VertexKind.z(1))
    for _ in range(multiplicity):
        builder.add_edge(u, v)
    builder.add_edge(u, builder.add_output())
    builder.add_edge(v, builder.add_output())
    return builder.build()


def looped_spider(loops: int) -> Diagram:
    builder = DiagramBuilder()
    v = builder.add_vertex(VertexKind.z(0))
    for _ in range(loops):
        builder.add_edge(v, v)
    builder.add_edge(v, builder.add_output())
    return builder.build()


@pytest.mark.parametrize("multiplicity", [2, 3])
def test_fusing_parallel_edges_leaves_self_loops(multiplicity):
    d = parallel_pair(multiplicity)
    rw = Rewriter(d)
    rw.apply_first("spider", FORWARD)
    (v,) = rw.diagram.vertices
    assert len(rw.diagram.self_loops(v)) == multiplicity - 1
    assert semantically_equal(d, rw.diagram)
    while rw.try_apply("loop", FORWARD):
        pass
    assert isomorphic(rw.diagram, z_spider(1, 0, 2))


def test_removing_one_of_two_self_loops():
    d = looped_spider(2)
    rw = Rewriter(d)
    rw.apply_first("loop", FORWARD)
    assert isomorphic(rw.diagram, looped_spider(1))
    rw.apply_first("loop", FORWARD)
    assert isomorphic(rw.diagram, z_spider(0, 0, 1))
    assert replay_derivation(rw.derivation) == rw.diagram


def test_dual_loop_with_two_self_loops():
    d = colour_swap(looped_spider(2))
    rw = Rewriter(d)
    while rw.try_apply("loop.dual", FORWARD):
        pass
    assert isomorphic(rw.diagram, x_spider(0, 0, 1))
    assert semantically_equal(d, rw.diagram)
