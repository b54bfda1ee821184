import pytest

from scaledzx.core import (
    adjoint,
    bend,
    colour_swap,
    compact,
    components,
    compose,
    flip,
    isomorphic,
    relabel,
    tensor,
    tensor_all,
    unbend,
    validate,
)
from scaledzx.errors import BoundaryMismatchError
from scaledzx.models.Diagram import Diagram, DiagramBuilder
from scaledzx.models.VertexKind import VertexKind
from scaledzx.patterns import (
    bell,
    chain,
    cup,
    hadamard_wire,
    identity,
    pair,
    star,
    x_spider,
    z_spider,
    z_state,
)


def test_tensor_is_unital(bell_diagram):
    assert isomorphic(tensor(Diagram.empty(), bell_diagram), bell_diagram)
    assert isomorphic(tensor(bell_diagram, Diagram.empty()), bell_diagram)


def test_tensor_keeps_boundary_order():
    d = tensor(z_spider(0, 1, 1), x_spider(0, 1, 1))
    assert len(d.inputs) == 2 and len(d.outputs) == 2
    (z,) = d.vertices_of("Z")
    assert d.far_end(d.half_edges(d.inputs[0])[0]) == z


def test_tensor_is_associative():
    a, b, c = z_state(1), hadamard_wire(), pair(1, 2)
    assert isomorphic(tensor(tensor(a, b), c), tensor(a, tensor(b, c)))


def test_compose_with_identity_is_isomorphic():
    h = hadamard_wire()
    assert isomorphic(compose(identity(), h), h)
    assert isomorphic(compose(h, identity()), h)


def test_compose_is_associative():
    a = chain([VertexKind.z(1)])
    b = hadamard_wire()
    c = chain([VertexKind.x(2)])
    assert isomorphic(compose(compose(a, b), c), compose(a, compose(b, c)))


def test_compose_arity_mismatch():
    with pytest.raises(BoundaryMismatchError):
        compose(z_state(0), identity(2))


def test_compose_of_cup_and_cap_is_free_loop():
    d = compose(cup(), flip(cup()))
    assert d.is_scalar and d.loops == 1 and not d.vertices


def test_adjoint_is_involution():
    d = tensor(z_spider(1, 1, 2), pair(3, 1))
    assert adjoint(adjoint(d)) == d
    assert adjoint(z_state(1)).vertices == z_spider(3, 1, 0).vertices


def test_adjoint_reverses_compose():
    a, b = chain([VertexKind.z(1)]), chain([VertexKind.x(1), VertexKind.hadamard()])
    assert isomorphic(adjoint(compose(a, b)), compose(adjoint(b), adjoint(a)))


def test_colour_swap_is_involution(bell_diagram):
    assert colour_swap(colour_swap(bell_diagram)) == bell_diagram
    assert colour_swap(z_state(2)).vertices == {0: VertexKind.x(2)}


def test_validate_accepts_patterns(bell_diagram):
    assert validate(bell_diagram) == []
    assert validate(hadamard_wire()) == []


def test_validate_rejects_bad_hadamard_and_star():
    builder = DiagramBuilder()
    h = builder.add_vertex(VertexKind.hadamard())
    s = builder.add_vertex(VertexKind.star())
    z = builder.add_vertex(VertexKind.z(0))
    builder.add_edge(h, z)
    builder.add_edge(s, z)
    violations = validate(builder.build())
    assert any("Hadamard" in v for v in violations)
    assert any("star" in v for v in violations)


def test_validate_rejects_adjacent_hadamards():
    d = chain([VertexKind.hadamard(), VertexKind.hadamard()])
    assert any("wired to Hadamard" in v for v in validate(d))


def test_isomorphism_ignores_ids_but_not_boundary_order():
    d = tensor(z_spider(0, 0, 1), x_spider(0, 0, 1))
    assert isomorphic(d, relabel(d, 100, 50))
    assert isomorphic(d, compact(relabel(d, 7, 3)))
    assert not isomorphic(d, tensor(x_spider(0, 0, 1), z_spider(0, 0, 1)))


def test_isomorphism_counts_parallel_edges():
    single = DiagramBuilder()
    a, b = single.add_vertex(VertexKind.z(0)), single.add_vertex(VertexKind.x(0))
    single.add_edge(a, b)
    double = DiagramBuilder(single.build())
    double.add_edge(a, b)
    assert not isomorphic(single.build(), double.build())


def test_components(bell_diagram):
    comps = components(bell_diagram)
    assert sorted(len(c) for c in comps) == [1, 2, 2]


def test_bend_and_unbend():
    d = z_spider(1, 2, 1)
    bent = bend(d)
    assert bent.inputs == () and bent.outputs == d.inputs + d.outputs
    assert unbend(bent, 2) == d


def test_star_is_a_closed_vertex():
    d = star()
    assert d.is_scalar and list(d.vertices.values()) == [VertexKind.star()]
