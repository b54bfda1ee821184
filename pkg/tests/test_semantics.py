import pytest

from scaledzx.core import colour_swap, compose, tensor_all
from scaledzx.errors import InvalidDiagramError, NonScalarError
from scaledzx.models.Diagram import Diagram
from scaledzx.models.ExactScalar import ExactScalar
from scaledzx.models.RingElement import HALF, INV_SQRT2, ONE, ZERO, RingElement
from scaledzx.models.VertexKind import VertexKind
from scaledzx.patterns import (
    chain,
    free_loop,
    hadamard_wire,
    identity,
    pair,
    star,
    x_scalar,
    x_spider,
    z_scalar,
    z_spider,
    z_state,
)
from scaledzx.semantics import interpret, is_zero_matrix, scalar_value, semantically_equal


def test_empty_diagram_is_one():
    assert interpret(Diagram.empty()).rows() == [[ONE]]


def test_star_is_half():
    assert interpret(star()).rows() == [[HALF]]
    assert scalar_value(star()) == ExactScalar(-2, 0)


def test_free_loop_is_two():
    assert scalar_value(free_loop()) == ExactScalar(2, 0)


@pytest.mark.parametrize(
    "alpha, beta, value",
    [
        (0, 0, ExactScalar(1, 0)),
        (1, 1, ExactScalar(2, 1)),
        (3, 3, ExactScalar(2, 7)),
        (1, 2, ExactScalar(1, 2)),
        (2, 2, ExactScalar(1, 4)),
        (1, 3, ExactScalar.zero()),
        (3, 1, ExactScalar.zero()),
    ],
)
def test_pair_values(alpha, beta, value):
    assert scalar_value(pair(alpha, beta)) == value


@pytest.mark.parametrize("scalar", [z_scalar(2), x_scalar(2), pair(1, 3), pair(3, 1)])
def test_zero_scalars(scalar):
    assert is_zero_matrix(scalar)


def test_bell_state(bell_diagram):
    m = interpret(bell_diagram)
    assert m.shape == (4, 1)
    assert [row[0] for row in m.rows()] == [INV_SQRT2, ZERO, ZERO, INV_SQRT2]


def test_identity_and_hadamard():
    assert interpret(identity()).rows() == [[ONE, ZERO], [ZERO, ONE]]
    h = interpret(hadamard_wire())
    assert h.rows() == [[INV_SQRT2, INV_SQRT2], [INV_SQRT2, -INV_SQRT2]]


def test_output_index_is_most_significant_first():
    m = interpret(tensor_all([z_state(0), z_state(0), x_spider(2, 0, 1)]))
    # (|0>+|1>)(|0>+|1>)(√2|1>)
    assert m.shape == (8, 1)
    assert [row[0] for row in m.rows()] == [ZERO, RingElement((0, 1, 0, -1))] * 4


def test_colour_swap_is_hadamard_conjugation():
    for phase in range(4):
        z = z_spider(phase, 1, 1)
        conjugated = compose(compose(hadamard_wire(), z), hadamard_wire())
        assert semantically_equal(colour_swap(z), conjugated)


def test_parallel_edges_are_not_merged():
    single = chain([VertexKind.z(0), VertexKind.x(0)])
    builder = single.builder()
    z, x = single.vertices_of("Z")[0], single.vertices_of("X")[0]
    builder.add_edge(z, x)
    assert not semantically_equal(single, builder.build())


def test_semantically_equal_checks_arity():
    assert not semantically_equal(z_state(0), z_spider(0, 1, 0))


def test_scalar_value_needs_a_scalar():
    with pytest.raises(NonScalarError):
        scalar_value(z_state(0))


def test_interpret_rejects_invalid_diagrams():
    builder = Diagram.empty().builder()
    builder.add_edge(builder.add_vertex(VertexKind.star()), builder.add_vertex(VertexKind.z(0)))
    with pytest.raises(InvalidDiagramError):
        interpret(builder.build())


def test_scalar_tensor_multiplies():
    d = tensor_all([star(), pair(1, 1), z_scalar(1)])
    # 1/2 · 2ω · (1 + i)
    assert scalar_value(d) == ExactScalar(-2, 0) * ExactScalar(2, 1) * ExactScalar(1, 1)
