"""
Constructors for the small diagrams used throughout: spiders, wires, scalars, states.
"""
from typing import Iterable, List, Sequence, Union

from scaledzx.core import tensor_all
from scaledzx.models.Diagram import Diagram, DiagramBuilder
from scaledzx.models.Phase import Phase
from scaledzx.models.VertexKind import VertexKind

PhaseLike = Union[int, Phase]


def attach_inputs(builder: DiagramBuilder, v: int, n: int) -> List[int]:
    boundary = []
    for _ in range(n):
        b = builder.add_input()
        builder.add_edge(v, b)
        boundary.append(b)
    return boundary


def attach_outputs(builder: DiagramBuilder, v: int, n: int) -> List[int]:
    boundary = []
    for _ in range(n):
        b = builder.add_output()
        builder.add_edge(v, b)
        boundary.append(b)
    return boundary


def spider(kind: str, phase: PhaseLike = 0, n_in: int = 0, n_out: int = 0) -> Diagram:
    """
    A single spider with `n_in` input and `n_out` output legs.
    """
    builder = DiagramBuilder()
    v = builder.add_vertex(VertexKind(kind, phase))
    attach_inputs(builder, v, n_in)
    attach_outputs(builder, v, n_out)
    return builder.build()


def z_spider(phase: PhaseLike = 0, n_in: int = 0, n_out: int = 0) -> Diagram:
    return spider("Z", phase, n_in, n_out)


def x_spider(phase: PhaseLike = 0, n_in: int = 0, n_out: int = 0) -> Diagram:
    return spider("X", phase, n_in, n_out)


def z_state(phase: PhaseLike = 0) -> Diagram:
    return z_spider(phase, 0, 1)


def x_state(phase: PhaseLike = 0) -> Diagram:
    return x_spider(phase, 0, 1)


def z_effect(phase: PhaseLike = 0) -> Diagram:
    return z_spider(phase, 1, 0)


def x_effect(phase: PhaseLike = 0) -> Diagram:
    return x_spider(phase, 1, 0)


def z_scalar(phase: PhaseLike = 0) -> Diagram:
    return z_spider(phase)


def x_scalar(phase: PhaseLike = 0) -> Diagram:
    return x_spider(phase)


def star() -> Diagram:
    builder = DiagramBuilder()
    builder.add_vertex(VertexKind.star())
    return builder.build()


def stars(n: int) -> Diagram:
    return tensor_all([star() for _ in range(n)])


def free_loop() -> Diagram:
    return Diagram(loops=1)


def pair(alpha: PhaseLike = 0, beta: PhaseLike = 0) -> Diagram:
    """
    The two-node scalar Z(alpha)–X(beta) joined by one edge.
    """
    builder = DiagramBuilder()
    z = builder.add_vertex(VertexKind.z(alpha))
    x = builder.add_vertex(VertexKind.x(beta))
    builder.add_edge(z, x)
    return builder.build()


def pairs(n: int, alpha: PhaseLike = 0, beta: PhaseLike = 0) -> Diagram:
    return tensor_all([pair(alpha, beta) for _ in range(n)])


def identity(n: int = 1) -> Diagram:
    builder = DiagramBuilder()
    ins = [builder.add_input() for _ in range(n)]
    outs = [builder.add_output() for _ in range(n)]
    for a, b in zip(ins, outs):
        builder.add_edge(a, b)
    return builder.build()


def hadamard_wire() -> Diagram:
    builder = DiagramBuilder()
    i = builder.add_input()
    h = builder.add_vertex(VertexKind.hadamard())
    o = builder.add_output()
    builder.wire([i, h, o])
    return builder.build()


def cup() -> Diagram:
    """
    A bare wire bent into a two-output state.
    """
    builder = DiagramBuilder()
    a = builder.add_output()
    b = builder.add_output()
    builder.add_edge(a, b)
    return builder.build()


def cap() -> Diagram:
    builder = DiagramBuilder()
    a = builder.add_input()
    b = builder.add_input()
    builder.add_edge(a, b)
    return builder.build()


def bell() -> Diagram:
    """
    The normalised Bell state: star ⊗ pair(0,0) ⊗ cup.
    """
    return tensor_all([star(), pair(), cup()])


def chain(kinds: Sequence[VertexKind]) -> Diagram:
    """
    A one-input one-output wire through the given two-legged nodes, input side first.
    """
    builder = DiagramBuilder()
    nodes = [builder.add_input()]
    nodes += [builder.add_vertex(kind) for kind in kinds]
    nodes.append(builder.add_output())
    builder.wire(nodes)
    return builder.build()


def scalar_of(parts: Iterable[Diagram]) -> Diagram:
    return tensor_all(list(parts))


__all__ = [
    "attach_inputs",
    "attach_outputs",
    "bell",
    "cap",
    "chain",
    "cup",
    "free_loop",
    "hadamard_wire",
    "identity",
    "pair",
    "pairs",
    "scalar_of",
    "spider",
    "star",
    "stars",
    "x_effect",
    "x_scalar",
    "x_spider",
    "x_state",
    "z_effect",
    "z_scalar",
    "z_spider",
    "z_state",
]
