"""
ZeroNF: the normal form of a zero diagram, fixed by its arity.
"""
from typing import NamedTuple

from scaledzx.models.Diagram import Diagram, DiagramBuilder
from scaledzx.models.VertexKind import VertexKind


class ZeroNF(NamedTuple):
    """
    One Z(π) scalar and a disconnected Z(0) on every boundary wire.

    Attributes:
        n_inputs (int): Number of inputs.
        m_outputs (int): Number of outputs.
    """

    n_inputs: int
    m_outputs: int

    def diagram(self) -> Diagram:
        builder = DiagramBuilder()
        builder.add_vertex(VertexKind.z(2))
        for _ in range(self.n_inputs):
            builder.add_edge(builder.add_vertex(VertexKind.z(0)), builder.add_input())
        for _ in range(self.m_outputs):
            builder.add_edge(builder.add_vertex(VertexKind.z(0)), builder.add_output())
        return builder.build()

    def to_text(self) -> str:
        return f"zero inputs={self.n_inputs} outputs={self.m_outputs}"
