"""
GslcForm: a graph state with one single-qubit Clifford word per wire, and its scalar.
"""
from typing import NamedTuple, Tuple, Union

from scaledzx.models.Diagram import Diagram, DiagramBuilder
from scaledzx.models.ScalarNF import ScalarNF
from scaledzx.models.VertexKind import VertexKind
from scaledzx.models.ZeroNF import ZeroNF


class GslcForm(NamedTuple):
    """
    A GS-LC diagram read as a map: qubit i is boundary point i in `inputs + outputs` order.

    Attributes:
        n_inputs (int): How many of the qubits are inputs.
        n_outputs (int): How many of the qubits are outputs.
        edges (Tuple[Tuple[int, int], ...]): Sorted graph edges (i, j), i < j.
        words (Tuple[Tuple[str, ...], ...]): Canonical Clifford word per qubit, graph side first.
        scalar (ScalarNF | ZeroNF): The scalar part; ZeroNF(0, 0) marks a zero diagram.

    Text grammar:
        gslc inputs=<n> outputs=<m>
        edges: <i>-<j> ...        (`none` when empty)
        qubit <i>: <label> ...    (`id` for the empty word)
        <scalar text>
    """

    n_inputs: int
    n_outputs: int
    edges: Tuple[Tuple[int, int], ...]
    words: Tuple[Tuple[str, ...], ...]
    scalar: Union[ScalarNF, ZeroNF]

    @property
    def n_qubits(self) -> int:
        return self.n_inputs + self.n_outputs

    def diagram(self) -> Diagram:
        from scaledzx.core import tensor, unbend

        builder = DiagramBuilder()
        graph = []
        for word in self.words:
            g = builder.add_vertex(VertexKind.z(0))
            graph.append(g)
            previous = g
            for label in word:
                node = builder.add_vertex(VertexKind.from_label(label))
                builder.add_edge(previous, node)
                previous = node
            builder.add_edge(previous, builder.add_output())
        for i, j in self.edges:
            h = builder.add_vertex(VertexKind.hadamard())
            builder.add_edge(graph[i], h)
            builder.add_edge(h, graph[j])
        return tensor(unbend(builder.build(), self.n_inputs), self.scalar.diagram())

    def to_text(self) -> str:
        lines = [f"gslc inputs={self.n_inputs} outputs={self.n_outputs}"]
        edges = " ".join(f"{i}-{j}" for i, j in self.edges) or "none"
        lines.append(f"edges: {edges}")
        for i, word in enumerate(self.words):
            lines.append(f"qubit {i}: {' '.join(word) or 'id'}")
        lines.append(self.scalar.to_text())
        return "\n".join(lines)
