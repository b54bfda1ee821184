"""
Diagram class, the immutable open multigraph, and DiagramBuilder for constructing one.
"""
from __future__ import annotations

from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

from scaledzx.models.VertexKind import VertexKind

Edge = Tuple[int, int]
HalfEdge = Tuple[int, int]


class Diagram:
    """
    An open ZX diagram.

    Node ids are shared by vertices and boundary points. Boundary points are not vertices; each
    has exactly one incident edge. Edges are keyed by id so parallel edges and self-loops are kept.

    Attributes:
        vertices (Mapping[int, VertexKind]): Vertex id to kind.
        edges (Mapping[int, Edge]): Edge id to its two endpoints.
        inputs (Tuple[int, ...]): Ordered input boundary ids.
        outputs (Tuple[int, ...]): Ordered output boundary ids.
        loops (int): Number of free (node-free) loops, each worth 2.

    Methods:
        half_edges: The ordered half-edges at a vertex.
        builder: A mutable copy.
    """

    __slots__ = ("_vertices", "_edges", "_inputs", "_outputs", "_loops", "_incidence")

    def __init__(
        self,
        vertices: Optional[Mapping[int, VertexKind]] = None,
        edges: Optional[Mapping[int, Edge]] = None,
        inputs: Sequence[int] = (),
        outputs: Sequence[int] = (),
        loops: int = 0,
    ) -> None:
        self._vertices: Dict[int, VertexKind] = dict(sorted((vertices or {}).items()))
        self._edges: Dict[int, Edge] = {
            e: (int(u), int(v)) for e, (u, v) in sorted((edges or {}).items())
        }
        self._inputs = tuple(inputs)
        self._outputs = tuple(outputs)
        self._loops = int(loops)
        incidence: Dict[int, List[HalfEdge]] = {}
        for e, (u, v) in self._edges.items():
            incidence.setdefault(u, []).append((e, 1))
            incidence.setdefault(v, []).append((e, 0))
        self._incidence = {n: sorted(hs) for n, hs in incidence.items()}

    @classmethod
    def empty(cls) -> Diagram:
        return cls()

    @property
    def vertices(self) -> Mapping[int, VertexKind]:
        return MappingProxyType(self._vertices)

    @property
    def edges(self) -> Mapping[int, Edge]:
        return MappingProxyType(self._edges)

    @property
    def inputs(self) -> Tuple[int, ...]:
        return self._inputs

    @property
    def outputs(self) -> Tuple[int, ...]:
        return self._outputs

    @property
    def boundary(self) -> Tuple[int, ...]:
        return self._inputs + self._outputs

    @property
    def loops(self) -> int:
        return self._loops

    @property
    def is_scalar(self) -> bool:
        return not self._inputs and not self._outputs

    def is_boundary(self, node: int) -> bool:
        return node not in self._vertices and node in set(self.boundary)

    def kind(self, v: int) -> VertexKind:
        return self._vertices[v]

    def half_edges(self, node: int) -> List[HalfEdge]:
        """
        Returns the half-edges at `node` as (edge id, far index), sorted by edge id.

        The far index k means the edge leads toward `edges[e][k]`; a self-loop contributes both
        (e, 0) and (e, 1).
        """
        return list(self._incidence.get(node, ()))

    def far_end(self, half_edge: HalfEdge) -> int:
        e, k = half_edge
        return self._edges[e][k]

    def degree(self, node: int) -> int:
        return len(self._incidence.get(node, ()))

    def neighbours(self, node: int) -> List[int]:
        return [self.far_end(h) for h in self.half_edges(node)]

    def edges_between(self, u: int, v: int) -> List[int]:
        found = []
        for e, k in self.half_edges(u):
            if self._edges[e][k] == v and (u != v or k == 1):
                found.append(e)
        return found

    def self_loops(self, v: int) -> List[int]:
        return [e for e, k in self.half_edges(v) if k == 1 and self._edges[e] == (v, v)]

    def node_ids(self) -> Set[int]:
        ids = set(self._vertices) | set(self.boundary)
        for u, v in self._edges.values():
            ids.add(u)
            ids.add(v)
        return ids

    def next_node_id(self) -> int:
        return max(self.node_ids(), default=-1) + 1

    def next_edge_id(self) -> int:
        return max(self._edges, default=-1) + 1

    def spiders(self) -> List[int]:
        return [v for v, kind in self._vertices.items() if kind.is_spider]

    def vertices_of(self, kind: str) -> List[int]:
        return [v for v, k in self._vertices.items() if k.kind == kind]

    def builder(self) -> DiagramBuilder:
        return DiagramBuilder(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Diagram):
            return NotImplemented
        return (
            self._vertices == other._vertices
            and self._edges == other._edges
            and self._inputs == other._inputs
            and self._outputs == other._outputs
            and self._loops == other._loops
        )

    def __hash__(self) -> int:
        return hash(
            (
                tuple(self._vertices.items()),
                tuple(self._edges.items()),
                self._inputs,
                self._outputs,
                self._loops,
            )
        )

    def __str__(self) -> str:
        vertices = ", ".join(f"{v}:{kind}" for v, kind in self._vertices.items())
        edges = ", ".join(f"{e}:{u}-{v}" for e, (u, v) in self._edges.items())
        return (
            f"Diagram(in={list(self._inputs)}, out={list(self._outputs)}, "
            f"vertices=[{vertices}], edges=[{edges}], loops={self._loops})"
        )

    def __repr__(self) -> str:
        return self.__str__()


class DiagramBuilder:
    """
    Mutable companion of Diagram used by constructors and the rewrite engine.

    Joints are temporary degree-2 nodes; `smooth_joints` splices them out of the wiring.
    """

    def __init__(self, diagram: Optional[Diagram] = None) -> None:
        self.vertices: Dict[int, VertexKind] = {}
        self.edges: Dict[int, Edge] = {}
        self.inputs: List[int] = []
        self.outputs: List[int] = []
        self.loops = 0
        self.joints: Set[int] = set()
        self._next_node = 0
        self._next_edge = 0
        if diagram is not None:
            self.vertices = dict(diagram.vertices)
            self.edges = dict(diagram.edges)
            self.inputs = list(diagram.inputs)
            self.outputs = list(diagram.outputs)
            self.loops = diagram.loops
            self._next_node = diagram.next_node_id()
            self._next_edge = diagram.next_edge_id()

    def fresh_node(self) -> int:
        node = self._next_node
        self._next_node += 1
        return node

    def add_vertex(self, kind: VertexKind) -> int:
        v = self.fresh_node()
        self.vertices[v] = kind
        return v

    def add_input(self) -> int:
        b = self.fresh_node()
        self.inputs.append(b)
        return b

    def add_output(self) -> int:
        b = self.fresh_node()
        self.outputs.append(b)
        return b

    def add_joint(self) -> int:
        j = self.fresh_node()
        self.joints.add(j)
        return j

    def add_edge(self, u: int, v: int) -> int:
        e = self._next_edge
        self._next_edge += 1
        self.edges[e] = (u, v)
        return e

    def remove_edge(self, e: int) -> None:
        del self.edges[e]

    def remove_vertex(self, v: int) -> None:
        del self.vertices[v]

    def set_kind(self, v: int, kind: VertexKind) -> None:
        self.vertices[v] = kind

    def wire(self, nodes: Iterable[int]) -> None:
        """
        Connects consecutive nodes of `nodes` by edges.
        """
        nodes = list(nodes)
        for u, v in zip(nodes, nodes[1:]):
            self.add_edge(u, v)

    def smooth_joints(self) -> None:
        """
        Splices every joint out: a joint on edges (j, x), (j, y) becomes one edge (x, y), keeping
        the smaller edge id. A joint whose only edge is a self-loop becomes a free loop.
        """
        for j in sorted(self.joints):
            incident = sorted(
                (e, k)
                for e, ends in self.edges.items()
                for k in (0, 1)
                if ends[1 - k] == j
            )
            if len(incident) != 2:
                raise ValueError(f"Joint {j} has {len(incident)} half-edges")
            (e1, k1), (e2, k2) = incident
            if e1 == e2:
                del self.edges[e1]
                self.loops += 1
                continue
            x = self.edges[e1][k1]
            y = self.edges[e2][k2]
            del self.edges[e2]
            self.edges[e1] = (x, y)
        self.joints.clear()

    def build(self) -> Diagram:
        if self.joints:
            self.smooth_joints()
        return Diagram(self.vertices, self.edges, self.inputs, self.outputs, self.loops)
