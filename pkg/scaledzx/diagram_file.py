"""
Reading and writing diagram files.

A diagram file is a JSON object::

    {
        "inputs": ["a"],
        "outputs": ["b"],
        "nodes": [{"id": "z", "kind": "Z", "phase": "pi/2"}],
        "edges": [["a", "z"], ["z", "b"]]
    }

`kind` is one of "Z", "X", "H", "star"; `phase` is one of "0", "pi/2", "pi", "-pi/2" and only
allowed on spiders (default "0"). An edge endpoint is a node id or a wire name; parallel edges
and self-loops are listed once per edge. The optional `loops` key counts free loops. Every key
is optional, so `{}` and an empty file are the empty diagram.
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Union

from scaledzx.core import validate
from scaledzx.errors import DiagramFileError, InvalidDiagramError
from scaledzx.models.Diagram import Diagram, DiagramBuilder
from scaledzx.models.Phase import Phase
from scaledzx.models.VertexKind import VertexKind

logger = logging.getLogger(__name__)

KINDS = {"Z": "Z", "X": "X", "H": "H", "star": "star"}
KEYS = ("inputs", "outputs", "nodes", "edges", "loops")


def _list(document: Dict[str, Any], key: str) -> List[Any]:
    value = document.get(key, [])
    if not isinstance(value, list):
        raise DiagramFileError(f"expected a list, got {type(value).__name__}", key)
    return value


def _name(value: Any, location: str) -> str:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise DiagramFileError(f"expected a string or integer name, got {value!r}", location)
    return str(value)


def _node_kind(node: Any, location: str) -> VertexKind:
    if not isinstance(node, dict):
        raise DiagramFileError(f"expected an object, got {node!r}", location)
    kind = node.get("kind")
    if kind not in KINDS:
        raise DiagramFileError(f"unknown kind {kind!r}", f"{location}.kind")
    if kind in ("H", "star"):
        if "phase" in node:
            raise DiagramFileError(f"{kind} nodes carry no phase", f"{location}.phase")
        return VertexKind.hadamard() if kind == "H" else VertexKind.star()
    try:
        phase = Phase.parse(node.get("phase", "0"))
    except ValueError as err:
        raise DiagramFileError(str(err), f"{location}.phase") from err
    return VertexKind.z(phase) if kind == "Z" else VertexKind.x(phase)


def parse_document(document: Any) -> Diagram:
    """
    Builds a Diagram from a decoded diagram file.

    Raises:
        DiagramFileError: On malformed content, with the offending location.
        InvalidDiagramError: If the result fails validation.
    """
    if not isinstance(document, dict):
        raise DiagramFileError("top level must be an object", "$")
    unknown = sorted(set(document) - set(KEYS))
    if unknown:
        raise DiagramFileError(f"unknown keys {', '.join(unknown)}", "$")

    builder = DiagramBuilder()
    ids: Dict[str, int] = {}

    def declare(name: str, node: int, location: str) -> None:
        if name in ids:
            raise DiagramFileError(f"duplicate name {name!r}", location)
        ids[name] = node

    for i, wire in enumerate(_list(document, "inputs")):
        declare(_name(wire, f"inputs[{i}]"), builder.add_input(), f"inputs[{i}]")
    for i, wire in enumerate(_list(document, "outputs")):
        declare(_name(wire, f"outputs[{i}]"), builder.add_output(), f"outputs[{i}]")
    for i, node in enumerate(_list(document, "nodes")):
        location = f"nodes[{i}]"
        kind = _node_kind(node, location)
        declare(_name(node.get("id"), f"{location}.id"), builder.add_vertex(kind), location)
    for i, edge in enumerate(_list(document, "edges")):
        location = f"edges[{i}]"
        if not isinstance(edge, list) or len(edge) != 2:
            raise DiagramFileError(f"expected two endpoints, got {edge!r}", location)
        ends = []
        for k, end in enumerate(edge):
            name = _name(end, f"{location}[{k}]")
            if name not in ids:
                raise DiagramFileError(f"unknown endpoint {name!r}", f"{location}[{k}]")
            ends.append(ids[name])
        builder.add_edge(*ends)
    loops = document.get("loops", 0)
    if isinstance(loops, bool) or not isinstance(loops, int) or loops < 0:
        raise DiagramFileError(f"expected a non-negative integer, got {loops!r}", "loops")
    builder.loops = loops

    diagram = builder.build()
    violations = validate(diagram)
    if violations:
        raise InvalidDiagramError(violations)
    return diagram


def parse_text(text: str) -> Diagram:
    """
    Parses diagram file text.

    Raises:
        DiagramFileError: On invalid JSON or malformed content.
        InvalidDiagramError: If the result fails validation.
    """
    if not text.strip():
        return Diagram.empty()
    try:
        document = json.loads(text)
    except json.JSONDecodeError as err:
        raise DiagramFileError(err.msg, f"line {err.lineno} column {err.colno}") from err
    return parse_document(document)


def read_diagram(path: Union[str, Path]) -> Diagram:
    path = Path(path)
    logger.debug(f"Reading diagram {path}")
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as err:
        raise DiagramFileError(str(err), str(path)) from err
    return parse_text(text)


def to_document(d: Diagram) -> Dict[str, Any]:
    """
    The file form of `d`: inputs "i0", "i1", ..., outputs "o0", ..., nodes "v<id>".
    """
    names: Dict[int, str] = {}
    names.update({b: f"i{i}" for i, b in enumerate(d.inputs)})
    names.update({b: f"o{j}" for j, b in enumerate(d.outputs)})
    nodes = []
    for v, kind in d.vertices.items():
        names[v] = f"v{v}"
        entry: Dict[str, Any] = {"id": names[v], "kind": kind.kind}
        if kind.is_spider:
            entry["phase"] = kind.phase.file_string()
        nodes.append(entry)
    document: Dict[str, Any] = {
        "inputs": [names[b] for b in d.inputs],
        "outputs": [names[b] for b in d.outputs],
        "nodes": nodes,
        "edges": [[names[u], names[v]] for u, v in d.edges.values()],
    }
    if d.loops:
        document["loops"] = d.loops
    return document


def to_text(d: Diagram) -> str:
    return json.dumps(to_document(d), indent=2, ensure_ascii=False) + "\n"


def write_diagram(d: Diagram, path: Union[str, Path]) -> None:
    Path(path).write_text(to_text(d), encoding="utf-8")
