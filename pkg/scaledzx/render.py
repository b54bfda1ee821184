"""
Text renderings of diagrams: Graphviz DOT and TikZ.

Z spiders are green circles, X spiders red circles, Hadamards yellow boxes and stars black
stars. Boundary points are plain labelled points; free loops are listed in a comment.
"""
import logging
from typing import Dict, List

from scaledzx.models.Diagram import Diagram
from scaledzx.models.VertexKind import VertexKind

logger = logging.getLogger(__name__)

FORMATS = ("dot", "tikz")

DOT_STYLES = {
    "Z": {"shape": "circle", "style": "filled", "fillcolor": "green"},
    "X": {"shape": "circle", "style": "filled", "fillcolor": "red"},
    "H": {"shape": "box", "style": "filled", "fillcolor": "yellow"},
    "star": {"shape": "star", "style": "filled", "fillcolor": "black", "fontcolor": "white"},
}
BOUNDARY_STYLE = {"shape": "plaintext"}

TIKZ_STYLES = {
    "Z": "circle, draw, fill=green!60",
    "X": "circle, draw, fill=red!60",
    "H": "rectangle, draw, fill=yellow",
    "star": "star, star points=5, draw, fill=black, text=white, inner sep=1pt",
}
TIKZ_PHASES = ("", "$\\frac{\\pi}{2}$", "$\\pi$", "$-\\frac{\\pi}{2}$")


def _attr2str(attrs: Dict[str, str]) -> str:
    return ", ".join(f'{name}="{value}"' for name, value in attrs.items())


def _boundary_labels(d: Diagram) -> Dict[int, str]:
    labels = {b: f"in{i}" for i, b in enumerate(d.inputs)}
    labels.update({b: f"out{j}" for j, b in enumerate(d.outputs)})
    return labels


def _dot_label(kind: VertexKind) -> str:
    if kind.is_spider:
        return "" if kind.phase == 0 else str(kind.phase)
    return "H" if kind.is_hadamard else "★"


def to_dot(d: Diagram, name: str = "zx") -> str:
    """
    Renders `d` as an undirected Graphviz graph. An empty diagram has an empty body.
    """
    out = [f"graph {name} {{"]
    if d.loops:
        out.append(f"  // free loops: {d.loops}")
    boundary = _boundary_labels(d)
    ids = {b: label for b, label in boundary.items()}
    for b in d.boundary:
        out.append(f"  {ids[b]} [{_attr2str(dict(BOUNDARY_STYLE, label=boundary[b]))}];")
    for v, kind in sorted(d.vertices.items()):
        ids[v] = f"v{v}"
        attrs = dict(DOT_STYLES[kind.kind], label=_dot_label(kind))
        out.append(f"  {ids[v]} [{_attr2str(attrs)}];")
    for _, (u, v) in sorted(d.edges.items()):
        out.append(f"  {ids[u]} -- {ids[v]};")
    out.append("}")
    return "\n".join(out) + "\n"


def _tikz_positions(d: Diagram) -> Dict[int, str]:
    """
    Inputs on the left, outputs on the right, vertices on a row in between.
    """
    positions = {b: f"(0, {-i})" for i, b in enumerate(d.inputs)}
    width = len(d.vertices) + 1
    positions.update({b: f"({width}, {-j})" for j, b in enumerate(d.outputs)})
    for column, v in enumerate(sorted(d.vertices), start=1):
        positions[v] = f"({column}, {-(column % 2) * 0.5})"
    return positions


def to_tikz(d: Diagram) -> str:
    """
    Renders `d` as a standalone tikzpicture.
    """
    positions = _tikz_positions(d)
    boundary = _boundary_labels(d)
    names = {b: label for b, label in boundary.items()}
    lines: List[str] = ["\\begin{tikzpicture}"]
    if d.loops:
        lines.append(f"  % free loops: {d.loops}")
    for b in d.boundary:
        lines.append(f"  \\node ({names[b]}) at {positions[b]} {{{boundary[b]}}};")
    for v, kind in sorted(d.vertices.items()):
        names[v] = f"v{v}"
        if kind.is_spider:
            text = TIKZ_PHASES[kind.phase.quarter_turns]
        else:
            text = "H" if kind.is_hadamard else ""
        lines.append(
            f"  \\node[{TIKZ_STYLES[kind.kind]}] ({names[v]}) at {positions[v]} {{{text}}};"
        )
    for _, (u, v) in sorted(d.edges.items()):
        if u == v:
            lines.append(f"  \\draw ({names[u]}) to[loop above] ({names[v]});")
        else:
            lines.append(f"  \\draw ({names[u]}) -- ({names[v]});")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def render(d: Diagram, fmt: str) -> str:
    """
    Raises:
        ValueError: For formats other than "dot" and "tikz".
    """
    logger.debug(f"Rendering {len(d.vertices)} vertices as {fmt}")
    match fmt:
        case "dot":
            return to_dot(d)
        case "tikz":
            return to_tikz(d)
        case _:
            raise ValueError(f"Unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
