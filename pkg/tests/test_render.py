import pytest

from scaledzx.core import tensor
from scaledzx.models.Diagram import Diagram
from scaledzx.patterns import free_loop, hadamard_wire, z_spider
from scaledzx.render import render, to_dot, to_tikz


def test_empty_diagram_has_an_empty_body():
    assert to_dot(Diagram.empty()) == "graph zx {\n}\n"


def test_bell_dot(bell_diagram):
    lines = to_dot(bell_diagram).splitlines()
    assert lines[0] == "graph zx {" and lines[-1] == "}"
    assert len([l for l in lines if l.lstrip().startswith("v") and "[" in l]) == 3
    assert len([l for l in lines if l.lstrip().startswith("out") and "[" in l]) == 2
    assert "  out0 -- out1;" in lines
    assert any('label="★"' in l for l in lines)


def test_dot_labels_and_loops():
    text = to_dot(tensor(hadamard_wire(), free_loop()))
    assert "// free loops: 1" in text
    assert 'label="H"' in text
    assert "in0 -- v" in text


def test_tikz():
    text = to_tikz(z_spider(2, 1, 1))
    assert text.startswith("\\begin{tikzpicture}")
    assert text.endswith("\\end{tikzpicture}\n")
    assert "$\\pi$" in text


def test_render_dispatch(bell_diagram):
    assert render(bell_diagram, "dot") == to_dot(bell_diagram)
    assert render(bell_diagram, "tikz") == to_tikz(bell_diagram)
    with pytest.raises(ValueError):
        render(bell_diagram, "svg")
