import pytest

from scaledzx.core import isomorphic, tensor_all
from scaledzx.diagram_file import parse_document, parse_text, read_diagram, to_text, write_diagram
from scaledzx.errors import DiagramFileError, InvalidDiagramError
from scaledzx.models.Diagram import Diagram
from scaledzx.patterns import bell, free_loop, hadamard_wire, z_spider


def test_parse_bell(bell_file, bell_diagram):
    d = parse_document(bell_file)
    assert len(d.outputs) == 2 and not d.inputs
    assert isomorphic(d, bell_diagram)


@pytest.mark.parametrize("text", ["", "  \n", "{}"])
def test_empty_documents(text):
    assert parse_text(text) == Diagram.empty()


@pytest.mark.parametrize(
    "document, location",
    [
        ([], "$"),
        ({"vertices": []}, "$"),
        ({"nodes": {}}, "nodes"),
        ({"nodes": [{"id": "a", "kind": "Y"}]}, "nodes[0].kind"),
        ({"nodes": [{"id": "a", "kind": "H", "phase": "pi"}]}, "nodes[0].phase"),
        ({"nodes": [{"id": "a", "kind": "Z", "phase": "pi/3"}]}, "nodes[0].phase"),
        ({"nodes": [{"id": True, "kind": "Z"}]}, "nodes[0].id"),
        ({"inputs": ["a"], "outputs": ["a"]}, "outputs[0]"),
        ({"outputs": ["a"], "edges": [["a"]]}, "edges[0]"),
        ({"outputs": ["a"], "edges": [["a", "b"]]}, "edges[0][1]"),
        ({"loops": -1}, "loops"),
    ],
)
def test_error_locations(document, location):
    with pytest.raises(DiagramFileError) as info:
        parse_document(document)
    assert info.value.location == location


def test_invalid_json_location():
    with pytest.raises(DiagramFileError) as info:
        parse_text('{\n  "inputs": [,]\n}')
    assert info.value.location.startswith("line 2 column")


def test_structural_violations():
    document = {"inputs": ["a"], "outputs": ["b"], "edges": [["a", "b"], ["a", "b"]]}
    with pytest.raises(InvalidDiagramError):
        parse_document(document)


def test_integer_names():
    d = parse_document({"inputs": [0], "outputs": [1], "nodes": [{"id": 2, "kind": "H"}],
                        "edges": [[0, 2], [2, 1]]})
    assert isomorphic(d, hadamard_wire())


def test_written_text_reads_back(tmp_path):
    d = tensor_all([bell(), free_loop(), z_spider(3, 1, 2)])
    path = tmp_path / "d.json"
    write_diagram(d, path)
    back = read_diagram(path)
    assert isomorphic(back, d)
    assert back.loops == 1
    assert '"phase": "-pi/2"' in to_text(d)


def test_missing_file(tmp_path):
    path = tmp_path / "missing.json"
    with pytest.raises(DiagramFileError) as info:
        read_diagram(path)
    assert info.value.location == str(path)
