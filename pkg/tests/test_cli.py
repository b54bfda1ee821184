import logging

import pytest

import zx
from scaledzx.errors import RuleError
from scaledzx.helpers import utils
from scaledzx.models.RewriteRule import RewriteRule
from scaledzx.rules import lookup

Z_STATE = {"outputs": ["o"], "nodes": [{"id": "z", "kind": "Z"}], "edges": [["z", "o"]]}
X_STATE = {"outputs": ["o"], "nodes": [{"id": "x", "kind": "X"}], "edges": [["x", "o"]]}


@pytest.fixture(autouse=True)
def cli_config(monkeypatch, tmp_config):
    monkeypatch.setattr(utils, "get_config_file", lambda: tmp_config)
    yield
    root_logger = logging.getLogger()
    for handler in [h for h in root_logger.handlers if isinstance(h, logging.FileHandler)]:
        root_logger.removeHandler(handler)
        handler.close()


def test_interpret(capsys, write_json, bell_file):
    path = write_json("bell.json", bell_file)
    assert zx.main(["--quiet", "interpret", path]) == zx.EXIT_OK
    out = capsys.readouterr().out
    lines = out.splitlines()
    assert lines[0] == "# interpret"
    assert lines[1].startswith("# input sha256 ")
    assert lines[2].startswith("matrix 4x1")


def test_normalize_scalar(capsys, write_json):
    document = {
        "nodes": [{"id": "s", "kind": "star"}, {"id": "z", "kind": "Z"}],
    }
    path = write_json("half.json", document)
    assert zx.main(["--quiet", "normalize", "--kind", "scalar", path]) == zx.EXIT_OK
    out = capsys.readouterr().out
    assert "scalar r=0 s=0: 1" in out
    assert "# derivation" in out


def test_normalize_rejects_non_scalar(write_json):
    path = write_json("z.json", Z_STATE)
    assert zx.main(["--quiet", "normalize", "--kind", "scalar", path]) == zx.EXIT_INVALID
    assert zx.main(["--quiet", "normalize", "--kind", "zero", path]) == zx.EXIT_INVALID


def test_normalize_gslc(capsys, write_json):
    path = write_json("z.json", Z_STATE)
    assert zx.main(["--quiet", "normalize", "--kind", "gslc", path]) == zx.EXIT_OK
    assert "gslc inputs=0 outputs=1" in capsys.readouterr().out


def test_eq(capsys, write_json):
    z = write_json("z.json", Z_STATE)
    x = write_json("x.json", X_STATE)
    assert zx.main(["--quiet", "eq", z, z]) == zx.EXIT_OK
    assert "equal true" in capsys.readouterr().out
    assert zx.main(["--quiet", "eq", z, x]) == zx.EXIT_UNEQUAL
    assert "equal false" in capsys.readouterr().out


@pytest.mark.parametrize(
    "content",
    ['{"nodes": [}', '{"nodes": [{"id": "a", "kind": "Y"}]}', '{"outputs": ["a"]}'],
)
def test_invalid_files(write_json, content):
    path = write_json("bad.json", content)
    assert zx.main(["--quiet", "interpret", path]) == zx.EXIT_INVALID


def test_missing_file(tmp_path):
    assert zx.main(["--quiet", "render", str(tmp_path / "nope.json")]) == zx.EXIT_INVALID


def test_usage_errors():
    with pytest.raises(SystemExit) as info:
        zx.main(["normalize", "--kind", "other", "f.json"])
    assert info.value.code == 2


def test_render(capsys, write_json, bell_file):
    path = write_json("bell.json", bell_file)
    assert zx.main(["--quiet", "render", path]) == zx.EXIT_OK
    assert capsys.readouterr().out.startswith("graph zx {")
    assert zx.main(["--quiet", "render", "--format", "tikz", path]) == zx.EXIT_OK
    assert "tikzpicture" in capsys.readouterr().out


def test_demo(capsys):
    assert zx.main(["--quiet", "demo", "bb84"]) == zx.EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("# demo bb84\n")
    assert "computational/computational <00|" in out


def test_verify_rules(capsys, monkeypatch):
    monkeypatch.setattr(zx, "rule_registry", lambda: [lookup("star")])
    assert zx.main(["--quiet", "verify-rules", "--include-negative-controls"]) == zx.EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("# verify-rules --legs 2\n")
    assert "negative control" in out
    assert "unexpected 0" in out


def test_verify_rules_reports_unexpected_results(monkeypatch):
    control = lookup("copy-unscaled")
    unsound = RewriteRule("copy-bad", control.description, control.lhs, control.rhs, control.instances)
    monkeypatch.setattr(zx, "rule_registry", lambda: [unsound])
    assert zx.main(["--quiet", "verify-rules", "--legs", "2"]) == zx.EXIT_UNEQUAL


def test_normalize_spider_with_parallel_edges_and_self_loops(capsys, write_json):
    document = {
        "outputs": ["o"],
        "nodes": [{"id": "a", "kind": "Z"}, {"id": "b", "kind": "Z", "phase": "pi"}],
        "edges": [["a", "b"], ["a", "b"], ["b", "b"], ["b", "b"], ["a", "o"]],
    }
    path = write_json("looped.json", document)
    assert zx.main(["--quiet", "normalize", "--kind", "gslc", path]) == zx.EXIT_OK
    assert zx.main(["--quiet", "normalize", "--kind", "zero", path]) == zx.EXIT_INVALID
    assert "gslc inputs=0 outputs=1" in capsys.readouterr().out


def test_internal_rewrite_failure_has_its_own_exit_code(monkeypatch, write_json):
    def broken(*args):
        raise RuleError("spider produced an invalid diagram")

    monkeypatch.setattr(zx, "gslc_normalize", broken)
    path = write_json("z.json", Z_STATE)
    assert zx.main(["--quiet", "normalize", "--kind", "gslc", path]) == zx.EXIT_FAILURE
