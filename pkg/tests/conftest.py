import json
from pathlib import Path
from typing import Callable

import pytest

from scaledzx.core import tensor_all
from scaledzx.helpers.utils import get_seed
from scaledzx.models.Diagram import Diagram
from scaledzx.patterns import bell, pair, pairs, star

BELL_FILE = {
    "inputs": [],
    "outputs": ["a", "b"],
    "nodes": [
        {"id": "s", "kind": "star"},
        {"id": "z", "kind": "Z", "phase": "0"},
        {"id": "x", "kind": "X", "phase": "0"},
    ],
    "edges": [["z", "x"], ["a", "b"]],
}


@pytest.fixture
def bell_diagram() -> Diagram:
    return bell()


@pytest.fixture
def one() -> Diagram:
    """
    star ⊗ pair(0,0) ⊗ pair(0,0), worth exactly 1.
    """
    return tensor_all([star(), pairs(2)])


@pytest.fixture
def zero_pair() -> Diagram:
    return pair(1, 3)


@pytest.fixture
def seed() -> int:
    return get_seed()


@pytest.fixture
def write_json(tmp_path: Path) -> Callable[[str, object], str]:
    def write(name: str, document: object) -> str:
        path = tmp_path / name
        text = document if isinstance(document, str) else json.dumps(document)
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write


@pytest.fixture
def tmp_config(tmp_path: Path) -> str:
    path = tmp_path / "config.ini"
    path.write_text(
        "[zx]\nverify_legs=2\nworkers=2\nseed=7\ngslc_max_states=500\n\n"
        f"[logging]\nzx={tmp_path / 'zx.log'}\n",
        encoding="utf-8",
    )
    return str(path)


@pytest.fixture
def bell_file() -> dict:
    return json.loads(json.dumps(BELL_FILE))
