import pytest

from scaledzx.helpers import utils


def test_config_reads_section(tmp_config):
    params = utils.config(tmp_config, "zx")
    assert params["verify_legs"] == "2"
    assert params["gslc_max_states"] == "500"


def test_config_missing_section(tmp_config):
    with pytest.raises(ValueError, match="Section nope not found"):
        utils.config(tmp_config, "nope")


def test_zx_params_merges_over_defaults(tmp_path):
    path = tmp_path / "partial.ini"
    path.write_text("[zx]\nworkers=8\n", encoding="utf-8")
    params = utils.zx_params(str(path))
    assert params["workers"] == "8"
    assert params["verify_legs"] == utils.DEFAULTS["verify_legs"]


def test_zx_params_without_section(tmp_path):
    path = tmp_path / "empty.ini"
    path.write_text("", encoding="utf-8")
    assert utils.zx_params(str(path)) == utils.DEFAULTS


def test_seed_from_environment(monkeypatch, tmp_config):
    monkeypatch.setenv("ZX_SEED", "123")
    assert utils.get_seed(tmp_config) == 123


def test_seed_from_config(monkeypatch, tmp_config):
    monkeypatch.delenv("ZX_SEED", raising=False)
    assert utils.get_seed(tmp_config) == 7


def test_config_file_falls_back_to_sample():
    assert utils.get_config_file().endswith(("config.ini", "config.sample.ini"))


def test_digest():
    assert utils.digest(b"") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
