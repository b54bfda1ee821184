"""
Contains utility functions used by the ScaledZX package.
"""

from configparser import ConfigParser
import hashlib
import logging
import os
import subprocess
from typing import Optional

logger = logging.getLogger(__name__)

DEFAULTS = {
    "verify_legs": "3",
    "workers": "4",
    "seed": "20240501",
    "gslc_max_states": "20000",
}


def config(filename: str, section: str) -> dict:
    """
    Reads one section of an INI file.

    Args:
        filename (str): Path to the INI file; a missing file reads as empty.
        section (str): Section name, e.g. "zx" or "logging".

    Returns:
        dict: Parameter name to raw string value.

    Raises:
        ValueError: If the section is absent.
    """
    parser = ConfigParser()
    parser.read(filename, encoding="utf-8")

    if not parser.has_section(section):
        raise ValueError(f"Section {section} not found in the {filename} file")
    return dict(parser.items(section))


def get_repo_root() -> str:
    """
    Returns the root directory of the current Git repository.

    Uses the command `git rev-parse --show-toplevel` to get the root directory, and falls back
    to the directory holding this package when the checkout is not a Git repository.
    """
    try:
        repo_root = subprocess.check_output(
            ["git", "rev-parse", "--show-toplevel"], stderr=subprocess.DEVNULL
        )
        return repo_root.decode("utf-8").strip()
    except (subprocess.CalledProcessError, FileNotFoundError):
        return os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))


def get_config_file() -> str:
    """
    Returns the path to the config file.

    The config file is located at the root of the repository. `config.sample.ini` is used when
    no local `config.ini` exists.
    """
    repo_root = get_repo_root()
    config_file = os.path.join(repo_root, "config.ini")
    if not os.path.exists(config_file):
        config_file = os.path.join(repo_root, "config.sample.ini")
    return config_file


def zx_params(filename: Optional[str] = None) -> dict:
    """
    Returns the `[zx]` section merged over the built-in defaults.

    Args:
        filename (str, optional): Config file to read. Defaults to `get_config_file()`.

    Returns:
        dict: Parameter name to string value.
    """
    params = dict(DEFAULTS)
    try:
        params.update(config(filename or get_config_file(), "zx"))
    except ValueError as err:
        logger.debug(f"Using default parameters: {err}")
    return params


def get_seed(filename: Optional[str] = None) -> int:
    """
    Returns the seed for randomized corpora. `ZX_SEED` wins over the config file.
    """
    env_seed = os.environ.get("ZX_SEED")
    if env_seed:
        return int(env_seed)
    return int(zx_params(filename)["seed"])


def digest(data: bytes) -> str:
    """
    Returns the sha256 hex digest of `data`.
    """
    return hashlib.sha256(data).hexdigest()
