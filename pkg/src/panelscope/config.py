"""Configuration resolution: CLI flag > environment variable > config file.

Environment variables use the PANELSCOPE_ prefix; the optional config file
is a small JSON document (default ./panelscope.json) with keys like
"data_dir" and "port".
"""

from __future__ import annotations

import json
import os
from pathlib import Path

ENV_PREFIX = "PANELSCOPE_"
DEFAULT_CONFIG_FILE = "panelscope.json"


def load_config_file(path: str | Path | None = None) -> dict:
    p = Path(path) if path else Path(DEFAULT_CONFIG_FILE)
    if not p.exists():
        return {}
    try:
        return json.loads(p.read_text())
    except (OSError, json.JSONDecodeError):
        return {}


def resolve(name: str, flag_value, default, config: dict | None = None):
    """Pick the first of: explicit flag, PANELSCOPE_<NAME> env, config key."""
    if flag_value is not None:
        return flag_value
    env = os.environ.get(ENV_PREFIX + name.upper())
    if env is not None:
        return env
    if config and name in config:
        return config[name]
    return default
