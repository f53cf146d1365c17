"""
Experiment config file loading.

Two formats are accepted: flat ``key = value`` text with ``#`` comments, and
a ``.yaml``/``.yml`` file holding a flat mapping. Values from the text format
stay strings; schema validation coerces them.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Dict

import yaml

from errors import ConfigError

YAML_SUFFIXES = frozenset({".yaml", ".yml"})


def parse_key_value_text(text: str, source: str = "<config>") -> Dict[str, str]:
    values: Dict[str, str] = {}
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        key, separator, value = line.partition("=")
        key = key.strip().replace("-", "_")
        if not separator or not key:
            raise ConfigError(f"{source}:{line_number}: expected 'key = value', got '{raw_line.strip()}'")
        if key in values:
            raise ConfigError(f"{source}:{line_number}: duplicate key '{key}'")
        values[key] = value.strip()
    return values


def parse_yaml_text(text: str, source: str = "<config>") -> Dict[str, Any]:
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ConfigError(f"{source}: invalid YAML: {exc}") from exc
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigError(f"{source}: top level must be a mapping")
    for key, value in data.items():
        if isinstance(value, dict):
            raise ConfigError(f"{source}: key '{key}' must hold a scalar or a list")
    return {str(key).replace("-", "_"): value for key, value in data.items()}


def load_config_file(path: Path) -> Dict[str, Any]:
    """Read ``path`` into a flat dict of raw config values."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    if path.suffix.lower() in YAML_SUFFIXES:
        return parse_yaml_text(text, str(path))
    return parse_key_value_text(text, str(path))
