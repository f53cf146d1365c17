"""Entrosense infrastructure helpers."""

from infrastructure.config_file import load_config_file, parse_key_value_text, parse_yaml_text

__all__ = ["load_config_file", "parse_key_value_text", "parse_yaml_text"]
