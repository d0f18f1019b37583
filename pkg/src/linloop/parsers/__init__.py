# src/linloop/parsers/__init__.py
"""
實例檔案的解析器。
"""

from .instance_parser import load_instance, parse_instance, serialize_instance

__all__ = ["load_instance", "parse_instance", "serialize_instance"]
