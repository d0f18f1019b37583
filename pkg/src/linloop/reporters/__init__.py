# src/linloop/reporters/__init__.py
"""
判定結果的輸出格式。
"""

from .markdown_reporter import generate_markdown_report
from .verdict_reporter import certificate_json, render_json, render_text

__all__ = ["certificate_json", "generate_markdown_report", "render_json", "render_text"]
