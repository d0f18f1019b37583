# src/linloop/reporters/verdict_reporter.py
"""
判定結果的文字與 JSON 呈現。第一行永遠是結果名稱，方便在腳本中比對。
"""

# 1. 標準庫導入
import json
from fractions import Fraction

# 2. 第三方庫導入
# (無)

# 3. 本專案導入
from linloop.models.verdict import Certificate, Verdict


def _fmt(bounds: tuple[Fraction, Fraction]) -> str:
    lo, hi = bounds
    return f"[{float(lo):.10g}, {float(hi):.10g}]"


def _certificate_lines(certificate: Certificate) -> list[str]:
    lines = [
        f"  formula:         {certificate.formula.value}",
        f"  precision_bits:  {certificate.precision_bits}",
        f"  depth_limit:     {certificate.depth_limit}",
        f"  box_count:       {certificate.box_count}",
        f"  max_depth:       {certificate.max_depth}",
    ]
    if certificate.sign_change is not None:
        a, b = certificate.sign_change
        lines.append(f"  sign_change:     ({a}, {b})")
    if certificate.sign_values is not None:
        lines.append(f"  chi(a), chi(b):  {_fmt(certificate.sign_values[0])}, {_fmt(certificate.sign_values[1])}")
    if certificate.fixed_point_enclosure is not None:
        lines.append("  fixed_point:     " + ", ".join(_fmt(b) for b in certificate.fixed_point_enclosure))
    if certificate.constraint_margins is not None:
        lines.append("  margins:         " + ", ".join(_fmt(b) for b in certificate.constraint_margins))
    if certificate.segments and certificate.sign_change is None:
        lines.append("  segments:        " + ", ".join(_fmt(b) for b in certificate.segments))
    return lines


def render_text(verdict: Verdict) -> str:
    lines = [verdict.outcome.value, f"budget_used: {verdict.budget_used}"]
    if verdict.certificate is not None:
        lines.append("certificate:")
        lines.extend(_certificate_lines(verdict.certificate))
    stats = verdict.stats
    lines.append(
        f"stats: rounds={stats.rounds} boxes={stats.boxes_examined} max_depth={stats.max_depth} "
        f"precision={stats.precision_bits} capped={str(stats.precision_capped).lower()}"
    )
    return "\n".join(lines)


def render_json(verdict: Verdict) -> str:
    """JSON 結構: {verdict, budget_used, certificate?, stats}。"""
    return json.dumps(verdict.to_dict(), ensure_ascii=False, indent=2)


def certificate_json(certificate: Certificate) -> str:
    return json.dumps(certificate.to_dict(), ensure_ascii=False, indent=2)
