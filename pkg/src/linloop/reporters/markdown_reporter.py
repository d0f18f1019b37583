# src/linloop/reporters/markdown_reporter.py
"""
將批次判定結果匯總為單一 Markdown 報告。
"""

# 1. 標準庫導入
import datetime
import logging
from collections import Counter
from pathlib import Path

# 2. 第三方庫導入
# (無)

# 3. 本專案導入
from linloop.core.batch_processor import BatchResult


def _summary_lines(results: list[BatchResult]) -> list[str]:
    counts = Counter("error" if r.failed else r.outcome for r in results)
    lines = ["| 結果 | 數量 |", "| --- | ---: |"]
    for outcome in ("robust_escaping", "robust_trapped", "unknown", "error"):
        lines.append(f"| {outcome} | {counts.get(outcome, 0)} |")
    return lines


def _result_table(results: list[BatchResult]) -> list[str]:
    lines = ["| 檔案 | 結果 | 使用預算 | 公式 | 檢查方塊數 |", "| --- | --- | ---: | --- | ---: |"]
    for r in results:
        name = Path(r.path).name
        if r.failed:
            lines.append(f"| `{name}` | error | - | - | - |")
        else:
            lines.append(f"| `{name}` | {r.outcome} | {r.budget_used} | {r.formula or '-'} | {r.boxes_examined} |")
    return lines


def generate_markdown_report(results: list[BatchResult], output_path: Path, title: str = "linloop 批次判定報告"):
    """生成批次判定的 Markdown 報告 (結果統計、逐檔結果與錯誤明細)。"""
    report_parts = [f"# {title}"]
    report_parts.append(f"**生成時間**: {datetime.datetime.now().strftime('%Y-%m-%d %H:%M:%S')}")
    report_parts.append(f"**實例數**: {len(results)}")

    report_parts.append("\n## 1. 結果統計")
    report_parts.extend(_summary_lines(results))

    report_parts.append("\n## 2. 逐檔結果")
    report_parts.extend(_result_table(results))

    failures = [r for r in results if r.failed]
    if failures:
        report_parts.append("\n## 3. 錯誤明細")
        report_parts.append("<details>\n<summary>點擊展開/摺疊錯誤訊息</summary>\n")
        report_parts.append("```text")
        report_parts.extend(f"{Path(r.path).name}: {r.error}" for r in failures)
        report_parts.append("```\n</details>\n")

    try:
        output_path.write_text("\n".join(report_parts) + "\n", encoding="utf-8")
        logging.info(f"Markdown 報告已成功儲存至: {output_path}")
    except OSError as e:
        logging.error(f"寫入 Markdown 報告時發生錯誤: {e}")
