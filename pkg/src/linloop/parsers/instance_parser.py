# src/linloop/parsers/instance_parser.py
"""
實例檔案的解析與序列化。

檔案格式為 UTF-8 JSON 物件:
    {"kind": "linear" | "affine", "A": [[...]], "B": [[...]], "b": [...], "eta": [...]}

項目字串文法:
    有理數  -?[0-9]+(/[0-9]+)?
    十進位  -?[0-9]+.[0-9]+       (精確轉為有理數)
    區間    [<數>,<數>]
"""

# 1. 標準庫導入
import json
import logging
import re
from fractions import Fraction
from pathlib import Path
from typing import Any

# 2. 第三方庫導入
# (無)

# 3. 本專案導入
from linloop.errors import InstanceDimensionError, InstanceSyntaxError, ZeroDenominatorError
from linloop.models.entries import EntrySource, IntervalEntry, RationalEntry
from linloop.models.instance import LoopInstance, LoopKind

_RATIONAL = re.compile(r"-?[0-9]+(?:/[1-9][0-9]*)?")
_ZERO_DENOMINATOR = re.compile(r"-?[0-9]+/0+")
_DECIMAL = re.compile(r"-?[0-9]+\.[0-9]+")
_INTERVAL = re.compile(r"\[\s*([^,\[\]]+?)\s*,\s*([^,\[\]]+?)\s*\]")


def parse_number(text: str) -> Fraction:
    """解析有理數或十進位字串為精確的 Fraction。"""
    text = text.strip()
    if _ZERO_DENOMINATOR.fullmatch(text):
        raise ZeroDenominatorError(f"項目 '{text}' 的分母為 0")
    if _RATIONAL.fullmatch(text):
        if "/" in text:
            numerator, denominator = text.split("/")
            return Fraction(int(numerator), int(denominator))
        return Fraction(int(text))
    if _DECIMAL.fullmatch(text):
        return Fraction(text)
    raise InstanceSyntaxError(f"無法解析的數字 '{text}'")


def parse_entry(raw: Any) -> EntrySource:
    """解析單一項目 (字串或 JSON 整數)。"""
    if isinstance(raw, bool):
        raise InstanceSyntaxError(f"項目不可為布林值: {raw!r}")
    if isinstance(raw, int):
        return RationalEntry(Fraction(raw))
    if isinstance(raw, float):
        raise InstanceSyntaxError(f"不接受浮點數項目 {raw!r}，請改用字串 (例如 \"{raw}\")")
    if not isinstance(raw, str):
        raise InstanceSyntaxError(f"項目必須是字串，實際為 {type(raw).__name__}")

    text = raw.strip()
    match = _INTERVAL.fullmatch(text)
    if match:
        lo, hi = parse_number(match.group(1)), parse_number(match.group(2))
        if lo > hi:
            raise InstanceSyntaxError(f"區間項目 '{text}' 的下端點大於上端點")
        return IntervalEntry(lo, hi)
    return RationalEntry(parse_number(text))


def _parse_matrix(data: dict[str, Any], key: str) -> tuple[tuple[EntrySource, ...], ...]:
    if key not in data:
        raise InstanceSyntaxError(f"缺少欄位 '{key}'")
    rows = data[key]
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise InstanceSyntaxError(f"欄位 '{key}' 必須是二維陣列")
    return tuple(tuple(parse_entry(x) for x in row) for row in rows)


def _parse_vector(data: dict[str, Any], key: str) -> tuple[EntrySource, ...]:
    if key not in data:
        raise InstanceSyntaxError(f"仿射實例缺少欄位 '{key}'")
    values = data[key]
    if not isinstance(values, list):
        raise InstanceSyntaxError(f"欄位 '{key}' 必須是一維陣列")
    return tuple(parse_entry(x) for x in values)


def parse_instance(text: str) -> LoopInstance:
    """
    將實例檔案內容解析為 LoopInstance。

    Raises:
        InstanceSyntaxError: JSON 或項目格式錯誤。
        ZeroDenominatorError: 有理數項目的分母為 0。
        InstanceDimensionError: n=0、m=0 或形狀不一致。
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InstanceSyntaxError(f"實例檔案不是合法的 JSON: {e}") from e
    if not isinstance(data, dict):
        raise InstanceSyntaxError("實例檔案的頂層必須是 JSON 物件")

    try:
        kind = LoopKind(data.get("kind"))
    except ValueError as e:
        raise InstanceSyntaxError(f"未知的實例種類 {data.get('kind')!r}，必須是 'linear' 或 'affine'") from e

    A = _parse_matrix(data, "A")
    B = _parse_matrix(data, "B")
    if kind is LoopKind.AFFINE:
        return LoopInstance(kind, A, B, _parse_vector(data, "b"), _parse_vector(data, "eta"))
    extra = [key for key in ("b", "eta") if key in data]
    if extra:
        raise InstanceDimensionError(f"線性實例不可包含欄位 {', '.join(extra)}")
    return LoopInstance(kind, A, B)


def load_instance(path: Path) -> LoopInstance:
    """讀取並解析實例檔案；I/O 錯誤以 OSError 原樣拋出。"""
    logging.debug(f"讀取實例檔案: {path}")
    return parse_instance(Path(path).read_text(encoding="utf-8"))


def instance_to_dict(inst: LoopInstance) -> dict[str, Any]:
    data: dict[str, Any] = {
        "kind": inst.kind.value,
        "A": [[x.to_text() for x in row] for row in inst.A],
        "B": [[x.to_text() for x in row] for row in inst.B],
    }
    if inst.is_affine:
        data["b"] = [x.to_text() for x in inst.b]
        data["eta"] = [x.to_text() for x in inst.eta]
    return data


def serialize_instance(inst: LoopInstance) -> str:
    """
    parse_instance 的反函式。

    Raises:
        OracleError: 實例含有預言機項目。
    """
    return json.dumps(instance_to_dict(inst), ensure_ascii=False, indent=2)
