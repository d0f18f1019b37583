# tests/conftest.py
"""
測試共用的 fixture 與小工具。
"""

# 1. 標準庫導入
import json
from fractions import Fraction
from pathlib import Path

# 2. 第三方庫導入
import pytest

# 3. 本專案導入
from linloop.models.instance import LoopInstance
from linloop.semidecision.budget import BudgetSchedule


def fractions(rows):
    """把巢狀的 int / str 轉為 Fraction，方便以 "1/2" 形式書寫測試資料。"""
    if isinstance(rows, list | tuple):
        return [fractions(x) for x in rows]
    return Fraction(rows)


@pytest.fixture
def schedule() -> BudgetSchedule:
    return BudgetSchedule()


@pytest.fixture
def write_instance(tmp_path: Path):
    """將實例字典寫成 JSON 檔案並回傳路徑。"""

    def _write(data: dict, name: str = "instance.json") -> Path:
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return path

    return _write


@pytest.fixture
def halving_drift_escaping() -> LoopInstance:
    """仿射 (A=1/2, b=−1, B=1, η=0): 穩健逃逸。"""
    return LoopInstance.affine([[Fraction(1, 2)]], [-1], [[1]], [0])


@pytest.fixture
def halving_trapped() -> LoopInstance:
    """線性 (A=1/2, B=1): 穩健受困。"""
    return LoopInstance.linear([[Fraction(1, 2)]], [[1]])


@pytest.fixture
def boundary_identity() -> LoopInstance:
    """線性 A=I₂, B=[[1,0]]: 邊界實例。"""
    return LoopInstance.linear([[1, 0], [0, 1]], [[1, 0]])
