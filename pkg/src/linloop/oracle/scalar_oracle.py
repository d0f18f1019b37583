# src/linloop/oracle/scalar_oracle.py
"""
1×1 實例的封閉形式判定。

n = 1 時軌跡為 a^k x：a > 0 保持符號，a ≤ 0 在一步內變號或歸零。
"""

# 1. 標準庫導入
import enum
from collections.abc import Sequence
from fractions import Fraction

# 2. 第三方庫導入
# (無)

# 3. 本專案導入
# (無)


class ScalarAnswer(enum.Enum):
    ESCAPING = "escaping"
    TRAPPED = "trapped"


def decide_1x1(a: Fraction, column: Sequence[Fraction]) -> ScalarAnswer:
    """受困若且唯若 a > 0 且所有 B_j 非零且同號。"""
    a = Fraction(a)
    column = [Fraction(x) for x in column]
    same_sign = all(x > 0 for x in column) or all(x < 0 for x in column)
    if a > 0 and same_sign:
        return ScalarAnswer.TRAPPED
    return ScalarAnswer.ESCAPING


def is_boundary_1x1(a: Fraction, column: Sequence[Fraction]) -> bool:
    """邊界實例: a = 0 或某個 B_j = 0；其餘 1×1 實例都是穩健的。"""
    return Fraction(a) == 0 or any(Fraction(x) == 0 for x in column)
