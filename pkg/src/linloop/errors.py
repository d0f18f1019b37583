# src/linloop/errors.py
"""
linloop 的例外階層。

函式庫層只負責拋出例外；CLI 層統一攔截 `LinloopError` 並以結束碼 1 結束。
"""


class LinloopError(Exception):
    """所有 linloop 例外的基底類別。"""


class InstanceSyntaxError(LinloopError):
    """實例檔案語法錯誤 (數字格式錯誤、欄位缺漏、元數錯誤)。"""


class InstanceDimensionError(LinloopError):
    """實例維度錯誤 (n=0、m=0 或形狀不一致)。"""


class ZeroDenominatorError(InstanceSyntaxError):
    """有理數項目的分母為零。"""


class OracleError(LinloopError):
    """精化預言機 (refinement oracle) 未能回應或回應不符合精度要求。"""


class PreconditionError(LinloopError):
    """呼叫端違反了操作的前置條件。"""


class IntervalDivisionError(LinloopError):
    """除數區間包含 0。"""


class DimensionMismatchError(LinloopError):
    """矩陣或向量的維度不相容。"""


class SingularAtThisPrecision(LinloopError):
    """
    高斯消去在目前精度下找不到排除 0 的主元。

    這是可重試的狀態：提高精度後可能成功，它本身永遠不是判定結果。
    """


class RootEnclosureError(LinloopError):
    """多項式首項係數區間包含 0，無法求根包圍。"""


class LinearDependenceError(LinloopError):
    """兩個約束列向量線性相依。"""


class UnsoundnessError(LinloopError):
    """同一預算回合中逃逸與受困兩個檢查器都通過驗證，代表內部錯誤。"""
