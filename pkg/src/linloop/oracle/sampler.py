# src/linloop/oracle/sampler.py
"""
以固定種子產生隨機有理數實例；項目為 k/2^8，k ∈ [−2^8, 2^8]。
"""

# 1. 標準庫導入
import logging
from fractions import Fraction
from pathlib import Path

# 2. 第三方庫導入
import numpy as np

# 3. 本專案導入
from linloop.errors import PreconditionError
from linloop.models.instance import LoopInstance, LoopKind
from linloop.parsers.instance_parser import serialize_instance

SAMPLE_DENOMINATOR = 2**8


def _dyadics(rng: np.random.Generator, shape: tuple[int, ...]) -> list:
    values = rng.integers(-SAMPLE_DENOMINATOR, SAMPLE_DENOMINATOR + 1, size=shape)
    return np.vectorize(lambda k: Fraction(int(k), SAMPLE_DENOMINATOR), otypes=[object])(values).tolist()


def sample_instances(n: int, m: int, kind: LoopKind | str, count: int, seed: int) -> list[LoopInstance]:
    """同一組 (n, m, kind, count, seed) 永遠產生相同的實例序列。"""
    kind = LoopKind(kind)
    if n < 1 or m < 1 or count < 1:
        raise PreconditionError(f"需要 n, m, count ≥ 1，實際為 ({n}, {m}, {count})")
    rng = np.random.default_rng(seed)
    instances = []
    for _ in range(count):
        A = _dyadics(rng, (n, n))
        B = _dyadics(rng, (m, n))
        if kind is LoopKind.AFFINE:
            instances.append(LoopInstance.affine(A, _dyadics(rng, (n,)), B, _dyadics(rng, (m,))))
        else:
            instances.append(LoopInstance.linear(A, B))
    return instances


def write_samples(instances: list[LoopInstance], seed: int, out_dir: Path) -> list[Path]:
    """每個實例寫成一個 `<seed>_<index>.json` 檔案。"""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for index, inst in enumerate(instances):
        path = out_dir / f"{seed}_{index}.json"
        path.write_text(serialize_instance(inst) + "\n", encoding="utf-8")
        paths.append(path)
    logging.info(f"已將 {len(paths)} 個樣本實例寫入 {out_dir}")
    return paths
