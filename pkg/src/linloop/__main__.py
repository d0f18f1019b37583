# src/linloop/__main__.py
"""
linloop 命令列入口。

子命令: analyze、simulate、sample、batch、replay。
結束碼: 0 = 已判定 (或命令成功)，2 = Unknown / 證書未再次驗證，1 = 錯誤。
"""

# 1. 標準庫導入
import argparse
import json
import logging
import sys
from pathlib import Path

# 2. 第三方庫導入
# (無)

# 3. 本專案導入
from linloop.core.batch_processor import BatchProcessor
from linloop.core.config_loader import ConfigLoader
from linloop.core.decision_driver import decide, replay_certificate
from linloop.errors import LinloopError
from linloop.models.instance import LoopInstance
from linloop.models.verdict import Certificate, Outcome, Verdict
from linloop.oracle.audits import audit_escaping, audit_trapped
from linloop.oracle.sampler import sample_instances, write_samples
from linloop.oracle.simulator import simulate_escape, simulate_escape_affine
from linloop.parsers.instance_parser import load_instance, parse_number
from linloop.reporters.markdown_reporter import generate_markdown_report
from linloop.reporters.verdict_reporter import certificate_json, render_json, render_text
from linloop.utils.logging_utils import configure_logging

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNDECIDED = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="linloop", description="線性 / 仿射迴圈的穩健終止性判定")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="增加日誌詳細程度 (-v, -vv, -vvv)")
    parser.add_argument("-q", "--quiet", action="store_true", help="只輸出錯誤日誌")
    parser.add_argument("--config", type=Path, default=None, help="YAML 分析設定檔")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="判定單一實例")
    analyze.add_argument("file", type=Path)
    analyze.add_argument("--max-budget", type=int, default=None)
    analyze.add_argument("--format", choices=("text", "json"), default="text")
    analyze.add_argument("--emit-certificate", type=Path, default=None)
    analyze.add_argument("--audit", action="store_true", help="以精確模擬稽核已判定的結果 (僅限有理數實例)")

    simulate = sub.add_parser("simulate", help="以精確有理數模擬一條軌跡")
    simulate.add_argument("file", type=Path)
    simulate.add_argument("--point", required=True, help="以逗號分隔的起始點座標，例如 1,1/2")
    simulate.add_argument("--steps", type=int, required=True)

    sample = sub.add_parser("sample", help="產生隨機有理數實例檔案")
    sample.add_argument("--dim", type=int, required=True)
    sample.add_argument("--constraints", type=int, required=True)
    sample.add_argument("--count", type=int, required=True)
    sample.add_argument("--seed", type=int, required=True)
    sample.add_argument("--out", type=Path, required=True)
    sample.add_argument("--kind", choices=("linear", "affine"), default="linear")

    batch = sub.add_parser("batch", help="判定目錄中的所有實例")
    batch.add_argument("directory", type=Path)
    batch.add_argument("--max-budget", type=int, default=None)
    batch.add_argument("--workers", type=int, default=None)
    batch.add_argument("--report", type=Path, default=None)

    replay = sub.add_parser("replay", help="重新驗證一份證書")
    replay.add_argument("file", type=Path)
    replay.add_argument("certificate", type=Path)
    return parser


def _audit(inst: LoopInstance, verdict: Verdict, loader: ConfigLoader) -> bool:
    sim = loader.section("simulation")
    max_bits = int(sim["max_numerator_bits"])
    if verdict.outcome is Outcome.ROBUST_TRAPPED:
        report = audit_trapped(inst, verdict, int(sim["trapped_steps"]), max_bits)
    else:
        report = audit_escaping(inst, verdict, int(sim["escape_points"]), int(sim["escape_steps"]), max_bits=max_bits)
    print(f"audit: {'passed' if report.passed else 'failed'} (checked={report.checked} failures={report.failures})")
    for line in report.details:
        logging.info(f"稽核: {line}")
    return report.passed


def _cmd_analyze(args: argparse.Namespace, loader: ConfigLoader) -> int:
    loader.override("decide.max_budget", args.max_budget)
    decide_cfg = loader.section("decide")
    inst = load_instance(args.file)
    verdict = decide(
        inst,
        max_budget=int(decide_cfg["max_budget"]),
        schedule=loader.budget_schedule(),
        cross_check=bool(decide_cfg["cross_check"]),
    )
    print(render_json(verdict) if args.format == "json" else render_text(verdict))
    if args.emit_certificate is not None:
        if verdict.certificate is None:
            logging.warning("結果為 unknown，沒有證書可輸出")
        else:
            args.emit_certificate.write_text(certificate_json(verdict.certificate) + "\n", encoding="utf-8")
            logging.info(f"證書已寫入 {args.emit_certificate}")
    if args.audit and verdict.decided and not _audit(inst, verdict, loader):
        return EXIT_ERROR
    return EXIT_OK if verdict.decided else EXIT_UNDECIDED


def _cmd_simulate(args: argparse.Namespace, loader: ConfigLoader) -> int:
    inst = load_instance(args.file)
    data = inst.rational_data()
    point = [parse_number(x) for x in args.point.split(",")]
    if len(point) != inst.n:
        logging.error(f"起始點維度 {len(point)} 與實例維度 {inst.n} 不符")
        return EXIT_ERROR
    max_bits = int(loader.section("simulation")["max_numerator_bits"])
    if inst.is_affine:
        result = simulate_escape_affine(data.A, data.b, data.B, data.eta, point, args.steps, max_bits)
    else:
        result = simulate_escape(data.A, data.B, point, args.steps, max_bits)
    print(result.describe())
    return EXIT_OK


def _cmd_sample(args: argparse.Namespace, loader: ConfigLoader) -> int:
    instances = sample_instances(args.dim, args.constraints, args.kind, args.count, args.seed)
    for path in write_samples(instances, args.seed, args.out):
        print(path)
    return EXIT_OK


def _cmd_batch(args: argparse.Namespace, loader: ConfigLoader) -> int:
    loader.override("decide.max_budget", args.max_budget)
    loader.override("parallel.max_workers", args.workers)
    processor = BatchProcessor(loader.config)
    results = processor.run(processor.discover(args.directory))
    for r in results:
        print(f"{Path(r.path).name}\t{'error' if r.failed else r.outcome}")
    if args.report is not None:
        generate_markdown_report(results, args.report)
    return EXIT_ERROR if any(r.failed for r in results) else EXIT_OK


def _cmd_replay(args: argparse.Namespace, loader: ConfigLoader) -> int:
    inst = load_instance(args.file)
    try:
        data = json.loads(args.certificate.read_text(encoding="utf-8"))
        certificate = Certificate.from_dict(data.get("certificate", data))
    except (json.JSONDecodeError, KeyError, ValueError, TypeError, AttributeError) as e:
        logging.error(f"無法解析證書檔案 '{args.certificate}': {e}")
        return EXIT_ERROR
    verified = replay_certificate(inst, certificate, loader.budget_schedule())
    print("verified" if verified else "not_verified")
    return EXIT_OK if verified else EXIT_UNDECIDED


_COMMANDS = {
    "analyze": _cmd_analyze,
    "simulate": _cmd_simulate,
    "sample": _cmd_sample,
    "batch": _cmd_batch,
    "replay": _cmd_replay,
}


def run_cli(argv: list[str] | None = None) -> int:
    """解析參數並執行子命令，回傳結束碼。"""
    args = build_parser().parse_args(argv)
    configure_logging(-1 if args.quiet else args.verbose)
    loader = ConfigLoader(args.config)
    try:
        return _COMMANDS[args.command](args, loader)
    except (LinloopError, OSError) as e:
        logging.error(f"{args.command} 失敗: {e}")
        return EXIT_ERROR
    except Exception as e:
        logging.error(f"{args.command} 發生未預期的嚴重錯誤: {e}", exc_info=True)
        return EXIT_ERROR


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
