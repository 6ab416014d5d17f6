#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
HolLab 主入口
几乎单群全形中可解正则子群的验证工具：psl2-verify、criterion、holomorph-search、catalog list
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

# 添加项目根目录到Python路径
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from cli.commands import (EXIT_FAILURE, EXIT_SCALE, EXIT_USAGE, CommandResult, cmd_catalog_list,
                          cmd_criterion, cmd_holomorph_search, cmd_psl2_verify)
from cli.report import ReportJson
from core.config_manager import get_config_manager
from core.errors import InputError, ResourceError, VerificationError
from utils.logger import end_session, log_error, log_system_event, setup_logger, start_session


def _common_options() -> argparse.ArgumentParser:
    """各子命令共享的选项；缺省值为 SUPPRESS，未给出时不覆盖配置"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH", default=argparse.SUPPRESS,
                        help="写 JSON 报告到 PATH（'-' 表示 stdout）")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="线程数上限")
    common.add_argument("--max-order", type=int, default=argparse.SUPPRESS,
                        help="覆盖元素扫描与子群格的规模上限")
    common.add_argument("--report-dir", default=argparse.SUPPRESS,
                        help="判定缓存目录（缺省取环境变量 HOLLAB_REPORT_DIR）")
    common.add_argument("--log-level", default=argparse.SUPPRESS,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="控制台日志级别")
    common.add_argument("--no-progress", action="store_true", default=argparse.SUPPRESS,
                        help="不显示进度条")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(prog="hollab", description="几乎单群全形中可解正则子群的验证工具",
                                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    psl2 = sub.add_parser("psl2-verify", parents=[common], help="验证 PSL₂(q) 的 CD 分解与定理见证")
    psl2.add_argument("q", nargs="+", type=int, help="素数幂 q ≠ 2, 3")

    criterion = sub.add_parser("criterion", parents=[common], help="对 Soc ≤ N ≤ Aut 运行判据")
    criterion.add_argument("--socle", required=True, help="基座 T（目录名称或内联生成元）")
    criterion.add_argument("--ambient", required=True, help="环境群 Aut(T)")
    target = criterion.add_mutually_exclusive_group()
    target.add_argument("--group", help="单个 N（缺省为基座本身）")
    target.add_argument("--all-N", dest="all_n", action="store_true", help="枚举全部 N")

    holomorph = sub.add_parser("holomorph-search", parents=[common], help="在 Hol(N) 中搜索可解正则子群")
    holomorph.add_argument("group", help="N（目录名称或内联生成元）")
    holomorph.add_argument("--aut", help="作用在 N 的作用域上、正规化 N 的群；目录名称可省略")

    catalog = sub.add_parser("catalog", parents=[common], help="群目录")
    catalog.add_argument("action", choices=["list"])
    return parser


def _apply_overrides(args: argparse.Namespace) -> None:
    config = get_config_manager()
    if getattr(args, "threads", None) is not None:
        if args.threads < 1:
            raise InputError("--threads 必须 ≥ 1")
        config.set("runtime.threads", args.threads)
    if getattr(args, "max_order", None) is not None:
        if args.max_order < 1:
            raise InputError("--max-order 必须 ≥ 1")
        for key in ("scan_bound", "lattice_order", "product_enumeration"):
            config.set(f"bounds.{key}", args.max_order)


def _inputs_of(args: argparse.Namespace) -> dict:
    skipped = {"json", "log_level", "no_progress", "report_dir", "threads"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skipped}


def _dispatch(args: argparse.Namespace, report: ReportJson) -> CommandResult:
    progress = not getattr(args, "no_progress", False)
    report_dir = getattr(args, "report_dir", None)
    if args.command == "psl2-verify":
        return cmd_psl2_verify(report, args.q, progress)
    if args.command == "criterion":
        return cmd_criterion(report, args.socle, args.ambient, args.group, args.all_n, report_dir, progress)
    if args.command == "holomorph-search":
        return cmd_holomorph_search(report, args.group, args.aut, report_dir)
    return cmd_catalog_list(report)


def main(argv: Optional[List[str]] = None) -> int:
    """主函数；返回退出码 0 通过、1 数学失败、2 用法错误、3 超出规模"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    config = get_config_manager()
    log_file = config.get("logging.file")
    setup_logger(
        log_file_path=project_root / log_file if log_file else None,
        level=getattr(args, "log_level", None) or config.get("logging.level", "INFO"),
        enable_session_log=bool(config.get("logging.session_log", False)),
        session_log_dir=project_root / "logs" / "sessions",
        context={"command": args.command},
    )
    start_session({"command": args.command, "argv": list(argv) if argv is not None else sys.argv[1:]})

    report = ReportJson(command=args.command, inputs=_inputs_of(args),
                        seed=int(config.get("runtime.seed", 0)))
    json_target = getattr(args, "json", None)
    exit_code = 0
    try:
        _apply_overrides(args)
        result = _dispatch(args, report)
        exit_code = result.exit_code
        out = sys.stderr if json_target == "-" else sys.stdout
        for line in result.lines:
            print(line, file=out)
    except InputError as e:
        print(f"错误: {e}", file=sys.stderr)
        report.status, exit_code = "usage error", EXIT_USAGE
    except VerificationError as e:
        print(f"验证失败 [{e.condition}]: {e}", file=sys.stderr)
        report.status, exit_code = f"fail: {e.condition}", EXIT_FAILURE
    except ResourceError as e:
        print(f"inconclusive at scale: {e}", file=sys.stderr)
        report.status, exit_code = "inconclusive at scale", EXIT_SCALE
    except Exception as e:
        log_error(e, f"命令 {args.command}")
        report.status, exit_code = "error", EXIT_FAILURE

    if json_target:
        try:
            report.write(json_target)
        except OSError as e:
            log_error(e, "写入报告")
            exit_code = exit_code or EXIT_FAILURE
    log_system_event("命令结束", f"{args.command}: 退出码 {exit_code}")
    end_session(exit_code == 0, f"退出码 {exit_code}")
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
