#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
命令实现
psl2-verify、criterion、holomorph-search、catalog list；每个命令填充 ReportJson 并给出退出码
"""

import sys
import time
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from tqdm import tqdm

from cli.catalog import get_catalog, psl2_context
from cli.group_spec import group_to_json, is_inline, parse_group_spec
from cli.report import (ReportJson, VerdictCache, regular_witness_to_json, resolve_report_dir,
                        theorem_witness_to_json, verdict_to_json)
from core.criterion import InconclusiveKind, almost_simple_family, classify_group
from core.errors import InputError, ResourceError, VerificationError
from core.holomorph import (CrossStatus, build_holomorph, cross_validate, find_solvable_regular,
                            regular_subgroup_classes)
from core.psl2 import (build_theorem_witness, enumerate_almost_simple, split_prime_power,
                       splitting_check, verify_cd_factorization)
from utils.logger import get_logger, log_step, update_log_context

logger = get_logger("HolLab.cli")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_SCALE = 3


@dataclass
class CommandResult:
    report: ReportJson
    exit_code: int = EXIT_OK
    lines: List[str] = field(default_factory=list)


def _progress(iterable, desc: str, enabled: bool):
    return tqdm(iterable, desc=desc, file=sys.stderr, disable=not (enabled and sys.stderr.isatty()),
                dynamic_ncols=True, ascii=True)


class _Timer:
    def __init__(self, report: ReportJson, key: str):
        self.report = report
        self.key = key

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.report.timings[self.key] = self.report.timings.get(self.key, 0.0) + time.perf_counter() - self.start
        return False


# --- psl2-verify ---

def _validate_q_list(qs: Sequence[int]) -> None:
    for q in qs:
        split_prime_power(q)
        if q in (2, 3):
            raise InputError(f"q = {q}: 要求 q ≠ 2, 3")


def cmd_psl2_verify(report: ReportJson, qs: Sequence[int], progress: bool = True) -> CommandResult:
    """对每个 q 检查 CD 分解、分裂性与每个中间 N 的定理见证"""
    _validate_q_list(qs)
    result = CommandResult(report)
    failures = 0
    scaled = 0
    for q in _progress(qs, "psl2-verify", progress):
        update_log_context(q=q)
        entry = {"q": q, "status": "pass", "groups": []}
        try:
            with _Timer(report, f"q={q}"):
                ctx = psl2_context(q)
                cd = verify_cd_factorization(ctx)
                entry["factorization"] = {"C": cd.c_order, "D": cd.d_order, "PGL": cd.pgl_order,
                                          "C∩D": cd.intersection_order, "joins_equal": cd.joins_equal}
                if q % 2:
                    split = splitting_check(ctx)
                    entry["splitting"] = {"branch": split.branch, "order": split.group_order,
                                          "kernel": split.kernel_order,
                                          "complement": group_to_json(split.complement)}
                for N in enumerate_almost_simple(ctx):
                    witness = build_theorem_witness(ctx, N)
                    entry["groups"].append({
                        "name": N.name,
                        "order": N.order(),
                        "case": witness.case_tag.value,
                        "passed": witness.passed,
                        "witness": theorem_witness_to_json(witness),
                    })
                    result.lines.append(f"q = {q}  {N.name:<16} |N| = {N.order():<7} "
                                        f"{witness.case_tag.value}  |A| = {witness.A.order()}, "
                                        f"|B| = {witness.B.order()}  pass")
        except VerificationError as exc:
            failures += 1
            entry["status"] = "fail"
            entry["failed_condition"] = exc.condition
            entry["message"] = str(exc)
            result.lines.append(f"q = {q}  FAIL  {exc.condition}: {exc}")
            logger.error(f"q = {q} 验证失败: {exc}")
        except ResourceError as exc:
            scaled += 1
            entry["status"] = "inconclusive at scale"
            entry["message"] = str(exc)
            result.lines.append(f"q = {q}  inconclusive at scale: {exc}")
        report.results.append(entry)
        log_step("psl2-verify", f"q = {q}: {entry['status']}")

    if failures:
        result.exit_code = EXIT_FAILURE
        report.status = "fail"
    elif scaled:
        result.exit_code = EXIT_SCALE
        report.status = "inconclusive at scale"
    return result


# --- criterion ---

def cmd_criterion(report: ReportJson, socle_spec: str, ambient_spec: str, group_spec: Optional[str] = None,
                  all_n: bool = False, report_dir: Optional[str] = None, progress: bool = True) -> CommandResult:
    """对给定 N（或 --all-N 的每个 N）输出 <指数, 正规性, 结论>；都未给出时 N 取基座"""
    if group_spec and all_n:
        raise InputError("--group 与 --all-N 不能同时给出")
    if not all_n and not group_spec:
        group_spec = socle_spec
    socle = parse_group_spec(socle_spec)
    ambient = parse_group_spec(ambient_spec)
    if socle.degree != ambient.degree:
        raise InputError("基座与环境群的作用次数不一致")
    if not socle.is_subgroup_of(ambient):
        raise InputError("基座不包含在环境群中")

    with _Timer(report, "family"):
        if all_n:
            family = almost_simple_family(ambient, socle)
        else:
            N = parse_group_spec(group_spec)
            if N.degree != ambient.degree or not (socle.is_subgroup_of(N) and N.is_subgroup_of(ambient)):
                raise InputError("要求 socle ≤ N ≤ ambient")
            family = [N]

    directory = resolve_report_dir(report_dir)
    cache = VerdictCache(directory) if directory else None
    result = CommandResult(report)
    for i, N in enumerate(_progress(family, "criterion", progress)):
        with _Timer(report, f"N{i}"):
            verdict = classify_group(ambient, socle, N)
        report.results.append(verdict_to_json(verdict, N))
        result.lines.append(verdict.as_row())
        if verdict.inconclusive_kind is InconclusiveKind.SCALE:
            result.exit_code = EXIT_SCALE
            report.status = "inconclusive at scale"
        if cache is not None:
            cache.store(N, verdict, report.inputs)
    return result


# --- holomorph-search ---

def cmd_holomorph_search(report: ReportJson, group_spec: str, aut_spec: Optional[str] = None,
                         report_dir: Optional[str] = None) -> CommandResult:
    """在 Hol(N) 中搜索可解正则子群，并与缓存的判据结论比对"""
    N = parse_group_spec(group_spec)
    if aut_spec:
        aut = parse_group_spec(aut_spec)
    elif is_inline(group_spec) or group_spec.strip().startswith("@"):
        raise InputError("内联给出的 N 必须用 --aut 指定自同构群")
    else:
        aut = get_catalog().automorphism_ambient(group_spec)

    result = CommandResult(report)
    entry = {"N": group_to_json(N)}
    report.results.append(entry)
    with _Timer(report, "holomorph"):
        ctx = build_holomorph(N, aut)
        entry["hol_order"] = ctx.hol.order()
        try:
            witness = find_solvable_regular(ctx)
        except ResourceError as exc:
            entry["outcome"] = "unknown at scale"
            entry["message"] = str(exc)
            report.status = "inconclusive at scale"
            result.exit_code = EXIT_SCALE
            result.lines.append(f"|N| = {N.order()}: unknown at scale")
            return result

    if witness is None:
        entry["outcome"] = "absent"
        result.lines.append(f"|N| = {N.order()}: 没有可解正则子群 (absent)")
    else:
        entry["outcome"] = "found"
        entry["witness"] = regular_witness_to_json(witness)
        if ctx.lattice_searched:
            entry["regular_classes"] = len(regular_subgroup_classes(ctx))
        result.lines.append(f"|N| = {N.order()}: 找到可解正则子群 ({witness.iso_class_hint})")

    directory = resolve_report_dir(report_dir)
    cached = VerdictCache(directory).load(N) if directory else None
    if cached is not None:
        check = cross_validate(ctx, cached)
        entry["cross_validation"] = {"status": check.status.value, "detail": check.detail}
        result.lines.append(f"交叉验证: {check.status.value} ({check.detail})")
        if check.status is CrossStatus.CONTRADICTION:
            report.status = "contradiction"
            result.exit_code = EXIT_FAILURE
    return result


# --- catalog list ---

def cmd_catalog_list(report: ReportJson) -> CommandResult:
    result = CommandResult(report)
    for row in get_catalog().describe():
        report.results.append(row)
        order = row["order"] if row["order"] is not None else "-"
        degree = row["degree"] if row["degree"] is not None else "-"
        result.lines.append(f"{row['name']:<14} degree {str(degree):<5} order {str(order):<9} {row['notes']}")
    return result
