#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
报告模块
JSON 报告（schema 1）、见证的序列化与离线复核、按 N 指纹存放的判定缓存
"""

import hashlib
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from cli.group_spec import group_from_json, group_to_json
from core.config_manager import get_config_manager
from core.criterion import (Conclusion, CriterionWitness, InconclusiveKind, Verdict,
                            verify_witness)
from core.errors import HolLabError, InputError, VerificationError
from core.holomorph import RegularWitness
from core.permcore import GroupHandle, intersection, is_solvable, join
from core.psl2 import TheoremWitness
from core.version_manager import environment_stamp, get_current_version
from utils.file_utils import atomic_write_json, atomic_write_text, dump_json, read_json
from utils.logger import get_logger

logger = get_logger("HolLab.report")

SCHEMA_VERSION = 1
REPORT_DIR_ENV = "HOLLAB_REPORT_DIR"


def fingerprint(N: GroupHandle) -> str:
    """N 的元素集合的 SHA-256；与生成元的选择无关"""
    rows = sorted(",".join(map(str, g.images)) for g in N.elements())
    digest = hashlib.sha256(f"{N.degree}\n".encode("utf-8"))
    for row in rows:
        digest.update(row.encode("utf-8"))
        digest.update(b"\n")
    return "sha256:" + digest.hexdigest()


# --- 见证序列化 ---

def criterion_witness_to_json(w: CriterionWitness) -> Dict[str, Any]:
    return {
        "part": w.part,
        "P": group_to_json(w.P),
        "A": group_to_json(w.A),
        "B": group_to_json(w.B),
        "complement": group_to_json(w.complement) if w.complement is not None else None,
    }


def criterion_witness_from_json(data: Dict[str, Any]) -> CriterionWitness:
    complement = data.get("complement")
    return CriterionWitness(
        P=group_from_json(data["P"]),
        A=group_from_json(data["A"]),
        B=group_from_json(data["B"]),
        part=data["part"],
        complement=group_from_json(complement) if complement else None,
    )


def verdict_to_json(verdict: Verdict, N: GroupHandle) -> Dict[str, Any]:
    data = verdict.to_dict()
    data["row"] = verdict.as_row()
    data["N"] = group_to_json(N)
    data["witnesses"] = [criterion_witness_to_json(w) for w in verdict.witnesses]
    return data


def verdict_from_json(data: Dict[str, Any]) -> Verdict:
    kind = data.get("inconclusive_kind")
    return Verdict(
        index=int(data["index"]),
        normal=bool(data["normal"]),
        conclusion=Conclusion(data["conclusion"]),
        n_order=int(data["n_order"]),
        inconclusive_kind=InconclusiveKind(kind) if kind else None,
        reason=data.get("reason", ""),
        part_a_orders=list(data.get("part_a_orders", [])),
        part_b_orders=list(data.get("part_b_orders", [])),
    )


def theorem_witness_to_json(w: TheoremWitness) -> Dict[str, Any]:
    return {
        "case": w.case_tag.value,
        "N": group_to_json(w.N),
        "P": group_to_json(w.P),
        "A": group_to_json(w.A),
        "B": group_to_json(w.B),
        "E": group_to_json(w.E),
        "complement": group_to_json(w.complement),
        "checks": dict(sorted(w.checks.items())),
        "n_shape": w.n_shape,
        "coprime_split": w.coprime_split,
    }


def regular_witness_to_json(w: RegularWitness) -> Dict[str, Any]:
    return {
        "G": group_to_json(w.G),
        "solvable": w.solvable,
        "iso_class_hint": w.iso_class_hint,
    }


# --- 离线复核 ---

def reverify_theorem_witness(data: Dict[str, Any]) -> None:
    """只用重建的句柄与成员测试复核 P = AB、A∩B = 1、AN = BN、A 在 A∩N 上分裂"""
    N, P, A, B = (group_from_json(data[k]) for k in ("N", "P", "A", "B"))
    S = group_from_json(data["complement"])
    if not all(X.is_subgroup_of(P) for X in (N, A, B)):
        raise VerificationError("containment", "N、A、B 不全在 P 中")
    meet = intersection(A, B)
    if not meet.is_trivial():
        raise VerificationError("trivial_intersection", f"|A∩B| = {meet.order()}")
    if A.order() * B.order() != P.order():
        raise VerificationError("factorization", f"|A||B| ≠ |P| = {P.order()}")
    if not join(A, N).same_group(join(B, N)):
        raise VerificationError("equal_joins", "AN ≠ BN")
    K = intersection(A, N)
    if not S.is_subgroup_of(A) or not intersection(S, K).is_trivial() or S.order() * K.order() != A.order():
        raise VerificationError("splits", "补子群不满足条件")


def reverify_regular_witness(data: Dict[str, Any]) -> None:
    G = group_from_json(data["G"])
    if G.order() != G.degree or len(G.orbit(0)) != G.degree:
        raise VerificationError("regular", "G 不是正则子群")
    if not is_solvable(G):
        raise VerificationError("solvable", "G 不可解")


def reverify_report(data: Dict[str, Any]) -> List[str]:
    """复核报告中的全部见证，返回失败描述（空列表表示全部通过）"""
    if data.get("schema") != SCHEMA_VERSION:
        raise InputError(f"不支持的报告 schema: {data.get('schema')}")
    failures = []
    command = data.get("command")
    for i, result in enumerate(data.get("results", [])):
        try:
            if command == "criterion":
                N = group_from_json(result["N"])
                for w in result.get("witnesses", []):
                    verify_witness(criterion_witness_from_json(w), N)
            elif command == "psl2-verify":
                for group in result.get("groups", []):
                    if group.get("witness"):
                        reverify_theorem_witness(group["witness"])
            elif command == "holomorph-search":
                if result.get("witness"):
                    reverify_regular_witness(result["witness"])
        except HolLabError as exc:
            failures.append(f"结果 {i}: {exc}")
    return failures


# --- 报告 ---

@dataclass
class ReportJson:
    command: str
    inputs: Dict[str, Any]
    results: List[Dict[str, Any]] = field(default_factory=list)
    status: str = "ok"
    timings: Dict[str, float] = field(default_factory=dict)
    seed: int = 0
    version: str = ""

    def __post_init__(self):
        if not self.version:
            self.version = get_current_version()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "status": self.status,
            "seed": self.seed,
            "tool_version": self.version,
            "environment": environment_stamp(),
            "timings": {k: round(v, 6) for k, v in sorted(self.timings.items())},
        }

    def dumps(self) -> str:
        return dump_json(self.to_dict())

    def write(self, target: Union[str, Path]) -> None:
        """target 为 "-" 时写到 stdout"""
        if str(target) == "-":
            sys.stdout.write(self.dumps())
            sys.stdout.flush()
            return
        path = atomic_write_text(target, self.dumps())
        logger.info(f"报告已写入: {path}")


def load_report(path: Union[str, Path]) -> Dict[str, Any]:
    return read_json(path)


# --- 判定缓存 ---

def resolve_report_dir(flag: Optional[str] = None) -> Optional[Path]:
    """--report-dir 优先，其次环境变量 HOLLAB_REPORT_DIR，最后配置 report.dir"""
    for candidate in (flag, os.environ.get(REPORT_DIR_ENV), get_config_manager().get("report.dir", "")):
        if candidate:
            return Path(candidate)
    return None


class VerdictCache:
    """每个 N 一个文件：verdict_<指纹>.json"""

    def __init__(self, directory: Union[str, Path]):
        self.directory = Path(directory)

    def path_for(self, N: GroupHandle) -> Path:
        digest = fingerprint(N).split(":", 1)[1]
        return self.directory / f"verdict_{digest[:32]}.json"

    def store(self, N: GroupHandle, verdict: Verdict, inputs: Dict[str, Any]) -> Path:
        data = {
            "schema": SCHEMA_VERSION,
            "fingerprint": fingerprint(N),
            "inputs": inputs,
            "verdict": verdict.to_dict(),
        }
        path = atomic_write_json(self.path_for(N), data)
        logger.debug(f"判定已缓存: {path}")
        return path

    def load(self, N: GroupHandle) -> Optional[Verdict]:
        path = self.path_for(N)
        if not path.exists():
            return None
        try:
            data = read_json(path)
        except (OSError, ValueError) as exc:
            logger.warning(f"无法读取判定缓存 {path}: {exc}")
            return None
        if data.get("fingerprint") != fingerprint(N):
            logger.warning(f"判定缓存指纹不符: {path}")
            return None
        return verdict_from_json(data["verdict"])
