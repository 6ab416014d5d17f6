#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
判定模块
对单个 N 汇总 (a)/(b) 的搜索结果，给出 true / false / inconclusive
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

from core.criterion.context import AlmostSimpleContext, intermediate_subgroups
from core.criterion.search import (PART_A, PART_B, CriterionWitness, first_witness,
                                   verify_witness)
from core.errors import ResourceError
from core.permcore import GroupHandle, is_normal
from utils.logger import get_logger, log_step

logger = get_logger("HolLab.criterion")


class Conclusion(str, Enum):
    TRUE = "true"
    FALSE = "false"
    INCONCLUSIVE = "inconclusive"


class InconclusiveKind(str, Enum):
    MATHEMATICAL = "mathematical"   # (a) 成立而 (b) 不成立
    SCALE = "scale"                 # 超出计算上限


@dataclass
class Verdict:
    """单个 N 的判定结果"""
    index: int
    normal: bool
    conclusion: Conclusion
    n_order: int
    inconclusive_kind: Optional[InconclusiveKind] = None
    reason: str = ""
    witnesses: List[CriterionWitness] = field(default_factory=list)
    part_a_orders: List[int] = field(default_factory=list)
    part_b_orders: List[int] = field(default_factory=list)

    def as_row(self) -> str:
        """<[N:Soc(N)], "normal"/"not normal", 结论>"""
        normal = "normal" if self.normal else "not normal"
        return f'<{self.index}, "{normal}", "{self.conclusion.value}">'

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "normal": self.normal,
            "conclusion": self.conclusion.value,
            "inconclusive_kind": self.inconclusive_kind.value if self.inconclusive_kind else None,
            "reason": self.reason,
            "n_order": self.n_order,
            "part_a_orders": list(self.part_a_orders),
            "part_b_orders": list(self.part_b_orders),
        }


def classify(ctx: AlmostSimpleContext) -> Verdict:
    """
    对 ctx.N 运行判据

    每个中间子群 P 先找 (b) 见证（它同时满足 (a)），否则再找 (a) 见证。
    见证在输出前用成员测试复核。超出上限时返回 inconclusive(scale)。
    """
    index = ctx.index
    normal = is_normal(ctx.ambient, ctx.N)
    verdict = Verdict(index=index, normal=normal, conclusion=Conclusion.INCONCLUSIVE,
                      n_order=ctx.N.order())
    try:
        for P in intermediate_subgroups(ctx):
            witness = first_witness(ctx, P, PART_B)
            if witness is None:
                witness = first_witness(ctx, P, PART_A)
            if witness is None:
                log_step("判据", f"|P| = {P.order()}: 无 (a) 见证")
                continue
            verify_witness(witness, ctx.N)
            verdict.witnesses.append(witness)
            verdict.part_a_orders.append(P.order())
            if witness.part == PART_B:
                verdict.part_b_orders.append(P.order())
            log_step("判据", f"|P| = {P.order()}: ({witness.part}) |A| = {witness.A.order()}, "
                             f"|B| = {witness.B.order()}")
    except ResourceError as exc:
        logger.warning(f"|N| = {ctx.N.order()} 超出计算上限: {exc}")
        verdict.inconclusive_kind = InconclusiveKind.SCALE
        verdict.reason = str(exc)
        verdict.witnesses.clear()
        verdict.part_a_orders.clear()
        verdict.part_b_orders.clear()
        return verdict

    if not verdict.part_a_orders:
        verdict.conclusion = Conclusion.FALSE
        verdict.reason = "没有中间子群 P 满足 (a)"
    elif verdict.part_b_orders:
        verdict.conclusion = Conclusion.TRUE
        verdict.reason = f"|P| = {verdict.part_b_orders[0]} 满足 (b)"
    else:
        verdict.inconclusive_kind = InconclusiveKind.MATHEMATICAL
        verdict.reason = "存在满足 (a) 的 P，但没有 P 满足 (b)"
    return verdict


def classify_group(ambient: GroupHandle, inn: GroupHandle, N: GroupHandle) -> Verdict:
    """构造上下文并判定；构造阶段超出上限同样记为 inconclusive(scale)"""
    try:
        ctx = AlmostSimpleContext.build(ambient, inn, N)
    except ResourceError as exc:
        logger.warning(f"|N| = {N.order()} 的上下文超出计算上限: {exc}")
        return Verdict(index=N.order() // inn.order(), normal=is_normal(ambient, N),
                       conclusion=Conclusion.INCONCLUSIVE, n_order=N.order(),
                       inconclusive_kind=InconclusiveKind.SCALE, reason=str(exc))
    return classify(ctx)
