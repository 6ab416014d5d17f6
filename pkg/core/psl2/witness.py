#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
定理见证模块
对 PSL₂(q) ≤ N ≤ PΓL₂(q) 构造 P = PGL₂(q)⋊E 中的分解 P = AB，并逐项验证
"""

from dataclasses import dataclass, field
from enum import Enum
from math import gcd
from typing import Dict, Optional

from core.criterion import has_complement
from core.errors import InputError, VerificationError
from core.permcore import GroupHandle, intersection, is_normal, is_solvable, join
from core.psl2.context import Psl2Context, projection_E, subgroup_C, subgroup_D
from utils.logger import get_logger

logger = get_logger("HolLab.psl2")


class CaseTag(str, Enum):
    EVEN = "q≡0 mod 2"
    ONE_MOD_4 = "q≡1 mod 4"
    THREE_MOD_4 = "q≡3 mod 4"

    @classmethod
    def for_q(cls, q: int) -> "CaseTag":
        if q % 2 == 0:
            return cls.EVEN
        return cls.ONE_MOD_4 if q % 4 == 1 else cls.THREE_MOD_4


@dataclass
class TheoremWitness:
    """P = AB、A∩B = 1、AN = BN 且 A 在 A∩N 上分裂"""
    N: GroupHandle
    P: GroupHandle
    A: GroupHandle
    B: GroupHandle
    E: GroupHandle
    case_tag: CaseTag
    complement: GroupHandle
    checks: Dict[str, bool] = field(default_factory=dict)
    n_shape: Optional[str] = None       # 仅 q ≡ 3 (mod 4)：PSL⋊E 或 PGL⋊E
    coprime_split: Optional[bool] = None

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(self.checks.values())


def _semidirect_DE(ctx: Psl2Context, E: GroupHandle) -> GroupHandle:
    """D⋊E = ⟨D, E⟩，并确认 D 正规且 D∩E = 1"""
    D = subgroup_D(ctx)
    DE = join(D, E, name=f"D⋊E({ctx.q})")
    if not is_normal(DE, D) or not intersection(D, E).is_trivial():
        raise VerificationError("semidirect", f"q = {ctx.q}: ⟨D, E⟩ 不是半直积")
    return DE


def _require(checks: Dict[str, bool], condition: str, ok: bool, message: str):
    checks[condition] = ok
    if not ok:
        raise VerificationError(condition, message)


def build_theorem_witness(ctx: Psl2Context, N: GroupHandle) -> TheoremWitness:
    """按 q 的同余类选择 (A, B) 并验证全部条件

    q 为偶数或 q ≡ 1 (mod 4) 时 (A, B) = (C, D⋊E)；q ≡ 3 (mod 4) 时 (A, B) = (D⋊E, C)。
    """
    q = ctx.q
    if q in (2, 3):
        raise InputError("要求 q ≠ 2, 3")
    E = projection_E(ctx, N)
    P = join(ctx.pgl, E, name=f"PGL2({q})⋊E")
    C = subgroup_C(ctx)
    DE = _semidirect_DE(ctx, E)
    tag = CaseTag.for_q(q)
    n_shape = None
    coprime = None

    if tag is CaseTag.THREE_MOD_4:
        A, B = DE, C
        if N.same_group(join(ctx.psl, E)):
            n_shape = "PSL⋊E"
        elif N.same_group(P):
            n_shape = "PGL⋊E"
        else:
            raise VerificationError("n_shape", f"q = {q}: N 既不是 PSL⋊E 也不是 PGL⋊E")
        # f 为奇数，故 |E| 与 2 互素
        coprime = gcd(E.order(), 2) == 1
    else:
        A, B = C, DE
        if tag is CaseTag.EVEN and not N.same_group(P):
            raise VerificationError("n_shape", f"q = {q}: q 为偶数时应有 N = PGL⋊E")

    checks: Dict[str, bool] = {}
    _require(checks, "containment", N.is_subgroup_of(P) and A.is_subgroup_of(P) and B.is_subgroup_of(P),
             f"q = {q}: N、A、B 不全在 P 中")
    _require(checks, "solvable", is_solvable(A) and is_solvable(B), f"q = {q}: A 或 B 不可解")
    meet = intersection(A, B)
    _require(checks, "factorization", A.order() * B.order() // meet.order() == P.order(),
             f"q = {q}: |A||B|/|A∩B| ≠ |P| = {P.order()}")
    _require(checks, "trivial_intersection", meet.is_trivial(), f"q = {q}: |A∩B| = {meet.order()}")
    _require(checks, "equal_joins", join(A, N).same_group(join(B, N)), f"q = {q}: AN ≠ BN")

    K = intersection(A, N)
    S = has_complement(A, K)
    _require(checks, "splits", S is not None, f"q = {q}: A 在 A∩N 上不分裂")

    witness = TheoremWitness(N=N, P=P, A=A, B=B, E=E, case_tag=tag, complement=S,
                             checks=checks, n_shape=n_shape, coprime_split=coprime)
    logger.debug(f"q = {q}, |N| = {N.order()}: {tag.value}, |A| = {A.order()}, |B| = {B.order()}")
    return witness
