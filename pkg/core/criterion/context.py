#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
几乎单群上下文模块
以环境群 Aut(T) 中 N 的正规化子充当 Aut(N)，并枚举 N ≤ P ≤ Aut(N) 的中间子群
"""

from dataclasses import dataclass
from typing import List

from core.errors import InputError
from core.lattice import all_subgroup_classes_of_solvable
from core.permcore import GroupHandle, coset_action, is_normal, is_solvable, join, normalizer
from utils.logger import get_logger

logger = get_logger("HolLab.criterion")


@dataclass
class AlmostSimpleContext:
    """几乎单群判据的上下文

    ambient 扮演 Aut(T)，inn 为调用方指定的基座，autN = N_ambient(N)。
    """
    ambient: GroupHandle
    inn: GroupHandle
    N: GroupHandle
    autN: GroupHandle

    @classmethod
    def build(cls, ambient: GroupHandle, inn: GroupHandle, N: GroupHandle) -> "AlmostSimpleContext":
        """构造并验证上下文；不满足前置条件时抛出 InputError"""
        if not (inn.is_subgroup_of(N) and N.is_subgroup_of(ambient)):
            raise InputError("要求 inn ≤ N ≤ ambient")
        autN = normalizer(ambient, N)
        ctx = cls(ambient=ambient, inn=inn, N=N, autN=autN)
        valid, errors = ctx.validate()
        if not valid:
            raise InputError("; ".join(errors))
        logger.info(f"上下文: |inn| = {inn.order()}, |N| = {N.order()}, |Aut(N)| = {autN.order()}")
        return ctx

    def validate(self) -> tuple[bool, list[str]]:
        """
        验证上下文的有效性

        Returns:
            tuple[bool, list[str]]: (是否有效, 错误消息列表)
        """
        errors = []
        if not self.inn.is_subgroup_of(self.N):
            errors.append("inn 不包含在 N 中")
        if not self.N.is_subgroup_of(self.autN):
            errors.append("N 不包含在 autN 中")
        if not self.autN.is_subgroup_of(self.ambient):
            errors.append("autN 不包含在 ambient 中")
        if not errors and not is_normal(self.autN, self.inn):
            errors.append("inn 在 autN 中不正规")
        if not errors and not _centralizer_is_trivial(self.autN, self.inn):
            errors.append("inn 在 autN 中的中心化子非平凡（N 不是无中心的）")
        return len(errors) == 0, errors

    @property
    def index(self) -> int:
        """[N : Soc(N)]"""
        return self.N.order() // self.inn.order()


def _centralizer_is_trivial(G: GroupHandle, H: GroupHandle) -> bool:
    for g in G.elements():
        if g.is_identity():
            continue
        if all(g * h == h * g for h in H.generators):
            return False
    return True


def _lift_quotient_classes(top: GroupHandle, bottom: GroupHandle) -> List[GroupHandle]:
    """bottom ⊴ top 时，按商群子群类提升出 bottom ≤ X ≤ top 的全部 X（在 top 共轭下）"""
    hom = coset_action(top, bottom)
    quotient = hom.image()
    if not is_solvable(quotient):
        raise InputError("商群不可解，无法枚举中间子群")
    table = hom.lift_table()
    lifted = []
    for cls in all_subgroup_classes_of_solvable(quotient):
        lifts = [table[g] for g in cls.representative.generators]
        lifted.append(join(bottom, GroupHandle(top.degree, lifts)))
    lifted.sort(key=lambda X: X.order())
    return lifted


def intermediate_subgroups(ctx: AlmostSimpleContext) -> List[GroupHandle]:
    """N ≤ P ≤ Aut(N) 的全部 P（在 Aut(N) 共轭下），按阶升序"""
    cached = ctx.N.cache.get(("intermediate", id(ctx.autN)))
    if cached is None:
        cached = _lift_quotient_classes(ctx.autN, ctx.N)
        ctx.N.cache[("intermediate", id(ctx.autN))] = cached
    return cached


def almost_simple_family(ambient: GroupHandle, socle: GroupHandle) -> List[GroupHandle]:
    """socle ≤ N ≤ ambient 的全部 N（在 ambient 共轭下），按阶升序"""
    if not socle.is_subgroup_of(ambient) or not is_normal(ambient, socle):
        raise InputError("基座必须是环境群的正规子群")
    family = _lift_quotient_classes(ambient, socle)
    # 平凡商类对应的就是 socle 本身，保留其原有生成元
    family[0] = socle
    return family
