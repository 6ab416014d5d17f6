#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
补子群模块
在 A 中寻找正规子群 K 的补 S：S ∩ K = 1 且 |S|·|K| = |A|
"""

from math import gcd
from typing import Optional

from core.errors import InputError, VerificationError
from core.lattice import all_subgroup_classes_of_solvable
from core.permcore import GroupHandle, intersection, is_normal, is_solvable
from utils.logger import get_logger

logger = get_logger("HolLab.criterion")


def _cyclic_complement(A: GroupHandle, K: GroupHandle, m: int) -> Optional[GroupHandle]:
    """寻找阶为 m 且与 K 交平凡的循环子群"""
    for x in A.elements():
        if x.order() != m:
            continue
        power = x
        for _ in range(1, m):
            if K.contains(power):
                break
            power = power * x
        else:
            return GroupHandle(A.degree, [x])
    return None


def has_complement(A: GroupHandle, K: GroupHandle) -> Optional[GroupHandle]:
    """K ⊴ A 时返回 K 在 A 中的一个补，不存在时返回 None

    先尝试循环补；再在 A 的全部子群类中查找阶为 [A:K] 的成员。
    K 正规，所以 S ∩ K 在共轭下不变，只需检查类代表元。
    """
    if not is_normal(A, K):
        raise InputError("has_complement 要求 K ⊴ A")
    m = A.order() // K.order()
    if m == 1:
        return GroupHandle.trivial(A.degree)
    if K.is_trivial():
        return A

    coprime = gcd(K.order(), m) == 1
    cyclic = _cyclic_complement(A, K, m)
    if cyclic is not None:
        logger.debug(f"找到循环补: |A| = {A.order()}, |K| = {K.order()}, 互素 = {coprime}")
        return cyclic

    if not is_solvable(A):
        raise InputError("补子群搜索要求 A 可解")
    for cls in all_subgroup_classes_of_solvable(A):
        if cls.order != m:
            continue
        if intersection(cls.representative, K).is_trivial():
            return cls.representative
    if coprime:
        raise VerificationError("schur_zassenhaus", f"阶互素却找不到补（|K| = {K.order()}, [A:K] = {m}）")
    return None
