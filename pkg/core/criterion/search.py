#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
判据搜索模块
在每个中间子群 P 中搜索可解子群对 (A, B)：(a) 为必要条件，(b) 为充分条件
"""

import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional

import numpy as np

from core.config_manager import get_config_manager
from core.criterion.complement import has_complement
from core.criterion.context import AlmostSimpleContext, intermediate_subgroups
from core.errors import InputError, VerificationError
from core.lattice import ElementIndex, SubgroupClass, solvable_subgroup_classes
from core.permcore import (GroupHandle, intersection, is_solvable, join,
                           product_set_size)
from utils.logger import get_logger

logger = get_logger("HolLab.criterion")

PART_A = "a"
PART_B = "b"


@dataclass
class CriterionWitness:
    """P = AB 的可解分解；part 为 "a" 或 "b"，后者附带 A∩N 在 A 中的补"""
    P: GroupHandle
    A: GroupHandle
    B: GroupHandle
    part: str
    complement: Optional[GroupHandle] = None

    @property
    def orders(self) -> tuple:
        return self.A.order(), self.B.order()


class _PairSearch:
    """固定 P 的一次搜索：缓存陪集标号与各 A 的补"""

    def __init__(self, ctx: AlmostSimpleContext, P: GroupHandle):
        if not (ctx.N.is_subgroup_of(P) and P.is_subgroup_of(ctx.autN)):
            raise InputError("要求 N ≤ P ≤ Aut(N)")
        self.ctx = ctx
        self.P = P
        self.order = P.order()
        self.classes = solvable_subgroup_classes(P)
        self.index: ElementIndex = self.classes.index
        self.n_members = self.index.indices_of(ctx.N.elements())
        self.labels = self._coset_labels()
        # 按 |A| 降序；同阶保持类列表顺序
        self.ordered: List[SubgroupClass] = sorted(self.classes.classes, key=lambda c: -c.order)
        self._complements: Dict[int, Optional[GroupHandle]] = {}
        self._complements_lock = threading.Lock()

    def _coset_labels(self) -> np.ndarray:
        """每个元素所在的 N 陪集编号（Ne 的编号）"""
        labels = np.full(self.index.size, -1, dtype=np.int64)
        next_label = 0
        for e in range(self.index.size):
            if labels[e] < 0:
                labels[self.index.right_multiply(self.n_members, e)] = next_label
                next_label += 1
        return labels

    def _complement_for(self, position: int) -> Optional[GroupHandle]:
        """A 类 position 的补；并发调用得到同一个对象（先写入者）"""
        with self._complements_lock:
            if position in self._complements:
                return self._complements[position]
        a_cls = self.ordered[position]
        k_members = np.intersect1d(a_cls.indexed.members, self.n_members, assume_unique=True)
        S = has_complement(a_cls.representative, self.index.handle_from_members(k_members))
        with self._complements_lock:
            return self._complements.setdefault(position, S)

    def witnesses_for(self, position: int, part: str) -> Iterator[CriterionWitness]:
        """固定 A 类，按 |B| 降序、每个 B 类取第一个满足条件的共轭"""
        a_cls = self.ordered[position]
        a_members = a_cls.indexed.members
        a_cosets = np.unique(self.labels[a_members])
        for b_cls in self.ordered:
            product = a_cls.order * b_cls.order
            if part == PART_B:
                if product != self.order:
                    continue
                target = 1
            else:
                if product < self.order or product % self.order:
                    continue
                target = product // self.order
            for b_sub in b_cls.orbit:
                meet = np.intersect1d(a_members, b_sub.members, assume_unique=True).size
                if meet != target:
                    continue
                if not np.array_equal(np.unique(self.labels[b_sub.members]), a_cosets):
                    continue
                complement = None
                if part == PART_B:
                    complement = self._complement_for(position)
                    if complement is None:
                        return
                yield CriterionWitness(self.P, a_cls.representative,
                                       self.index.handle(b_sub.generators), part, complement)
                break

    def first(self, part: str, threads: int = 1) -> Optional[CriterionWitness]:
        positions = range(len(self.ordered))

        def first_for(position: int) -> Optional[CriterionWitness]:
            return next(self.witnesses_for(position, part), None)

        if threads > 1:
            # 补子群缓存加锁，其余共享状态在构造时已就绪；取枚举序最小者
            with ThreadPoolExecutor(max_workers=threads) as pool:
                for witness in pool.map(first_for, positions):
                    if witness is not None:
                        return witness
            return None
        for position in positions:
            witness = first_for(position)
            if witness is not None:
                return witness
        return None


def _threads() -> int:
    return max(1, int(get_config_manager().get("runtime.threads", 1)))


def iter_witnesses(ctx: AlmostSimpleContext, P: GroupHandle, part: str) -> Iterator[CriterionWitness]:
    """P 上全部类对的见证（每个类对取第一个共轭），确定性顺序"""
    if part not in (PART_A, PART_B):
        raise InputError(f"未知的判据部分: {part}")
    search = _PairSearch(ctx, P)
    for position in range(len(search.ordered)):
        yield from search.witnesses_for(position, part)


def first_witness(ctx: AlmostSimpleContext, P: GroupHandle, part: str) -> Optional[CriterionWitness]:
    return _PairSearch(ctx, P).first(part, _threads())


def check_part_a(ctx: AlmostSimpleContext) -> List[CriterionWitness]:
    """全部中间子群上的 (a) 见证；空列表意味着不存在可解的 G"""
    witnesses = []
    for P in intermediate_subgroups(ctx):
        found = list(iter_witnesses(ctx, P, PART_A))
        logger.info(f"(a) 搜索 |P| = {P.order()}: {len(found)} 个类对通过")
        witnesses.extend(found)
    return witnesses


def check_part_b(ctx: AlmostSimpleContext) -> Optional[CriterionWitness]:
    """按中间子群阶升序返回第一个 (b) 见证"""
    for P in intermediate_subgroups(ctx):
        witness = first_witness(ctx, P, PART_B)
        if witness is not None:
            logger.info(f"(b) 见证: |P| = {P.order()}, |A| = {witness.A.order()}, |B| = {witness.B.order()}")
            return witness
    return None


def verify_witness(witness: CriterionWitness, N: GroupHandle) -> None:
    """仅用成员测试独立复核见证；失败时抛出 VerificationError"""
    P, A, B = witness.P, witness.A, witness.B
    if not (A.is_subgroup_of(P) and B.is_subgroup_of(P) and N.is_subgroup_of(P)):
        raise VerificationError("containment", "A、B、N 必须都包含在 P 中")
    if not (is_solvable(A) and is_solvable(B)):
        raise VerificationError("solvable", "A 与 B 必须可解")

    meet = intersection(A, B)
    bound = get_config_manager().bound("product_enumeration")
    if A.order() * B.order() <= bound:
        product = product_set_size(A, B, bound)
    else:
        product = A.order() * B.order() // meet.order()
    if product != P.order():
        raise VerificationError("factorization", f"|AB| = {product} ≠ |P| = {P.order()}")

    AN, BN = join(A, N), join(B, N)
    if not (all(BN.contains(a) for a in A.generators) and all(AN.contains(b) for b in B.generators)):
        raise VerificationError("equal_joins", "AN ≠ BN")

    if witness.part == PART_B:
        if not meet.is_trivial():
            raise VerificationError("trivial_intersection", f"|A∩B| = {meet.order()}")
        S = witness.complement
        if S is None:
            raise VerificationError("splits", "缺少补子群")
        K = intersection(A, N)
        if not S.is_subgroup_of(A):
            raise VerificationError("splits", "补子群不在 A 中")
        if not intersection(S, K).is_trivial() or S.order() * K.order() != A.order():
            raise VerificationError("splits", "S 不是 A∩N 在 A 中的补")
