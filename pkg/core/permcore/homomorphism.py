#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
群同态模块
由生成元的像给出的同态；通过"图群"上的稳定化子链对任意元素求像
"""

from typing import Dict, List, Optional, Sequence

from core.errors import InputError
from core.permcore.chain import StabilizerChain
from core.permcore.group import GroupHandle, group_from_elements
from core.permcore.permutation import Permutation


class Homomorphism:
    """源群到 Sym(target_degree) 的同态

    图群 {(g, φ(g))} 作用在 n + m 个点上；其阶等于源群阶当且仅当生成元映射可延拓为同态。
    """

    def __init__(self, source: GroupHandle, target_degree: int, images: Sequence[Permutation],
                 kernel_hint: Optional[GroupHandle] = None):
        if len(images) != len(source.generators):
            raise InputError("生成元像的个数与源群生成元个数不一致")
        for img in images:
            if img.degree != target_degree:
                raise InputError(f"像的次数 {img.degree} 与目标次数 {target_degree} 不一致")
        self.source = source
        self.target_degree = target_degree
        self.images = tuple(images)
        self._kernel_hint = kernel_hint
        self._graph: Optional[StabilizerChain] = None
        self._image: Optional[GroupHandle] = None
        self._kernel: Optional[GroupHandle] = None

    def _combine(self, g: Permutation, img: Permutation) -> Permutation:
        n = self.source.degree
        return Permutation._trusted(g.images + tuple(n + x for x in img.images))

    @property
    def graph(self) -> StabilizerChain:
        if self._graph is None:
            n, m = self.source.degree, self.target_degree
            gens = [self._combine(g, img) for g, img in zip(self.source.generators, self.images)]
            chain = StabilizerChain(n + m, gens)
            if chain.order() != self.source.order():
                raise InputError("生成元的像不能延拓为同态")
            self._graph = chain
        return self._graph

    def image_of(self, g: Permutation) -> Permutation:
        """计算 φ(g)"""
        n = self.source.degree
        if g.degree != n:
            raise InputError("元素次数与源群不一致")
        probe = self._combine(g, Permutation.identity(self.target_degree))
        residue, _ = self.graph.sift(probe)
        if any(residue.images[i] != i for i in range(n)):
            raise InputError(f"元素不属于源群: {g!r}")
        # probe = (1, y) * (g, φ(g)) 中 y = φ(g)⁻¹
        target_part = Permutation._trusted(tuple(x - n for x in residue.images[n:]))
        return target_part.inverse()

    def image(self) -> GroupHandle:
        if self._image is None:
            _ = self.graph
            self._image = GroupHandle(self.target_degree, self.images)
        return self._image

    def kernel(self) -> GroupHandle:
        """核：扫描提示子群（若给出）或整个源群中像为恒等的元素"""
        if self._kernel is None:
            domain = self._kernel_hint or self.source
            members = [g for g in domain.elements() if self.image_of(g).is_identity()]
            self._kernel = group_from_elements(self.source.degree, members)
        return self._kernel

    def lift_table(self) -> Dict[Permutation, Permutation]:
        """像群每个元素对应一个原像（沿生成元做广度优先）"""
        identity_src = self.source.identity
        identity_img = Permutation.identity(self.target_degree)
        table = {identity_img: identity_src}
        queue: List[Permutation] = [identity_img]
        for x in queue:
            pre = table[x]
            for g, img in zip(self.source.generators, self.images):
                y = x * img
                if y not in table:
                    table[y] = pre * g
                    queue.append(y)
        return table

    def preimage(self, subgroup: GroupHandle) -> GroupHandle:
        """像群子群的完全原像 = ⟨核, 生成元的提升⟩"""
        table = self.lift_table()
        lifts = [table[g] for g in subgroup.generators]
        kernel = self.kernel()
        return GroupHandle(self.source.degree, list(kernel.generators) + lifts)
