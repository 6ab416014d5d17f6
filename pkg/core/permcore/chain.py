#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
稳定化子链模块
确定性 Schreier-Sims 算法：基点取残差的最小动点，提供筛选、阶与按基像字典序的元素枚举
"""

import random
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from core.permcore.permutation import Permutation


@dataclass
class _Level:
    """链上一层：基点、强生成元与轨道横截"""
    point: int
    generators: List[Permutation] = field(default_factory=list)
    orbit: List[int] = field(default_factory=list)
    transversal: Dict[int, Permutation] = field(default_factory=dict)
    inverse_transversal: Dict[int, Permutation] = field(default_factory=dict)

    def rebuild(self, identity: Permutation):
        """按生成元顺序做广度优先，重建轨道与横截"""
        self.orbit = [self.point]
        self.transversal = {self.point: identity}
        self.inverse_transversal = {self.point: identity}
        for beta in self.orbit:
            u = self.transversal[beta]
            for s in self.generators:
                gamma = s.images[beta]
                if gamma not in self.transversal:
                    us = u * s
                    self.transversal[gamma] = us
                    self.inverse_transversal[gamma] = us.inverse()
                    self.orbit.append(gamma)


class StabilizerChain:
    """基与强生成集（BSGS）"""

    def __init__(self, degree: int, generators: Sequence[Permutation] = ()):
        self.degree = degree
        self.identity = Permutation.identity(degree)
        self._levels: List[_Level] = []
        moved = [g.smallest_moved_point() for g in generators if not g.is_identity()]
        if moved:
            self._append_level(min(moved))
        for g in generators:
            self.add_generator(g)

    @property
    def base(self) -> List[int]:
        return [lvl.point for lvl in self._levels]

    @property
    def strong_generators(self) -> List[Permutation]:
        return list(self._levels[0].generators) if self._levels else []

    @property
    def orbit_sizes(self) -> List[int]:
        return [len(lvl.orbit) for lvl in self._levels]

    def order(self) -> int:
        result = 1
        for lvl in self._levels:
            result *= len(lvl.orbit)
        return result

    def _append_level(self, point: int):
        level = _Level(point=point)
        level.rebuild(self.identity)
        self._levels.append(level)

    def sift(self, g: Permutation, start: int = 0) -> Tuple[Permutation, int]:
        """沿链筛选 g

        Returns:
            Tuple[Permutation, int]: (残差, 停止的层号)；完全筛过时层号等于链长
        """
        for i in range(start, len(self._levels)):
            lvl = self._levels[i]
            beta = g.images[lvl.point]
            u_inv = lvl.inverse_transversal.get(beta)
            if u_inv is None:
                return g, i
            g = g * u_inv
        return g, len(self._levels)

    def contains(self, g: Permutation) -> bool:
        residue, _ = self.sift(g)
        return residue.is_identity()

    def add_generator(self, g: Permutation) -> bool:
        """加入新生成元并补全链

        Returns:
            bool: 群是否因此变大
        """
        residue, j = self.sift(g)
        if residue.is_identity():
            return False
        if j == len(self._levels):
            self._append_level(residue.smallest_moved_point())
        for level in self._levels[: j + 1]:
            level.generators.append(residue)
            level.rebuild(self.identity)
        self._complete(j)
        return True

    def _complete(self, i: int):
        # 层 > i 始终是完备的；逐层检查 Schreier 生成元
        while i >= 0:
            lvl = self._levels[i]
            restart = False
            for beta in list(lvl.orbit):
                u = lvl.transversal[beta]
                for s in list(lvl.generators):
                    us = u * s
                    h = us * lvl.inverse_transversal[us.images[lvl.point]]
                    if h.is_identity():
                        continue
                    residue, j = self.sift(h, i + 1)
                    if residue.is_identity():
                        continue
                    if j == len(self._levels):
                        self._append_level(residue.smallest_moved_point())
                    for level in self._levels[i + 1: j + 1]:
                        level.generators.append(residue)
                        level.rebuild(self.identity)
                    i = j
                    restart = True
                    break
                if restart:
                    break
            if not restart:
                i -= 1

    def base_images(self, g: Permutation) -> Tuple[int, ...]:
        return tuple(g.images[lvl.point] for lvl in self._levels)

    def elements(self) -> Iterator[Permutation]:
        """按基像元组的字典序枚举全部元素"""
        levels = self._levels
        if not levels:
            yield self.identity
            return

        # 元素 = x_k * ... * x_i * right，第 i 层的基像为 right(beta)
        stack = [(0, self.identity)]
        while stack:
            depth, right = stack.pop()
            if depth == len(levels):
                yield right
                continue
            lvl = levels[depth]
            ordered = sorted(lvl.orbit, key=lambda b: right.images[b], reverse=True)
            for beta in ordered:
                stack.append((depth + 1, lvl.transversal[beta] * right))

    def random_element(self, rng: Optional[random.Random] = None) -> Permutation:
        rng = rng or random.Random()
        g = self.identity
        for lvl in reversed(self._levels):
            g = g * lvl.transversal[rng.choice(lvl.orbit)]
        return g
