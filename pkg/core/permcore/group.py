#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
置换群句柄模块
GroupHandle 由生成元确定，稳定化子链惰性构建并缓存
"""

import random
import threading
from typing import Dict, Any, Iterable, List, Optional, Sequence

from core.config_manager import get_config_manager
from core.errors import InputError, ResourceError
from core.permcore.chain import StabilizerChain
from core.permcore.permutation import Permutation


class GroupHandle:
    """有限置换群

    Args:
        degree: 作用的点数 n
        generators: 生成元（恒等元会被丢弃）
        name: 可选的显示名称
    """

    def __init__(self, degree: int, generators: Iterable[Permutation] = (), name: Optional[str] = None):
        if degree < 1:
            raise InputError(f"次数必须为正: {degree}")
        gens = []
        for g in generators:
            if not isinstance(g, Permutation):
                raise InputError(f"生成元不是置换: {g!r}")
            if g.degree != degree:
                raise InputError(f"生成元次数 {g.degree} 与群次数 {degree} 不一致")
            if not g.is_identity():
                gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self.name = name
        self.cache: Dict[str, Any] = {}
        self._chain: Optional[StabilizerChain] = None
        self._elements: Optional[List[Permutation]] = None
        self._lock = threading.RLock()

    @classmethod
    def from_chain(cls, chain: StabilizerChain, generators: Sequence[Permutation],
                   name: Optional[str] = None) -> "GroupHandle":
        handle = cls(chain.degree, generators, name)
        handle._chain = chain
        return handle

    @classmethod
    def trivial(cls, degree: int) -> "GroupHandle":
        return cls(degree, ())

    @property
    def chain(self) -> StabilizerChain:
        with self._lock:
            if self._chain is None:
                self._chain = StabilizerChain(self.degree, self.generators)
            return self._chain

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def order(self) -> int:
        return self.chain.order()

    def is_trivial(self) -> bool:
        return not self.generators

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            raise InputError(f"元素次数 {g.degree} 与群次数 {self.degree} 不一致")
        return self.chain.contains(g)

    def __contains__(self, g: Permutation) -> bool:
        return self.contains(g)

    def is_subgroup_of(self, other: "GroupHandle") -> bool:
        return all(other.contains(g) for g in self.generators)

    def same_group(self, other: "GroupHandle") -> bool:
        """两群作为置换集合相等"""
        return (self.degree == other.degree and self.order() == other.order()
                and self.is_subgroup_of(other))

    def elements(self, bound: Optional[int] = None) -> List[Permutation]:
        """按基像字典序列出全部元素

        Args:
            bound: 元素个数上限，缺省取配置 bounds.scan_bound

        Returns:
            List[Permutation]: 元素列表（缓存）
        """
        if bound is None:
            bound = get_config_manager().bound("scan_bound")
        with self._lock:
            if self._elements is None:
                size = self.order()
                if size > bound:
                    raise ResourceError(f"群阶 {size} 超出元素扫描上限 {bound}", bound, size)
                self._elements = list(self.chain.elements())
            return self._elements

    def element_set(self) -> frozenset:
        with self._lock:
            cached = self.cache.get("element_set")
            if cached is None:
                cached = frozenset(self.elements())
                self.cache["element_set"] = cached
            return cached

    def random_element(self, rng: Optional[random.Random] = None) -> Permutation:
        return self.chain.random_element(rng)

    def orbit(self, point: int) -> List[int]:
        result = [point]
        seen = {point}
        for x in result:
            for g in self.generators:
                y = g.images[x]
                if y not in seen:
                    seen.add(y)
                    result.append(y)
        return result

    def generator_strings(self, one_based: bool = True) -> List[str]:
        return [g.to_cycle_string(one_based) for g in self.generators]

    def __repr__(self) -> str:
        label = f"{self.name}, " if self.name else ""
        return f"GroupHandle({label}degree={self.degree}, gens={len(self.generators)})"


def group_from_elements(degree: int, elements: Iterable[Permutation],
                        name: Optional[str] = None) -> GroupHandle:
    """从一个（已知封闭的）元素集合贪心挑选生成元"""
    chain = StabilizerChain(degree)
    gens = []
    for g in elements:
        if chain.add_generator(g):
            gens.append(g)
    return GroupHandle.from_chain(chain, gens, name)
