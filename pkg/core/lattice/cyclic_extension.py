#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
循环扩张模块
从平凡子群出发，逐轮用素数阶循环扩张 H → ⟨H, x⟩ 枚举可解子群的共轭类
"""

import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from core.config_manager import get_config_manager
from core.errors import InputError
from core.lattice.element_index import ElementIndex
from core.permcore import GroupHandle, is_solvable
from utils.logger import get_logger

logger = get_logger("HolLab.lattice")

_index_lock = threading.Lock()

ElementFilter = Callable[[ElementIndex], np.ndarray]


class Completeness(str, Enum):
    SOLVABLE_ONLY = "solvable-only"
    ALL_SUBGROUPS = "all-subgroups"
    LISTED = "listed"


@dataclass(frozen=True)
class IndexedSubgroup:
    """以环境群元素编号表示的子群"""
    members: np.ndarray          # 升序编号
    generators: Tuple[int, ...]

    @property
    def key(self) -> bytes:
        return self.members.tobytes()

    @property
    def order(self) -> int:
        return int(self.members.size)


@dataclass
class SubgroupClass:
    """一个共轭类：代表元及完整的共轭轨道"""
    representative: GroupHandle
    order: int
    indexed: IndexedSubgroup
    orbit: List[IndexedSubgroup] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.orbit)


@dataclass
class SubgroupClassList:
    ambient: GroupHandle
    classes: List[SubgroupClass]
    complete_for: Completeness
    index: ElementIndex

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self) -> Iterator[SubgroupClass]:
        return iter(self.classes)

    def orders(self) -> List[int]:
        return [c.order for c in self.classes]

    def representatives(self) -> List[GroupHandle]:
        return [c.representative for c in self.classes]

    def class_of(self, subgroup: GroupHandle) -> Optional[int]:
        """返回与 subgroup 共轭的类的下标"""
        members = self.index.indices_of(subgroup.elements())
        key = members.tobytes()
        for i, cls in enumerate(self.classes):
            if cls.order == members.size and any(s.key == key for s in cls.orbit):
                return i
        return None


def element_index_for(group: GroupHandle) -> ElementIndex:
    """每个群句柄缓存一个元素索引"""
    with _index_lock:
        index = group.cache.get("element_index")
        if index is None:
            index = ElementIndex(group)
            group.cache["element_index"] = index
        return index


class _ClassRegistry:
    """记录已发现子群（含全部共轭）所属的类"""

    def __init__(self, index: ElementIndex):
        self.index = index
        self.known: Dict[bytes, int] = {}
        self.classes: List[SubgroupClass] = []

    def register(self, sub: IndexedSubgroup) -> Optional[int]:
        if sub.key in self.known:
            return None
        orbit = {sub.key: sub}
        queue = [sub]
        for current in queue:
            for cmap in self.index.conjugation_maps:
                members = np.sort(cmap[current.members])
                key = members.tobytes()
                if key not in orbit:
                    image = IndexedSubgroup(members, tuple(int(g) for g in cmap[list(current.generators)]))
                    orbit[key] = image
                    queue.append(image)
        members_list = list(orbit.values())
        rep = min(members_list, key=lambda s: tuple(s.members.tolist()))
        class_id = len(self.classes)
        for key in orbit:
            self.known[key] = class_id
        self.classes.append(SubgroupClass(
            representative=self.index.handle(rep.generators),
            order=rep.order,
            indexed=rep,
            orbit=members_list,
        ))
        return class_id


def _extensions(index: ElementIndex, H: IndexedSubgroup, allowed: Optional[np.ndarray],
                order_divides: Optional[int]) -> List[IndexedSubgroup]:
    """H 的全部素数指数循环扩张 ⟨H, x⟩（x ∈ N(H)，x 为素数幂阶且 x^p ∈ H）"""
    in_h = index.mask_of(H.members)
    if H.generators:
        normal = index.normalizer_mask(in_h, H.generators)
    else:
        normal = np.ones(index.size, dtype=bool)
    covered = in_h.copy()
    prime_of = index.prime_of
    root = index.prime_power_root
    results = []
    for x in np.nonzero(normal)[0]:
        if covered[x]:
            continue
        p = int(prime_of[x])
        if p == 0 or not in_h[root[x]]:
            continue
        if order_divides is not None and order_divides % (H.order * p):
            covered[x] = True
            continue
        parts = [H.members]
        power = int(x)
        for _ in range(p - 1):
            parts.append(index.right_multiply(H.members, power))
            power = index.mul(power, int(x))
        members = np.sort(np.concatenate(parts))
        covered[members] = True
        if allowed is not None and not allowed[members].all():
            continue
        results.append(IndexedSubgroup(members, H.generators + (int(x),)))
    return results


def _cyclic_extension(group: GroupHandle, element_filter: Optional[ElementFilter],
                      order_divides: Optional[int], threads: Optional[int]) -> Tuple[ElementIndex, _ClassRegistry]:
    index = element_index_for(group)
    allowed = None
    if element_filter is not None:
        allowed = element_filter(index).copy()
        allowed[index.identity] = True
    # 共享表格先算好，线程内只读
    _ = (index.prime_power_root, index.inverse_table, index.conjugation_maps)
    registry = _ClassRegistry(index)
    trivial = IndexedSubgroup(np.array([index.identity], dtype=np.int64), ())
    layer = [registry.register(trivial)]
    if threads is None:
        threads = int(get_config_manager().get("runtime.threads", 1))
    threads = max(1, threads)

    round_no = 0
    with ThreadPoolExecutor(max_workers=threads) as pool:
        while layer:
            round_no += 1
            reps = [registry.classes[cid].indexed for cid in layer]
            if threads > 1:
                results = list(pool.map(lambda h: _extensions(index, h, allowed, order_divides), reps))
            else:
                results = [_extensions(index, h, allowed, order_divides) for h in reps]
            next_layer = []
            for candidates in results:
                for sub in candidates:
                    cid = registry.register(sub)
                    if cid is not None:
                        next_layer.append(cid)
            logger.debug(f"第 {round_no} 轮循环扩张: 新增 {len(next_layer)} 个共轭类")
            layer = next_layer
    return index, registry


def _sorted_classes(classes: List[SubgroupClass]) -> List[SubgroupClass]:
    return sorted(classes, key=lambda c: (c.order, tuple(c.indexed.members.tolist())))


def solvable_subgroup_classes(G: GroupHandle, element_filter: Optional[ElementFilter] = None,
                              order_divides: Optional[int] = None,
                              threads: Optional[int] = None) -> SubgroupClassList:
    """G 的全部可解子群共轭类

    Args:
        G: 环境群（阶不超过 bounds.lattice_order）
        element_filter: 可选的元素布尔掩码；只保留全部非单位元都满足掩码的子群
        order_divides: 可选；只保留阶整除该数的子群
        threads: 扩张轮内的线程数，缺省取 runtime.threads

    Returns:
        SubgroupClassList: 按 (阶, 代表元编号序列) 排序的类列表
    """
    cache_key = None
    if element_filter is None and order_divides is None:
        cache_key = "solvable_classes"
        cached = G.cache.get(cache_key)
        if cached is not None:
            return cached
    index, registry = _cyclic_extension(G, element_filter, order_divides, threads)
    result = SubgroupClassList(G, _sorted_classes(registry.classes), Completeness.SOLVABLE_ONLY, index)
    logger.info(f"可解子群格: |G| = {G.order()}，共 {len(result)} 个共轭类")
    if cache_key:
        G.cache[cache_key] = result
    return result


def all_subgroup_classes_of_solvable(G: GroupHandle, threads: Optional[int] = None) -> SubgroupClassList:
    """可解群 G 的全部子群共轭类"""
    if not is_solvable(G):
        raise InputError("all_subgroup_classes_of_solvable 要求 G 可解")
    result = solvable_subgroup_classes(G, threads=threads)
    return SubgroupClassList(G, result.classes, Completeness.ALL_SUBGROUPS, result.index)


def conjugacy_dedupe(ambient: GroupHandle, subs: Sequence[GroupHandle]) -> SubgroupClassList:
    """在 ambient 共轭下去重，每类代表元取编号序列字典序最小的成员"""
    index = element_index_for(ambient)
    registry = _ClassRegistry(index)
    for sub in subs:
        if sub.degree != ambient.degree or not sub.is_subgroup_of(ambient):
            raise InputError(f"{sub!r} 不是环境群的子群")
        members = index.indices_of(sub.elements())
        gens = tuple(index.index_of(g) for g in sub.generators)
        registry.register(IndexedSubgroup(members, gens))
    return SubgroupClassList(ambient, _sorted_classes(registry.classes), Completeness.LISTED, index)
