#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
群运算模块
并、交、导出列、正规性、正规化子、陪集作用与共轭
"""

from typing import Iterable, List, Optional, Sequence

from core.config_manager import get_config_manager
from core.errors import InputError, ResourceError
from core.permcore.chain import StabilizerChain
from core.permcore.group import GroupHandle, group_from_elements
from core.permcore.homomorphism import Homomorphism
from core.permcore.permutation import Permutation, commutator
from utils.logger import get_logger

logger = get_logger("HolLab.permcore")

# 指数不超过该值时直接两两比较陪集代表元
_PAIRWISE_COSET_LIMIT = 256


def _check_degree(*groups: GroupHandle):
    degrees = {g.degree for g in groups}
    if len(degrees) != 1:
        raise InputError(f"群的次数不一致: {sorted(degrees)}")


def join(A: GroupHandle, B: GroupHandle, name: Optional[str] = None) -> GroupHandle:
    """⟨A, B⟩"""
    _check_degree(A, B)
    return GroupHandle(A.degree, A.generators + B.generators, name)


def subgroup(G: GroupHandle, generators: Iterable[Permutation], name: Optional[str] = None) -> GroupHandle:
    """G 中由给定元素生成的子群"""
    gens = list(generators)
    for g in gens:
        if not G.contains(g):
            raise InputError(f"{g!r} 不属于 {G!r}")
    return GroupHandle(G.degree, gens, name)


def intersection(A: GroupHandle, B: GroupHandle, bound: Optional[int] = None) -> GroupHandle:
    """A ∩ B：扫描较小群的元素，对另一个做成员测试"""
    _check_degree(A, B)
    if bound is None:
        bound = get_config_manager().bound("scan_bound")
    small, large = (A, B) if A.order() <= B.order() else (B, A)
    if small.order() > bound:
        raise ResourceError(f"求交需要扫描 {small.order()} 个元素，超出上限 {bound}",
                            bound, small.order())
    members = [g for g in small.elements(bound) if large.contains(g)]
    return group_from_elements(A.degree, members)


def normal_closure(G: GroupHandle, generators: Sequence[Permutation]) -> GroupHandle:
    """G 中由 generators 生成的正规闭包"""
    chain = StabilizerChain(G.degree)
    gens: List[Permutation] = []
    queue: List[Permutation] = []
    for g in generators:
        if chain.add_generator(g):
            gens.append(g)
            queue.append(g)
    for k in queue:
        for s in G.generators:
            c = s.inverse() * k * s
            if chain.add_generator(c):
                gens.append(c)
                queue.append(c)
    return GroupHandle.from_chain(chain, gens)


def commutator_subgroup(G: GroupHandle) -> GroupHandle:
    gens = G.generators
    comms = [commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    return normal_closure(G, comms)


def derived_series(G: GroupHandle) -> List[GroupHandle]:
    """G = G⁰ ≥ G¹ ≥ …，在平凡群或稳定处终止"""
    series = [G]
    if G.is_trivial():
        return series
    current = G
    while True:
        nxt = commutator_subgroup(current)
        series.append(nxt)
        if nxt.is_trivial() or nxt.order() == current.order():
            return series
        current = nxt


def is_solvable(G: GroupHandle) -> bool:
    cached = G.cache.get("solvable")
    if cached is None:
        cached = derived_series(G)[-1].is_trivial()
        G.cache["solvable"] = cached
    return cached


def derived_length(G: GroupHandle) -> int:
    """可解群的导出长度；不可解时抛出 InputError"""
    series = derived_series(G)
    if not series[-1].is_trivial():
        raise InputError("群不可解，没有导出长度")
    return len(series) - 1


def is_normal(G: GroupHandle, H: GroupHandle) -> bool:
    """H ⊴ G（要求 H ≤ G）"""
    _check_degree(G, H)
    if not H.is_subgroup_of(G):
        raise InputError("is_normal 要求 H ≤ G")
    return all(H.contains(g * h * g.inverse()) for g in G.generators for h in H.generators)


def normalizer(G: GroupHandle, H: GroupHandle, bound: Optional[int] = None) -> GroupHandle:
    """N_G(H)：逐元扫描 G"""
    _check_degree(G, H)
    if bound is None:
        bound = get_config_manager().bound("scan_bound")
    size = G.order()
    if size > bound:
        raise ResourceError(f"正规化子扫描 |G| = {size} 超出上限 {bound}", bound, size)
    members = [g for g in G.elements(bound)
               if all(H.contains(g * h * g.inverse()) for h in H.generators)]
    if len(members) == size:
        return G
    return group_from_elements(G.degree, members)


def conjugate(H: GroupHandle, g: Permutation) -> GroupHandle:
    """g H g⁻¹"""
    if g.degree != H.degree:
        raise InputError("共轭元素的次数与群不一致")
    g_inv = g.inverse()
    return GroupHandle(H.degree, [g * h * g_inv for h in H.generators])


def product_set_size(A: GroupHandle, B: GroupHandle, bound: Optional[int] = None) -> int:
    """逐元枚举 |AB|"""
    _check_degree(A, B)
    if bound is None:
        bound = get_config_manager().bound("product_enumeration")
    total = A.order() * B.order()
    if total > bound:
        raise ResourceError(f"乘积枚举 {total} 超出上限 {bound}", bound, total)
    b_elements = B.elements()
    return len({a * b for a in A.elements() for b in b_elements})


def coset_action(G: GroupHandle, H: GroupHandle, bound: Optional[int] = None) -> Homomorphism:
    """G 在右陪集 Hg 上的右乘作用

    陪集按生成元顺序广度优先编号，H 自身编号为 0；核为 H 在 G 中的核心。
    """
    _check_degree(G, H)
    if not H.is_subgroup_of(G):
        raise InputError("coset_action 要求 H ≤ G")
    if bound is None:
        bound = get_config_manager().bound("coset_index")
    index = G.order() // H.order()
    if index > bound:
        raise ResourceError(f"陪集指数 {index} 超出上限 {bound}", bound, index)

    reps: List[Permutation] = [G.identity]
    if index <= _PAIRWISE_COSET_LIMIT:
        inverses = [G.identity]

        def locate(x: Permutation) -> int:
            for j, r_inv in enumerate(inverses):
                if H.contains(x * r_inv):
                    return j
            return -1

        def register(x: Permutation):
            reps.append(x)
            inverses.append(x.inverse())
    else:
        h_elements = H.elements()
        keys = {min((h * G.identity).images for h in h_elements): 0}

        def locate(x: Permutation) -> int:
            return keys.get(min((h * x).images for h in h_elements), -1)

        def register(x: Permutation):
            keys[min((h * x).images for h in h_elements)] = len(reps)
            reps.append(x)

    tables = [[0] * index for _ in G.generators]
    for i, r in enumerate(reps):
        for k, s in enumerate(G.generators):
            x = r * s
            j = locate(x)
            if j < 0:
                j = len(reps)
                register(x)
            tables[k][i] = j
    if len(reps) != index:
        raise InputError(f"陪集枚举得到 {len(reps)} 个陪集，期望 {index}")

    images = [Permutation._trusted(tuple(t)) for t in tables]
    logger.debug(f"陪集作用: |G| = {G.order()}, |H| = {H.order()}, 指数 {index}")
    return Homomorphism(G, index, images, kernel_hint=H)
