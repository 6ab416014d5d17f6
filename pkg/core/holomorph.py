#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
全形模块
在 N 的元素上构造 Hol(N) = ρ(N)⋊Aut(N)，并直接搜索其中的可解正则子群
"""

import random
from dataclasses import dataclass, field
from enum import Enum
from math import lcm
from typing import Dict, List, Optional

from core.config_manager import get_config_manager
from core.criterion import Conclusion, InconclusiveKind, Verdict
from core.errors import InputError, ResourceError, VerificationError
from core.lattice import solvable_subgroup_classes
from core.permcore import GroupHandle, Permutation, derived_length, is_solvable, join
from utils.logger import get_logger

logger = get_logger("HolLab.holomorph")


@dataclass
class HolomorphContext:
    """Hol(N) 作用在 |N| 个点上，第 i 个点是 N 的第 i 个元素（链枚举顺序）"""
    N: GroupHandle
    elements: List[Permutation]
    index: Dict[Permutation, int]
    hol: GroupHandle
    lambda_N: GroupHandle
    rho_N: GroupHandle
    aut_image: GroupHandle
    _search: Dict[str, object] = field(default_factory=dict, repr=False)

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def identity_point(self) -> int:
        return self.index[self.N.identity]

    @property
    def lattice_searched(self) -> bool:
        """正则子群类是否已由完整的子群格搜索得到"""
        return "classes" in self._search


@dataclass
class RegularWitness:
    G: GroupHandle
    solvable: bool
    order: int
    derived_length: int
    exponent: int

    @property
    def iso_class_hint(self) -> str:
        return f"order {self.order}, derived length {self.derived_length}, exponent {self.exponent}"


class CrossStatus(str, Enum):
    CONSISTENT = "consistent"
    CONTRADICTION = "contradiction"
    NOT_COMPARABLE = "not comparable"


@dataclass
class CrossValidation:
    status: CrossStatus
    detail: str
    witness: Optional[RegularWitness] = None


def _element_action(ctx_elements: List[Permutation], index: Dict[Permutation, int], fn) -> Permutation:
    return Permutation([index[fn(x)] for x in ctx_elements])


def build_holomorph(N: GroupHandle, autN_action: GroupHandle) -> HolomorphContext:
    """
    构造 Hol(N)

    Args:
        N: 任意置换群（|N| 不超过 bounds.holomorph_points）
        autN_action: 与 N 同一作用域、正规化 N 的群；以共轭 x ↦ a x a⁻¹ 作用在元素上

    Returns:
        HolomorphContext: λ(N)、ρ(N)、Aut 像及 hol = ⟨ρ(N), Aut 像⟩
    """
    bound = get_config_manager().bound("holomorph_points")
    size = N.order()
    if size > bound:
        raise ResourceError(f"|N| = {size} 超出全形点数上限 {bound}", bound, size)
    if autN_action.degree != N.degree:
        raise InputError("自同构群与 N 的作用次数不一致")
    for a in autN_action.generators:
        a_inv = a.inverse()
        if not all(N.contains(a * g * a_inv) for g in N.generators):
            raise InputError(f"{a.to_cycle_string()} 不正规化 N")

    elements = list(N.elements())
    index = {x: i for i, x in enumerate(elements)}
    lambda_gens = [_element_action(elements, index, lambda x, n=n: n * x) for n in N.generators]
    rho_gens = [_element_action(elements, index, lambda x, n=n: x * n.inverse()) for n in N.generators]
    aut_gens = [_element_action(elements, index, lambda x, a=a: x.conjugate_by(a))
                for a in autN_action.generators]

    lambda_N = GroupHandle(size, lambda_gens, name="lambda(N)")
    rho_N = GroupHandle(size, rho_gens, name="rho(N)")
    aut_image = GroupHandle(size, aut_gens, name="Aut(N)")
    hol = join(rho_N, aut_image, name="Hol(N)")
    if hol.order() != size * aut_image.order():
        raise VerificationError("holomorph_order",
                                f"|Hol| = {hol.order()} ≠ {size}·{aut_image.order()}")
    logger.info(f"全形: |N| = {size}, |Aut 像| = {aut_image.order()}, |Hol| = {hol.order()}")
    return HolomorphContext(N=N, elements=elements, index=index, hol=hol,
                            lambda_N=lambda_N, rho_N=rho_N, aut_image=aut_image)


def is_regular(G: GroupHandle) -> bool:
    """|G| = 次数且 G 传递"""
    return G.order() == G.degree and len(G.orbit(0)) == G.degree


def _witness(G: GroupHandle) -> RegularWitness:
    exponent = lcm(*(g.order() for g in G.elements())) if not G.is_trivial() else 1
    return RegularWitness(G=G, solvable=is_solvable(G), order=G.order(),
                          derived_length=derived_length(G), exponent=exponent)


def verify_regular_witness(ctx: HolomorphContext, witness: RegularWitness) -> None:
    """独立复核：G ≤ Hol、阶、传递、点稳定化子平凡、可解"""
    G = witness.G
    if not G.is_subgroup_of(ctx.hol):
        raise VerificationError("containment", "G 不在 Hol(N) 中")
    if G.order() != ctx.size:
        raise VerificationError("order", f"|G| = {G.order()} ≠ {ctx.size}")
    if len(G.orbit(ctx.identity_point)) != ctx.size:
        raise VerificationError("transitive", "G 不传递")
    stabilizer = G.order() // len(G.orbit(ctx.identity_point))
    if stabilizer != 1:
        raise VerificationError("stabilizer", f"点稳定化子阶为 {stabilizer}")
    if not is_solvable(G):
        raise VerificationError("solvable", "G 不可解")


def _semiregular_classes(ctx: HolomorphContext):
    # 半正则子群族对子群封闭，且阶整除 |N|
    return solvable_subgroup_classes(ctx.hol, element_filter=lambda idx: idx.fixed_point_free,
                                     order_divides=ctx.size)


def regular_subgroup_classes(ctx: HolomorphContext) -> List[RegularWitness]:
    """Hol(N) 中全部可解正则子群类（每类一个代表元）"""
    cached = ctx._search.get("classes")
    if cached is None:
        cached = []
        for cls in _semiregular_classes(ctx):
            if cls.order != ctx.size:
                continue
            G = cls.representative
            if not is_regular(G):
                raise VerificationError("regular_invariance", "半正则且阶为 |N| 的子群必须正则")
            witness = _witness(G)
            verify_regular_witness(ctx, witness)
            cached.append(witness)
        ctx._search["classes"] = cached
        logger.info(f"Hol(N) 中共有 {len(cached)} 类可解正则子群")
    return cached


def random_regular_search(ctx: HolomorphContext, trials: Optional[int] = None,
                          seed: Optional[int] = None) -> RegularWitness:
    """随机二元生成的可解子群中寻找正则子群；失败时抛出 ResourceError（规模未知）"""
    config = get_config_manager()
    if trials is None:
        trials = int(config.get("holomorph.random_trials", 100000))
    if seed is None:
        seed = int(config.get("runtime.seed", 0))
    rng = random.Random(seed)

    def semiregular(x: Permutation) -> bool:
        return x.is_identity() or (x.fixed_point_free() and ctx.size % x.order() == 0
                                   and len(set(len(c) for c in x.cycles())) == 1)

    for trial in range(trials):
        a, b = ctx.hol.random_element(rng), ctx.hol.random_element(rng)
        if not (semiregular(a) and semiregular(b)):
            continue
        G = GroupHandle(ctx.size, [a, b])
        if G.order() != ctx.size or not is_regular(G) or not is_solvable(G):
            continue
        logger.info(f"随机搜索在第 {trial + 1} 次尝试找到正则子群")
        witness = _witness(G)
        verify_regular_witness(ctx, witness)
        return witness
    raise ResourceError(f"随机搜索 {trials} 次未找到可解正则子群（规模未知）", trials, trials)


def find_solvable_regular(ctx: HolomorphContext) -> Optional[RegularWitness]:
    """返回第一个可解正则子群；None 表示不存在，超出上限时抛出 ResourceError"""
    if "first" in ctx._search:
        return ctx._search["first"]
    try:
        found = regular_subgroup_classes(ctx)
        result = found[0] if found else None
    except ResourceError as exc:
        if not get_config_manager().get("holomorph.random_fallback", False):
            raise ResourceError(f"全形过大，结果未知: {exc}", exc.bound, exc.actual) from exc
        logger.warning(f"子群格超出上限，改用随机搜索: {exc}")
        result = random_regular_search(ctx)
    ctx._search["first"] = result
    return result


def cross_validate(ctx: HolomorphContext, verdict: Optional[Verdict]) -> CrossValidation:
    """判据结论与全形搜索比对：true 要求存在，false 要求不存在"""
    if verdict is None:
        return CrossValidation(CrossStatus.NOT_COMPARABLE, "没有该 N 的判据结论")
    if verdict.n_order != ctx.size:
        return CrossValidation(CrossStatus.NOT_COMPARABLE, f"判据中 |N| = {verdict.n_order} ≠ {ctx.size}")
    if verdict.inconclusive_kind is InconclusiveKind.SCALE:
        return CrossValidation(CrossStatus.NOT_COMPARABLE, "判据结论受规模限制")
    try:
        witness = find_solvable_regular(ctx)
    except ResourceError as exc:
        return CrossValidation(CrossStatus.NOT_COMPARABLE, f"全形搜索受规模限制: {exc}")

    found = witness is not None
    if verdict.conclusion is Conclusion.INCONCLUSIVE:
        detail = "全形中存在可解正则子群" if found else "全形中不存在可解正则子群"
        return CrossValidation(CrossStatus.NOT_COMPARABLE, f"判据不确定；{detail}", witness)
    expected = verdict.conclusion is Conclusion.TRUE
    if found == expected:
        return CrossValidation(CrossStatus.CONSISTENT, f"判据 {verdict.conclusion.value}，全形搜索一致", witness)
    logger.error(f"判据 {verdict.conclusion.value} 与全形搜索结果矛盾")
    return CrossValidation(CrossStatus.CONTRADICTION,
                           f"判据 {verdict.conclusion.value}，但全形搜索{'找到' if found else '未找到'}可解正则子群",
                           witness)
