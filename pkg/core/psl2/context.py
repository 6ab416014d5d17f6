#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
PSL₂(q) 上下文模块
在射影直线上构造 PGL₂(q)、PSL₂(q)、Frobenius 子群 F 与 PΓL₂(q)，以及子群 C、D
"""

from dataclasses import dataclass, field
from math import gcd
from typing import Dict, List, Optional, Tuple

from sympy import factorint

from core.config_manager import get_config_manager
from core.criterion import almost_simple_family, has_complement
from core.errors import InputError, ResourceError, VerificationError
from core.gfield import FieldElem, FieldSpec, TorusConstants, field_make, primitive_generator, torus_constants
from core.permcore import (GroupHandle, Homomorphism, Permutation, commutator, coset_action,
                           group_from_elements, intersection, is_normal, join)
from core.psl2.projective import MatrixRep, ProjLine, frobenius_action, matrix_action
from utils.logger import get_logger

logger = get_logger("HolLab.psl2")


def split_prime_power(q: int) -> Tuple[int, int]:
    """q = p^f 时返回 (p, f)"""
    if q < 2:
        raise InputError(f"q 必须是素数幂: {q}")
    factors = factorint(q)
    if len(factors) != 1:
        raise InputError(f"q 必须是素数幂: {q}")
    (p, f), = factors.items()
    return int(p), int(f)


@dataclass
class Psl2Context:
    """Aut(PSL₂(q)) = PGL₂(q)⋊F 在 q+1 个射影点上的实现"""
    spec: FieldSpec
    line: ProjLine
    pgl: GroupHandle
    psl: GroupHandle
    frob: GroupHandle
    aut: GroupHandle
    torus: TorusConstants
    omega: FieldElem
    _cache: Dict[str, object] = field(default_factory=dict, repr=False)

    @property
    def q(self) -> int:
        return self.spec.q

    @property
    def p(self) -> int:
        return self.spec.p

    @property
    def f(self) -> int:
        return self.spec.f

    def matrix(self, a, b, c, d) -> MatrixRep:
        return MatrixRep.of(self.spec, a, b, c, d)

    def perm(self, a, b, c, d) -> Permutation:
        return matrix_to_projective_perm(self, self.matrix(a, b, c, d))


def matrix_to_projective_perm(ctx: Psl2Context, m: MatrixRep) -> Permutation:
    """m 在射影直线上诱导的置换；m 的标量倍给出同一置换"""
    return matrix_action(m, ctx.line)


def frobenius_perm(ctx: Psl2Context) -> Permutation:
    """坐标逐个取 p 次幂；阶为 f"""
    return frobenius_action(ctx.line)


def _transvections(spec: FieldSpec, line: ProjLine, omega: FieldElem) -> List[Permutation]:
    """上、下三角初等变换 [[1,ωⁱ],[0,1]]、[[1,0],[ωⁱ,1]]（i < f）"""
    gens = []
    power = spec.one
    for _ in range(spec.f):
        gens.append(matrix_action(MatrixRep.of(spec, 1, power, 0, 1), line))
        gens.append(matrix_action(MatrixRep.of(spec, 1, 0, power, 1), line))
        power = power * omega
    return gens


def build_context(p: int, f: int) -> Psl2Context:
    """构造 q = p^f 的上下文并检查全部阶关系"""
    q = p ** f
    if q in (2, 3):
        raise InputError("要求 q ≠ 2, 3")
    spec = field_make(p, f)
    pgl_order = q ** 3 - q
    bound = get_config_manager().bound("scan_bound")
    if pgl_order > bound:
        raise ResourceError(f"|PGL₂({q})| = {pgl_order} 超出扫描上限 {bound}", bound, pgl_order)

    line = ProjLine(spec)
    omega = primitive_generator(spec)
    pgl = GroupHandle(line.size, [
        matrix_action(MatrixRep.of(spec, omega, 0, 0, 1), line),
        matrix_action(MatrixRep.of(spec, 1, 1, 0, 1), line),
        matrix_action(MatrixRep.of(spec, 0, 1, 1, 0), line),
    ], name=f"PGL2({q})")
    psl = GroupHandle(line.size, _transvections(spec, line, omega), name=f"PSL2({q})")
    frob = GroupHandle(line.size, [frobenius_action(line)], name=f"F({q})")
    aut = join(pgl, frob, name=f"PGammaL2({q})")

    sign = gcd(2, q - 1)
    expected = {
        "pgl": (pgl.order(), pgl_order),
        "psl": (psl.order(), pgl_order // sign),
        "frob": (frob.order(), f),
        "aut": (aut.order(), pgl_order * f),
    }
    for label, (actual, wanted) in expected.items():
        if actual != wanted:
            raise VerificationError(f"order_{label}", f"q = {q}: |{label}| = {actual}，期望 {wanted}")
    if not psl.is_subgroup_of(pgl) or not is_normal(aut, pgl):
        raise VerificationError("normal_pgl", f"q = {q}: PGL₂ 不是 Aut 的正规子群")
    out_order = aut.order() // psl.order()
    if out_order != sign * f:
        raise VerificationError("out_order", f"q = {q}: |Out| = {out_order}，期望 {sign * f}")

    ctx = Psl2Context(spec=spec, line=line, pgl=pgl, psl=psl, frob=frob, aut=aut,
                      torus=torus_constants(spec), omega=omega)
    logger.info(f"PSL₂({q}) 上下文: |PGL| = {pgl_order}, |PSL| = {psl.order()}, |Aut| = {aut.order()}")
    return ctx


def build_context_for_q(q: int) -> Psl2Context:
    p, f = split_prime_power(q)
    return build_context(p, f)


def subgroup_C(ctx: Psl2Context) -> GroupHandle:
    """非分裂环面 C = C̃/Z，C̃ = {[[x, −dy], [y, x−cy]] : (x, y) ≠ (0, 0)}"""
    cached = ctx._cache.get("C")
    if cached is None:
        c, d = ctx.torus.c, ctx.torus.d
        images = set()
        for x in ctx.spec.elements():
            for y in ctx.spec.elements():
                if x.is_zero() and y.is_zero():
                    continue
                images.add(ctx.perm(x, -(d * y), y, x - c * y))
        cached = group_from_elements(ctx.line.size, sorted(images), name=f"C({ctx.q})")
        if cached.order() != ctx.q + 1 or len(images) != ctx.q + 1:
            raise VerificationError("order_C", f"|C| = {cached.order()}，期望 {ctx.q + 1}")
        ctx._cache["C"] = cached
    return cached


def subgroup_D(ctx: Psl2Context) -> GroupHandle:
    """Borel 子群 D = D̃/Z，D̃ = {[[u, v], [0, w]]}"""
    cached = ctx._cache.get("D")
    if cached is None:
        gens = [ctx.perm(ctx.omega, 0, 0, 1)]
        power = ctx.spec.one
        for _ in range(ctx.f):
            gens.append(ctx.perm(1, power, 0, 1))
            power = power * ctx.omega
        cached = GroupHandle(ctx.line.size, gens, name=f"D({ctx.q})")
        if cached.order() != ctx.q * (ctx.q - 1):
            raise VerificationError("order_D", f"|D| = {cached.order()}，期望 {ctx.q * (ctx.q - 1)}")
        ctx._cache["D"] = cached
    return cached


@dataclass
class FactorizationReport:
    q: int
    c_order: int
    d_order: int
    pgl_order: int
    intersection_order: int
    joins_equal: bool


def verify_cd_factorization(ctx: Psl2Context) -> FactorizationReport:
    """PGL₂(q) = CD，C∩D = 1，C·PSL = D·PSL；任一条件不成立即抛出 VerificationError"""
    C, D = subgroup_C(ctx), subgroup_D(ctx)
    if any(not commutator(a, b).is_identity() for a in C.generators for b in C.generators):
        raise VerificationError("C_abelian", f"q = {ctx.q}: C 不是交换群")
    if not (C.is_subgroup_of(ctx.pgl) and D.is_subgroup_of(ctx.pgl)):
        raise VerificationError("containment", f"q = {ctx.q}: C 或 D 不在 PGL₂ 中")
    meet = intersection(C, D)
    report = FactorizationReport(
        q=ctx.q,
        c_order=C.order(),
        d_order=D.order(),
        pgl_order=ctx.pgl.order(),
        intersection_order=meet.order(),
        joins_equal=join(C, ctx.psl).same_group(join(D, ctx.psl)),
    )
    if report.c_order * report.d_order != report.pgl_order:
        raise VerificationError("order_product",
                                f"q = {ctx.q}: {report.c_order}·{report.d_order} ≠ {report.pgl_order}")
    if report.intersection_order != 1:
        raise VerificationError("trivial_intersection", f"q = {ctx.q}: |C∩D| = {report.intersection_order}")
    if not report.joins_equal:
        raise VerificationError("equal_joins", f"q = {ctx.q}: C·PSL ≠ D·PSL")
    return report


@dataclass
class SplittingReport:
    q: int
    branch: str              # "C" 或 "D"
    group_order: int
    kernel_order: int
    complement: GroupHandle


def splitting_check(ctx: Psl2Context) -> SplittingReport:
    """q ≡ 1 (mod 4) 时 C 在 C∩PSL 上分裂；q ≡ 3 (mod 4) 时 D 在 D∩PSL 上分裂"""
    if ctx.q % 2 == 0:
        raise InputError(f"q = {ctx.q} 为偶数时 PGL₂ = PSL₂，分裂检查无意义")
    if ctx.q % 4 == 1:
        branch, X = "C", subgroup_C(ctx)
    else:
        branch, X = "D", subgroup_D(ctx)
    K = intersection(X, ctx.psl)
    S = has_complement(X, K)
    if S is None:
        raise VerificationError("splits", f"q = {ctx.q}: {branch} 在 {branch}∩PSL 上不分裂")
    if not intersection(S, K).is_trivial() or S.order() * K.order() != X.order():
        raise VerificationError("splits", f"q = {ctx.q}: 找到的补不满足条件")
    return SplittingReport(ctx.q, branch, X.order(), K.order(), S)


def psigmal(ctx: Psl2Context) -> GroupHandle:
    """PΣL₂(q) = PSL₂(q)⋊F"""
    return join(ctx.psl, ctx.frob, name=f"PSigmaL2({ctx.q})")


def m10(ctx: Psl2Context) -> GroupHandle:
    """q = 9 时 ⟨PSL₂(9), diag(ω,1)·φ⟩"""
    if ctx.q != 9:
        raise InputError("M10 只在 q = 9 时定义")
    twisted = ctx.perm(ctx.omega, 0, 0, 1) * frobenius_perm(ctx)
    return GroupHandle(ctx.line.size, list(ctx.psl.generators) + [twisted], name="M10")


def enumerate_almost_simple(ctx: Psl2Context) -> List[GroupHandle]:
    """PSL₂(q) ≤ N ≤ PΓL₂(q) 的全部 N，个数等于 Out(PSL₂(q)) 的子群个数"""
    cached = ctx._cache.get("family")
    if cached is None:
        cached = almost_simple_family(ctx.aut, ctx.psl)
        for N in cached:
            if N.name is None:
                N.name = name_of(ctx, N)
        ctx._cache["family"] = cached
        logger.info(f"q = {ctx.q}: {len(cached)} 个几乎单群 N")
    return cached


def name_of(ctx: Psl2Context, N: GroupHandle) -> Optional[str]:
    """按阶与包含关系给出常用名称"""
    q = ctx.q
    if N.same_group(ctx.psl):
        return f"PSL2({q})"
    if N.same_group(ctx.pgl):
        return f"PGL2({q})"
    if N.same_group(ctx.aut):
        return f"PGammaL2({q})"
    if N.same_group(psigmal(ctx)):
        return f"PSigmaL2({q})"
    if q == 9 and N.same_group(m10(ctx)):
        return "M10"
    return f"N({q}, order {N.order()})"


def _aut_mod_pgl(ctx: Psl2Context) -> Tuple[Homomorphism, Dict[Permutation, Permutation]]:
    cached = ctx._cache.get("aut_mod_pgl")
    if cached is None:
        hom = coset_action(ctx.aut, ctx.pgl)
        lift = {hom.image_of(e): e for e in ctx.frob.elements()}
        cached = (hom, lift)
        ctx._cache["aut_mod_pgl"] = cached
    return cached


def projection_E(ctx: Psl2Context, N: GroupHandle) -> GroupHandle:
    """N 沿 PGL₂(q) 到 F 的投影"""
    if not (ctx.psl.is_subgroup_of(N) and N.is_subgroup_of(ctx.aut)):
        raise InputError("projection_E 要求 PSL₂(q) ≤ N ≤ PΓL₂(q)")
    if ctx.frob.is_trivial():
        return GroupHandle.trivial(ctx.line.size)
    hom, lift = _aut_mod_pgl(ctx)
    E = GroupHandle(ctx.line.size, [lift[hom.image_of(n)] for n in N.generators])
    if not join(ctx.pgl, E).same_group(join(ctx.pgl, N)):
        raise VerificationError("projection_E", f"q = {ctx.q}: PGL·E ≠ PGL·N")
    return E
