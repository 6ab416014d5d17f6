#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
PSL₂(q) 构造、CD 分解、分裂性与定理见证测试
"""

import pytest

from core.errors import InputError, ResourceError
from core.permcore import (GroupHandle, Permutation, commutator, conjugate, intersection, is_normal,
                           is_solvable, join)
from core.psl2 import (CaseTag, MatrixRep, ProjLine, build_context, build_context_for_q,
                       build_theorem_witness, enumerate_almost_simple, m10, matrix_action, name_of,
                       projection_E, psigmal, split_prime_power, splitting_check, subgroup_C,
                       subgroup_D, verify_cd_factorization)

FACTORIZATION_QS = [4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27]
SMALL_QS = [4, 5, 7, 8, 9]
FAMILY_COUNTS = {4: 2, 5: 2, 7: 2, 8: 2, 9: 5, 11: 2, 13: 2, 16: 3, 17: 2, 19: 2, 23: 2, 25: 5, 27: 4}

_contexts = {}


def context(q):
    # 上下文只依赖 q 与默认上限，跨测试复用
    if q not in _contexts:
        _contexts[q] = build_context_for_q(q)
    return _contexts[q]


def test_split_prime_power():
    assert split_prime_power(9) == (3, 2)
    assert split_prime_power(8) == (2, 3)
    assert split_prime_power(13) == (13, 1)
    for bad in (1, 6, 12, 100):
        with pytest.raises(InputError):
            split_prime_power(bad)


@pytest.mark.parametrize("q", [2, 3])
def test_tiny_q_rejected(q):
    with pytest.raises(InputError):
        build_context_for_q(q)


def test_scan_bound_is_respected(fresh_config):
    fresh_config.set("bounds.scan_bound", 1000)
    with pytest.raises(ResourceError):
        build_context_for_q(13)


@pytest.mark.parametrize("q,pgl,psl,aut", [
    (4, 60, 60, 120),
    (5, 120, 60, 120),
    (7, 336, 168, 336),
    (8, 504, 504, 1512),
    (9, 720, 360, 1440),
])
def test_context_orders(q, pgl, psl, aut):
    ctx = context(q)
    assert ctx.line.size == q + 1
    assert ctx.pgl.order() == pgl
    assert ctx.psl.order() == psl
    assert ctx.aut.order() == aut
    assert is_normal(ctx.aut, ctx.psl)


def test_projective_line_indexing():
    ctx = context(9)
    line = ProjLine(ctx.spec)
    assert line.infinity == 9
    for i in range(line.size):
        x, y = line.point(i)
        assert line.index_of(x, y) == i
        assert line.index_of(x * ctx.omega, y * ctx.omega) == i
    with pytest.raises(InputError):
        line.index_of(ctx.spec.zero, ctx.spec.zero)


def test_scalar_matrices_act_trivially():
    ctx = context(7)
    w = ctx.omega
    assert ctx.perm(w, 0, 0, w).is_identity()
    with pytest.raises(InputError):
        ctx.perm(1, 1, 1, 1)


def test_matrix_action_is_multiplicative():
    ctx = context(8)
    spec = ctx.spec
    M = MatrixRep.of(spec, ctx.omega, 1, 0, 1)
    N = MatrixRep.of(spec, 0, 1, 1, ctx.omega)
    # 列向量约定下先作用 N 再作用 M 即 M·N
    assert matrix_action(M @ N, ctx.line) == matrix_action(N, ctx.line) * matrix_action(M, ctx.line)


def test_nonsquare_diagonal_not_in_psl():
    ctx = context(5)
    # 2 是模 5 的非平方
    assert not ctx.psl.contains(ctx.perm(2, 0, 0, 1))
    assert ctx.psl.contains(ctx.perm(4, 0, 0, 1))


@pytest.mark.parametrize("q,c_order,d_order", [(5, 6, 20), (7, 8, 42), (8, 9, 56), (9, 10, 72)])
def test_subgroup_orders(q, c_order, d_order):
    ctx = context(q)
    assert subgroup_C(ctx).order() == c_order
    assert subgroup_D(ctx).order() == d_order
    assert subgroup_C(ctx) is subgroup_C(ctx)


def test_c_join_psl_is_pgl_at_5():
    ctx = context(5)
    assert join(subgroup_C(ctx), ctx.psl).order() == 120


def test_d_meets_psl_in_index_two_at_7():
    ctx = context(7)
    assert intersection(subgroup_D(ctx), ctx.psl).order() == 21


@pytest.mark.parametrize("q", FACTORIZATION_QS)
def test_cd_factorization(q):
    report = verify_cd_factorization(context(q))
    assert report.c_order == q + 1
    assert report.d_order == q * (q - 1)
    assert report.c_order * report.d_order == q ** 3 - q == report.pgl_order
    assert report.intersection_order == 1
    assert report.joins_equal


@pytest.mark.parametrize("q,branch", [
    (5, "C"), (9, "C"), (13, "C"), (17, "C"), (25, "C"),
    (7, "D"), (11, "D"), (19, "D"), (23, "D"), (27, "D"),
])
def test_splitting(q, branch):
    ctx = context(q)
    report = splitting_check(ctx)
    assert report.branch == branch
    X = subgroup_C(ctx) if branch == "C" else subgroup_D(ctx)
    K = intersection(X, ctx.psl)
    assert report.group_order == X.order()
    assert report.kernel_order * 2 == X.order()
    S = report.complement
    assert S.order() == 2
    assert S.is_subgroup_of(X)
    assert intersection(S, K).is_trivial()
    assert join(S, K).same_group(X)


def test_splitting_rejects_even_q():
    with pytest.raises(InputError):
        splitting_check(context(8))


@pytest.mark.parametrize("q", SMALL_QS)
def test_family_count_small(q):
    family = enumerate_almost_simple(context(q))
    assert len(family) == FAMILY_COUNTS[q]
    assert family[0].same_group(context(q).psl)
    assert family[-1].same_group(context(q).aut)


@pytest.mark.slow
@pytest.mark.parametrize("q", [16, 25, 27])
def test_family_count_large(q):
    assert len(enumerate_almost_simple(context(q))) == FAMILY_COUNTS[q]


def test_q9_names():
    ctx = context(9)
    names = {N.name for N in enumerate_almost_simple(ctx)}
    assert names == {"PSL2(9)", "PGL2(9)", "PSigmaL2(9)", "M10", "PGammaL2(9)"}
    M = m10(ctx)
    assert M.order() == 720
    assert not M.same_group(ctx.pgl)
    assert not M.same_group(psigmal(ctx))
    assert name_of(ctx, M) == "M10"
    with pytest.raises(InputError):
        m10(context(7))


def test_projection_E():
    ctx = context(9)
    assert projection_E(ctx, ctx.psl).is_trivial()
    assert projection_E(ctx, ctx.pgl).is_trivial()
    assert projection_E(ctx, m10(ctx)).order() == 2
    assert projection_E(ctx, ctx.aut).same_group(ctx.frob)
    assert projection_E(context(7), context(7).pgl).is_trivial()
    with pytest.raises(InputError):
        projection_E(ctx, GroupHandle(10, [Permutation.parse("(1 2)", 10)]))


def test_case_tags():
    assert CaseTag.for_q(8) is CaseTag.EVEN
    assert CaseTag.for_q(9) is CaseTag.ONE_MOD_4
    assert CaseTag.for_q(27) is CaseTag.THREE_MOD_4


def _check_witness(ctx, N):
    w = build_theorem_witness(ctx, N)
    assert w.passed
    assert set(w.checks) == {"containment", "solvable", "factorization", "trivial_intersection",
                             "equal_joins", "splits"}
    assert w.A.order() * w.B.order() == w.P.order()
    assert intersection(w.A, w.B).is_trivial()
    assert is_solvable(w.A) and is_solvable(w.B)
    assert join(w.A, N).same_group(join(w.B, N))
    K = intersection(w.A, N)
    assert intersection(w.complement, K).is_trivial()
    assert w.complement.order() * K.order() == w.A.order()
    return w


@pytest.mark.parametrize("q", SMALL_QS)
def test_theorem_witness_small(q):
    ctx = context(q)
    for N in enumerate_almost_simple(ctx):
        w = _check_witness(ctx, N)
        assert w.case_tag is CaseTag.for_q(q)


@pytest.mark.slow
@pytest.mark.parametrize("q", [11, 13, 16, 17, 19, 23, 25, 27])
def test_theorem_witness_large(q):
    ctx = context(q)
    for N in enumerate_almost_simple(ctx):
        _check_witness(ctx, N)


def test_three_mod_four_shapes():
    ctx = context(7)
    shapes = {}
    for N in enumerate_almost_simple(ctx):
        w = build_theorem_witness(ctx, N)
        assert w.A.order() == 42 and w.B.order() == 8
        assert w.coprime_split
        shapes[N.order()] = w.n_shape
    assert shapes == {168: "PSL⋊E", 336: "PGL⋊E"}


def test_one_mod_four_orientation():
    ctx = context(9)
    w = build_theorem_witness(ctx, m10(ctx))
    assert w.A.same_group(subgroup_C(ctx))
    assert w.B.order() == 72 * 2
    assert w.P.same_group(ctx.aut)
    assert w.n_shape is None


def test_build_context_directly():
    ctx = build_context(2, 2)
    assert ctx.q == 4 and ctx.p == 2 and ctx.f == 2
    assert ctx.frob.order() == 2


# --- C、D 的结构与见证的成员复核 ---

STRUCTURE_QS = [4, 7, 8, 9, 25]


@pytest.mark.parametrize("q", STRUCTURE_QS)
def test_frobenius_normalizes_D(q):
    ctx = context(q)
    D = subgroup_D(ctx)
    assert D.order() == q * (q - 1)
    if ctx.f == 1:
        assert ctx.frob.is_trivial()
    for phi in ctx.frob.generators:
        assert conjugate(D, phi).same_group(D)


@pytest.mark.parametrize("q", STRUCTURE_QS)
def test_C_is_abelian_of_order_q_plus_one(q):
    C = subgroup_C(context(q))
    assert C.order() == q + 1
    gens = C.generators
    assert all(commutator(a, b).is_identity() for a in gens for b in gens)
    assert C.is_subgroup_of(context(q).pgl)


def _recheck_by_membership(w):
    """只用成员判定与阶复核见证，不读取 w.checks"""
    P, A, B, N = w.P, w.A, w.B, w.N
    for H in (A, B, N):
        assert all(P.contains(g) for g in H.generators)
    assert A.order() * B.order() == P.order()
    assert sum(1 for a in A.elements() if B.contains(a)) == 1
    # AN = BN：双方生成元互相落在对方的积中
    AN, BN = join(A, N), join(B, N)
    assert all(BN.contains(g) for g in A.generators)
    assert all(AN.contains(g) for g in B.generators)
    assert AN.order() == BN.order()
    S = w.complement
    assert all(A.contains(s) for s in S.generators)
    k_order = sum(1 for a in A.elements() if N.contains(a))
    assert sum(1 for s in S.elements() if N.contains(s)) == 1
    assert S.order() * k_order == A.order()


@pytest.mark.parametrize("q", [4, 7, 8, 9, pytest.param(25, marks=pytest.mark.slow)])
def test_witness_rechecked_by_membership(q):
    ctx = context(q)
    for N in enumerate_almost_simple(ctx):
        w = build_theorem_witness(ctx, N)
        _recheck_by_membership(w)
        assert is_solvable(w.A) and is_solvable(w.B)
