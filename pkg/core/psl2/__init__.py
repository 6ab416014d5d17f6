#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
PSL₂(q) 模块
射影直线上的 PGL₂(q)、PSL₂(q)、PΓL₂(q) 及 C、D 分解见证
"""

from .projective import MatrixRep, ProjLine, frobenius_action, matrix_action
from .context import (
    Psl2Context,
    FactorizationReport,
    SplittingReport,
    split_prime_power,
    build_context,
    build_context_for_q,
    matrix_to_projective_perm,
    frobenius_perm,
    subgroup_C,
    subgroup_D,
    verify_cd_factorization,
    splitting_check,
    psigmal,
    m10,
    enumerate_almost_simple,
    name_of,
    projection_E,
)
from .witness import CaseTag, TheoremWitness, build_theorem_witness

__all__ = [
    'MatrixRep',
    'ProjLine',
    'frobenius_action',
    'matrix_action',
    'Psl2Context',
    'FactorizationReport',
    'SplittingReport',
    'split_prime_power',
    'build_context',
    'build_context_for_q',
    'matrix_to_projective_perm',
    'frobenius_perm',
    'subgroup_C',
    'subgroup_D',
    'verify_cd_factorization',
    'splitting_check',
    'psigmal',
    'm10',
    'enumerate_almost_simple',
    'name_of',
    'projection_E',
    'CaseTag',
    'TheoremWitness',
    'build_theorem_witness',
]
