#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
几乎单群判据模块
对 Soc(N) ≤ N ≤ Aut(T) 判断是否存在以 N 为全形商的可解正则群
"""

from .complement import has_complement
from .context import AlmostSimpleContext, almost_simple_family, intermediate_subgroups
from .search import (
    PART_A,
    PART_B,
    CriterionWitness,
    check_part_a,
    check_part_b,
    first_witness,
    iter_witnesses,
    verify_witness,
)
from .verdict import Conclusion, InconclusiveKind, Verdict, classify, classify_group

__all__ = [
    'has_complement',
    'AlmostSimpleContext',
    'almost_simple_family',
    'intermediate_subgroups',
    'PART_A',
    'PART_B',
    'CriterionWitness',
    'check_part_a',
    'check_part_b',
    'first_witness',
    'iter_witnesses',
    'verify_witness',
    'Conclusion',
    'InconclusiveKind',
    'Verdict',
    'classify',
    'classify_group',
]
