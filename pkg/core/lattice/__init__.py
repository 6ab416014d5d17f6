#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
可解子群格模块
循环扩张算法枚举可解子群共轭类
"""

from .element_index import ElementIndex
from .cyclic_extension import (
    Completeness,
    IndexedSubgroup,
    SubgroupClass,
    SubgroupClassList,
    element_index_for,
    solvable_subgroup_classes,
    all_subgroup_classes_of_solvable,
    conjugacy_dedupe,
)

__all__ = [
    'ElementIndex',
    'Completeness',
    'IndexedSubgroup',
    'SubgroupClass',
    'SubgroupClassList',
    'element_index_for',
    'solvable_subgroup_classes',
    'all_subgroup_classes_of_solvable',
    'conjugacy_dedupe',
]
