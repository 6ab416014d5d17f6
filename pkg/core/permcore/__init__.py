#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
置换群核心模块
置换、稳定化子链、群句柄、同态与基本群运算
"""

from .permutation import Permutation, commutator
from .chain import StabilizerChain
from .group import GroupHandle, group_from_elements
from .homomorphism import Homomorphism
from .operations import (
    join,
    subgroup,
    intersection,
    normal_closure,
    commutator_subgroup,
    derived_series,
    derived_length,
    is_solvable,
    is_normal,
    normalizer,
    conjugate,
    coset_action,
    product_set_size,
)

__all__ = [
    'Permutation',
    'commutator',
    'StabilizerChain',
    'GroupHandle',
    'group_from_elements',
    'Homomorphism',
    'join',
    'subgroup',
    'intersection',
    'normal_closure',
    'commutator_subgroup',
    'derived_series',
    'derived_length',
    'is_solvable',
    'is_normal',
    'normalizer',
    'conjugate',
    'coset_action',
    'product_set_size',
]
