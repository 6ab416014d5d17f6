#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
核心功能模块
包含置换群内核、有限域、PSL₂(q) 构造、可解子群格、判据搜索与全形计算
"""

# 移除相对导入，让主程序直接导入

from .errors import HolLabError, InputError, ResourceError, VerificationError

__all__ = [
    'HolLabError',
    'InputError',
    'ResourceError',
    'VerificationError',
]
