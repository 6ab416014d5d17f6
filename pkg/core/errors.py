#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
异常定义模块
定义输入错误、资源超限和验证失败三类异常，命令行据此映射退出码
"""

from typing import Optional


class HolLabError(Exception):
    """所有HolLab异常的基类"""


class InputError(HolLabError, ValueError):
    """输入或前置条件不满足（命令行退出码 2）"""


class ResourceError(HolLabError):
    """元素扫描、陪集指数或枚举规模超出配置上限（命令行退出码 3）"""

    def __init__(self, message: str, bound: Optional[int] = None, actual: Optional[int] = None):
        super().__init__(message)
        self.bound = bound
        self.actual = actual


class VerificationError(HolLabError):
    """数学条件验证失败（命令行退出码 1）"""

    def __init__(self, condition: str, message: str = ""):
        super().__init__(f"{condition}: {message}" if message else condition)
        self.condition = condition
