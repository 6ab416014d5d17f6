#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
工具模块
包含日志、文件操作等实用工具
"""

# 移除相对导入，让主程序直接导入

__all__ = []