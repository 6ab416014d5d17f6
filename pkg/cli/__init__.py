#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
命令行模块
群描述解析、群目录、JSON 报告与各子命令
"""

# 移除相对导入，让主程序直接导入

__all__ = []
