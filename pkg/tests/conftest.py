#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
测试公共夹具
"""

import sys
from pathlib import Path

import pytest

project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from core.config_manager import reset_config_manager  # noqa: E402
from core.permcore import GroupHandle, Permutation  # noqa: E402


@pytest.fixture(autouse=True)
def fresh_config(tmp_path, monkeypatch):
    """每个测试使用默认配置，日志写到临时目录，不继承外部报告目录"""
    monkeypatch.delenv("HOLLAB_REPORT_DIR", raising=False)
    config = reset_config_manager(tmp_path / "no_such_config.json")
    config.set("logging.file", str(tmp_path / "logs" / "hollab.log"))
    return config


def make_group(degree: int, *cycles: str) -> GroupHandle:
    """make_group(5, "(1 2 3 4 5)", "(1 2)")"""
    return GroupHandle(degree, [Permutation.parse(c, degree) for c in cycles])


@pytest.fixture
def S3():
    return make_group(3, "(1 2)", "(1 2 3)")


@pytest.fixture
def A4():
    return make_group(4, "(1 2 3)", "(1 2)(3 4)")


@pytest.fixture
def S4():
    return make_group(4, "(1 2 3 4)", "(1 2)")


@pytest.fixture
def A5():
    return make_group(5, "(1 2 3 4 5)", "(1 2 3)")


@pytest.fixture
def S5():
    return make_group(5, "(1 2 3 4 5)", "(1 2)")
