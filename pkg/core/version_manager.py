#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
版本模块
core/version.json 中的工具版本，以及写入报告的运行环境版本
"""

import json
import platform
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import metadata
from pathlib import Path
from typing import Dict, Optional, Union

from utils.logger import get_logger

logger = get_logger("HolLab.version")

VERSION_FILE = Path(__file__).parent / "version.json"
_SEMVER = re.compile(r'^(\d+)\.(\d+)\.(\d+)(?:-([0-9A-Za-z.]+))?(?:\+([0-9A-Za-z.]+))?$')
STAMPED_PACKAGES = ("numpy", "sympy")


@dataclass(frozen=True)
class ToolVersion:
    major: int = 0
    minor: int = 1
    patch: int = 0
    prerelease: Optional[str] = None
    build: Optional[str] = None

    def __str__(self) -> str:
        text = f"{self.major}.{self.minor}.{self.patch}"
        if self.prerelease:
            text += f"-{self.prerelease}"
        if self.build:
            text += f"+{self.build}"
        return text

    @classmethod
    def parse(cls, text: str) -> 'ToolVersion':
        """"1.2.3-rc+7" → ToolVersion(1, 2, 3, "rc", "7")"""
        match = _SEMVER.match(text.strip())
        if not match:
            raise ValueError(f"无效的版本格式: {text}")
        major, minor, patch = (int(x) for x in match.group(1, 2, 3))
        return cls(major, minor, patch, match.group(4), match.group(5))

    @property
    def is_prerelease(self) -> bool:
        return self.prerelease is not None


def load_version(version_file: Union[str, Path] = VERSION_FILE) -> ToolVersion:
    """读取版本文件；缺失或损坏时退回 0.1.0"""
    path = Path(version_file)
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return ToolVersion(**json.load(f))
    except FileNotFoundError:
        logger.debug(f"版本文件不存在: {path}")
    except (OSError, ValueError, TypeError) as e:
        logger.error(f"加载版本文件失败: {e}")
    return ToolVersion()


@lru_cache(maxsize=1)
def get_current_version() -> str:
    return str(load_version())


def environment_stamp() -> Dict[str, str]:
    """报告中的运行环境：工具、Python 与数值依赖的版本"""
    stamp = {"hollab": get_current_version(), "python": platform.python_version()}
    for package in STAMPED_PACKAGES:
        try:
            stamp[package] = metadata.version(package)
        except metadata.PackageNotFoundError:
            stamp[package] = "missing"
    return stamp
