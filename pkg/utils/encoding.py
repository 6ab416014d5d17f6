#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
编码处理工具
读取生成元文件（@path）时检测文本编码
"""

import locale
from pathlib import Path
from typing import Union

import chardet

from core.errors import InputError


def safe_decode(data: bytes, fallback_encoding: str = 'utf-8') -> str:
    """
    安全解码字节数据

    Args:
        data: 要解码的字节数据
        fallback_encoding: 检测失败时的备用编码

    Returns:
        str: 解码后的字符串
    """
    if not data:
        return ""

    try:
        return data.decode('utf-8')
    except UnicodeDecodeError:
        pass

    detected = chardet.detect(data)
    encoding = detected.get("encoding")
    if encoding:
        try:
            return data.decode(encoding)
        except (UnicodeDecodeError, LookupError):
            pass

    return data.decode(fallback_encoding, errors='replace')


def safe_read_text_file(file_path: Union[str, Path]) -> str:
    """
    读取文本文件，编码由 chardet 判定

    Raises:
        InputError: 文件不存在或无法读取
    """
    path = Path(file_path)
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise InputError(f"无法读取文件: {path}") from exc
    return safe_decode(data, get_system_encoding())


def get_system_encoding() -> str:
    """chardet 无法判定时使用的本机编码"""
    return locale.getpreferredencoding() or 'utf-8'
