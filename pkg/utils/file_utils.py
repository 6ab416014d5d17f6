"""
文件操作工具函数
报告与判定缓存的原子写入
"""

import json
import os
import tempfile
from pathlib import Path
from typing import Any, Union


def ensure_dir(directory: Union[str, Path]) -> Path:
    path = Path(directory)
    path.mkdir(parents=True, exist_ok=True)
    return path


def atomic_write_text(file_path: Union[str, Path], text: str) -> Path:
    """
    先写临时文件再替换，避免中断时留下半个文件

    Args:
        file_path: 目标路径
        text: 文件内容

    Returns:
        Path: 写入的路径
    """
    path = Path(file_path)
    ensure_dir(path.parent)
    fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", dir=str(path.parent))
    try:
        with os.fdopen(fd, 'w', encoding='utf-8') as f:
            f.write(text)
        os.replace(tmp_name, path)
    except Exception:
        if os.path.exists(tmp_name):
            os.remove(tmp_name)
        raise
    return path


def dump_json(data: Any) -> str:
    """键排序、固定缩进的 JSON 文本，相同输入得到相同字节"""
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def atomic_write_json(file_path: Union[str, Path], data: Any) -> Path:
    return atomic_write_text(file_path, dump_json(data))


def read_json(file_path: Union[str, Path]) -> Any:
    with open(file_path, 'r', encoding='utf-8') as f:
        return json.load(f)
