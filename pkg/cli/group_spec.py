#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
群描述文本
目录名称，或内联生成元 "<次数>: <置换>; <置换>"（1 起始的循环记号），或 @文件
"""

import re
from typing import Any, Dict, Optional

from core.errors import InputError
from core.permcore import GroupHandle, Permutation
from utils.encoding import safe_read_text_file

_INLINE_PATTERN = re.compile(r"^\s*(\d+)\s*:(.*)$", re.S)


def _strip_comments(text: str) -> str:
    lines = [line.split("#", 1)[0] for line in text.splitlines()]
    return " ".join(line.strip() for line in lines if line.strip())


def is_inline(text: str) -> bool:
    return bool(_INLINE_PATTERN.match(text))


def parse_inline(text: str, name: Optional[str] = None) -> GroupHandle:
    """解析 "<次数>: <置换>; <置换>"，如 "5: (1 2 3 4 5); (1 2)" """
    match = _INLINE_PATTERN.match(text)
    if not match:
        raise InputError(f"内联群描述必须以 '<次数>:' 开头: {text!r}")
    degree = int(match.group(1))
    if degree < 1:
        raise InputError(f"次数必须为正: {degree}")
    gens = [Permutation.parse(part, degree) for part in match.group(2).split(";") if part.strip()]
    return GroupHandle(degree, gens, name=name)


def parse_group_spec(text: str, catalog=None) -> GroupHandle:
    """目录名称、内联生成元或 @文件 → GroupHandle"""
    stripped = text.strip()
    if not stripped:
        raise InputError("空的群描述")
    if stripped.startswith("@"):
        content = _strip_comments(safe_read_text_file(stripped[1:]))
        return parse_inline(content, name=stripped[1:])
    if is_inline(stripped):
        return parse_inline(stripped)
    if catalog is None:
        from cli.catalog import get_catalog
        catalog = get_catalog()
    return catalog.resolve(stripped)


def format_group_spec(G: GroupHandle) -> str:
    """GroupHandle → 内联描述；parse_inline 可还原"""
    return f"{G.degree}: " + "; ".join(G.generator_strings())


def group_to_json(G: GroupHandle) -> Dict[str, Any]:
    data = {
        "degree": G.degree,
        "generators": G.generator_strings(),
        "order": G.order(),
    }
    if G.name:
        data["name"] = G.name
    return data


def group_from_json(data: Dict[str, Any]) -> GroupHandle:
    """还原序列化的群；记录的阶与重建的阶不符时报错"""
    try:
        degree = int(data["degree"])
        gens = [Permutation.parse(s, degree) for s in data["generators"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"无效的群记录: {data!r}") from exc
    G = GroupHandle(degree, gens, name=data.get("name"))
    if "order" in data and G.order() != int(data["order"]):
        raise InputError(f"群记录的阶 {data['order']} 与重建的阶 {G.order()} 不符")
    return G
