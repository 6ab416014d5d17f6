#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
群目录
config/group_catalog.json 中固定的生成元、PSL₂ 族、M10 与超出规模的条目
"""

import json
import re
import threading
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional

from core.errors import InputError, ResourceError, VerificationError
from core.permcore import GroupHandle, Permutation, is_solvable
from core.psl2 import Psl2Context, build_context_for_q, m10, psigmal
from utils.logger import get_logger

logger = get_logger("HolLab.catalog")

_FAMILY_PATTERN = re.compile(r"^(PSL2|PGL2|PSigmaL2|PGammaL2)\((\d+)\)$")


@dataclass
class CatalogEntry:
    name: str
    degree: int
    generators: List[str]
    order: int
    aut: Optional[str] = None
    simple: bool = False
    solvable: Optional[bool] = None
    notes: str = ""


@dataclass
class StretchEntry:
    name: str
    socle_order: int
    aut_order: int
    out: str


@lru_cache(maxsize=None)
def psl2_context(q: int) -> Psl2Context:
    """同一 q 共享一个上下文，使目录中的 PSL₂ 族成员作用在同一条射影直线上"""
    return build_context_for_q(q)


class GroupCatalog:
    """群目录

    Args:
        catalog_file: 目录文件，缺省为 config/group_catalog.json
    """

    def __init__(self, catalog_file: Optional[Path] = None):
        project_root = Path(__file__).parent.parent
        self.catalog_file = Path(catalog_file) if catalog_file else project_root / "config" / "group_catalog.json"
        try:
            with open(self.catalog_file, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"无法加载群目录 {self.catalog_file}: {exc}") from exc

        self.entries: Dict[str, CatalogEntry] = {
            name: CatalogEntry(name=name, **fields) for name, fields in data.get("groups", {}).items()
        }
        self.families: Dict[str, dict] = data.get("families", {})
        self.named: Dict[str, dict] = data.get("named", {})
        self.stretch: Dict[str, StretchEntry] = {
            name: StretchEntry(name=name, **fields) for name, fields in data.get("stretch", {}).items()
        }
        self._groups: Dict[str, GroupHandle] = {}
        self._lock = threading.Lock()

    def names(self) -> List[str]:
        return sorted(self.entries) + sorted(self.named) + sorted(self.stretch)

    def _build_entry(self, entry: CatalogEntry) -> GroupHandle:
        gens = [Permutation.parse(s, entry.degree) for s in entry.generators]
        G = GroupHandle(entry.degree, gens, name=entry.name)
        if G.order() != entry.order:
            raise VerificationError("catalog_order", f"{entry.name}: 阶 {G.order()}，目录记录 {entry.order}")
        if entry.solvable is not None and is_solvable(G) != entry.solvable:
            raise VerificationError("catalog_solvable", f"{entry.name}: 可解性与目录不符")
        return G

    def _build_family(self, family: str, q: int) -> GroupHandle:
        ctx = psl2_context(q)
        if family == "PSL2":
            return ctx.psl
        if family == "PGL2":
            return ctx.pgl
        if family == "PSigmaL2":
            return psigmal(ctx)
        return ctx.aut

    def resolve(self, name: str) -> GroupHandle:
        """名称 → GroupHandle；同名返回同一句柄"""
        name = name.strip()
        with self._lock:
            cached = self._groups.get(name)
        if cached is not None:
            return cached

        if name in self.stretch:
            entry = self.stretch[name]
            raise ResourceError(f"{name}: |Aut| = {entry.aut_order} 超出元素扫描架构的规模（inconclusive at scale）",
                                None, entry.aut_order)
        match = _FAMILY_PATTERN.match(name)
        if match:
            G = self._build_family(match.group(1), int(match.group(2)))
        elif name in self.named:
            G = m10(psl2_context(int(self.named[name]["q"])))
        elif name in self.entries:
            G = self._build_entry(self.entries[name])
        else:
            raise InputError(f"未知的群名称: {name}（可用: {', '.join(self.names())}）")

        with self._lock:
            self._groups.setdefault(name, G)
            return self._groups[name]

    def aut_name(self, name: str) -> Optional[str]:
        """作为 Aut(N) 环境群的目录名称"""
        name = name.strip()
        match = _FAMILY_PATTERN.match(name)
        if match:
            return f"{self.families[match.group(1)]['aut']}({match.group(2)})"
        if name in self.named:
            return self.named[name].get("aut")
        if name in self.entries:
            return self.entries[name].aut
        return None

    def automorphism_ambient(self, name: str) -> GroupHandle:
        aut = self.aut_name(name)
        if aut is None:
            raise InputError(f"{name} 没有登记自同构群，请用 --aut 指定")
        return self.resolve(aut)

    def describe(self) -> List[dict]:
        """catalog list 的行：名称、次数、阶、说明"""
        rows = []
        for name in sorted(self.entries):
            entry = self.entries[name]
            rows.append({"name": name, "degree": entry.degree, "order": entry.order,
                         "aut": entry.aut, "notes": entry.notes})
        for family in sorted(self.families):
            rows.append({"name": f"{family}(q)", "degree": "q+1", "order": None,
                         "aut": f"{self.families[family]['aut']}(q)", "notes": self.families[family].get("notes", "")})
        for name in sorted(self.named):
            rows.append({"name": name, "degree": int(self.named[name]["q"]) + 1, "order": None,
                         "aut": self.named[name].get("aut"), "notes": self.named[name].get("notes", "")})
        for name in sorted(self.stretch):
            entry = self.stretch[name]
            rows.append({"name": name, "degree": None, "order": entry.socle_order, "aut": None,
                         "notes": f"|Aut| = {entry.aut_order}, Out = {entry.out}; inconclusive at scale"})
        return rows


_catalog: Optional[GroupCatalog] = None


def get_catalog() -> GroupCatalog:
    global _catalog
    if _catalog is None:
        _catalog = GroupCatalog()
    return _catalog
