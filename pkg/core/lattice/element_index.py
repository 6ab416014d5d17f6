#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
元素索引模块
把环境群的全部元素编号为 0..|G|-1，以 numpy 表格完成批量乘法、共轭与正规化子扫描
"""

from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np
from sympy import factorint

from core.config_manager import get_config_manager
from core.errors import InputError, ResourceError
from core.permcore import GroupHandle, Permutation, group_from_elements


class ElementIndex:
    """环境群元素表

    table[i] 是第 i 个元素的像数组；元素按基像字典序编号。
    乘法约定与 Permutation 一致：mul(i, j) 先作用 i 再作用 j。
    """

    def __init__(self, group: GroupHandle, bound: Optional[int] = None):
        if bound is None:
            bound = get_config_manager().bound("lattice_order")
        size = group.order()
        if size > bound:
            raise ResourceError(f"群阶 {size} 超出子群格上限 {bound}", bound, size)
        self.group = group
        self.degree = group.degree
        self.perms: List[Permutation] = list(group.elements(max(bound, size)))
        self.size = len(self.perms)
        self.table = np.ascontiguousarray(
            np.array([p.images for p in self.perms], dtype=np.int32).reshape(self.size, self.degree))
        self._lookup: Dict[bytes, int] = {row.tobytes(): i for i, row in enumerate(self.table)}
        self.identity = self._lookup[np.arange(self.degree, dtype=np.int32).tobytes()]
        self.generator_indices = [self.index_of(g) for g in group.generators]

    # --- 基本查找 ---

    def index_of(self, g: Permutation) -> int:
        try:
            return self._lookup[np.asarray(g.images, dtype=np.int32).tobytes()]
        except KeyError as exc:
            raise InputError(f"{g!r} 不属于环境群") from exc

    def indices_of(self, perms: Iterable[Permutation]) -> np.ndarray:
        return np.sort(np.fromiter((self.index_of(g) for g in perms), dtype=np.int64))

    def rows_to_indices(self, rows: np.ndarray) -> np.ndarray:
        rows = np.ascontiguousarray(rows, dtype=np.int32)
        lookup = self._lookup
        return np.fromiter((lookup[r.tobytes()] for r in rows), dtype=np.int64, count=len(rows))

    def perm(self, i: int) -> Permutation:
        return self.perms[int(i)]

    # --- 表格 ---

    @cached_property
    def inverse_table(self) -> np.ndarray:
        inv = np.empty_like(self.table)
        cols = np.broadcast_to(np.arange(self.degree, dtype=np.int32), self.table.shape)
        np.put_along_axis(inv, self.table.astype(np.int64), cols, axis=1)
        return inv

    @cached_property
    def inverse(self) -> np.ndarray:
        return self.rows_to_indices(self.inverse_table)

    @cached_property
    def orders(self) -> np.ndarray:
        """每个元素的阶"""
        orders = np.zeros(self.size, dtype=np.int64)
        ident = np.arange(self.degree, dtype=np.int32)
        power = self.table.copy()
        k = 1
        pending = np.ones(self.size, dtype=bool)
        while pending.any():
            done = pending & (power == ident).all(axis=1)
            orders[done] = k
            pending &= ~done
            power = np.take_along_axis(self.table, power.astype(np.int64), axis=1)
            k += 1
        return orders

    @cached_property
    def prime_of(self) -> np.ndarray:
        """阶为素数幂 p^a (a ≥ 1) 时为 p，否则为 0"""
        result = np.zeros(self.size, dtype=np.int64)
        for value in np.unique(self.orders):
            if value <= 1:
                continue
            factors = factorint(int(value))
            if len(factors) == 1:
                result[self.orders == value] = next(iter(factors))
        return result

    @cached_property
    def prime_power_root(self) -> np.ndarray:
        """对阶为 p^a 的元素 x 给出 x^p 的编号，其余为 -1"""
        result = np.full(self.size, -1, dtype=np.int64)
        for p in np.unique(self.prime_of):
            if p == 0:
                continue
            idx = np.nonzero(self.prime_of == p)[0]
            rows = self.table[idx].astype(np.int64)
            power = rows
            for _ in range(int(p) - 1):
                power = np.take_along_axis(rows, power, axis=1)
            result[idx] = self.rows_to_indices(power)
        return result

    @cached_property
    def conjugation_maps(self) -> List[np.ndarray]:
        """每个生成元 s 的共轭映射 e ↦ s e s⁻¹（以编号数组表示）"""
        return [self.conjugation_map(s) for s in self.generator_indices]

    @cached_property
    def fixed_point_free(self) -> np.ndarray:
        ident = np.arange(self.degree, dtype=np.int32)
        return (self.table != ident).all(axis=1)

    # --- 运算 ---

    def mul(self, i: int, j: int) -> int:
        return self._lookup[np.ascontiguousarray(self.table[j][self.table[i]]).tobytes()]

    def right_multiply(self, members: np.ndarray, j: int) -> np.ndarray:
        """{e * g_j : e ∈ members}"""
        return self.rows_to_indices(self.table[j][self.table[members]])

    def conjugation_map(self, g: int) -> np.ndarray:
        """全部元素在 e ↦ g e g⁻¹ 下的像编号"""
        g_row = self.table[g]
        g_inv_row = self.inverse_table[g]
        return self.rows_to_indices(g_inv_row[self.table[:, g_row]])

    def conjugate_members(self, members: np.ndarray, g: int) -> np.ndarray:
        g_row = self.table[g]
        g_inv_row = self.inverse_table[g]
        return self.rows_to_indices(g_inv_row[self.table[members][:, g_row]])

    def normalizer_mask(self, member_mask: np.ndarray, generators: Sequence[int]) -> np.ndarray:
        """逐元扫描：g 使 g h g⁻¹ ∈ H 对 H 的全部生成元成立"""
        result = np.ones(self.size, dtype=bool)
        inv_table = self.inverse_table.astype(np.int64)
        for h in generators:
            # 第 r 行为 g_r h g_r⁻¹ 的像
            shifted = self.table[h][self.table].astype(np.int64)
            conj_rows = np.take_along_axis(inv_table, shifted, axis=1)
            result &= member_mask[self.rows_to_indices(conj_rows)]
        return result

    def mask_of(self, members: np.ndarray) -> np.ndarray:
        mask = np.zeros(self.size, dtype=bool)
        mask[members] = True
        return mask

    def closure(self, generators: Sequence[int]) -> np.ndarray:
        """⟨generators⟩ 的元素编号（升序）"""
        mask = np.zeros(self.size, dtype=bool)
        mask[self.identity] = True
        frontier = np.array([self.identity], dtype=np.int64)
        while frontier.size:
            found = []
            for s in generators:
                found.append(self.right_multiply(frontier, s))
            candidates = np.unique(np.concatenate(found)) if found else np.empty(0, dtype=np.int64)
            fresh = candidates[~mask[candidates]]
            mask[fresh] = True
            frontier = fresh
        return np.nonzero(mask)[0]

    def handle(self, generators: Sequence[int], name: Optional[str] = None) -> GroupHandle:
        return GroupHandle(self.degree, [self.perms[int(g)] for g in generators], name)

    def handle_from_members(self, members: np.ndarray, name: Optional[str] = None) -> GroupHandle:
        return group_from_elements(self.degree, (self.perms[int(i)] for i in members), name)
