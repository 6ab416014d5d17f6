#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
置换模块
定义 {0..n-1} 上的置换及其乘法、求逆、循环记号的解析与输出
"""

import math
import re
from typing import Iterable, List, Sequence, Tuple

from core.errors import InputError

_CYCLE_PATTERN = re.compile(r"\(([^()]*)\)")


class Permutation:
    """有限置换，images[i] 为点 i 的像

    乘法约定为从左到右: (p * q)(i) = q(p(i))，即先作用 p 再作用 q。
    """

    __slots__ = ("images", "_hash")

    def __init__(self, images: Sequence[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise InputError(f"不是置换: {images}")
        self.images = images
        self._hash = None

    @classmethod
    def _trusted(cls, images: Tuple[int, ...]) -> "Permutation":
        perm = cls.__new__(cls)
        perm.images = images
        perm._hash = None
        return perm

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """由 0 起始的循环列表构造置换

        Args:
            cycles: 循环列表，每个循环是点的序列
            degree: 置换的次数

        Returns:
            Permutation: 对应的置换
        """
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            cycle = [int(x) for x in cycle]
            for point in cycle:
                if point < 0 or point >= degree:
                    raise InputError(f"点 {point} 超出次数 {degree}")
                if point in seen:
                    raise InputError(f"点 {point} 在循环中重复出现")
                seen.add(point)
            for i, point in enumerate(cycle):
                images[point] = cycle[(i + 1) % len(cycle)]
        return cls._trusted(tuple(images))

    @classmethod
    def parse(cls, text: str, degree: int, one_based: bool = True) -> "Permutation":
        """解析循环记号，如 "(1 2 3) (4 5)"；空串或 "()" 表示恒等置换"""
        stripped = text.strip()
        residue = _CYCLE_PATTERN.sub("", stripped).strip()
        if residue:
            raise InputError(f"无法解析的循环记号: {text!r}")
        offset = 1 if one_based else 0
        cycles = []
        for body in _CYCLE_PATTERN.findall(stripped):
            tokens = body.replace(",", " ").split()
            if not tokens:
                continue
            try:
                cycles.append([int(tok) - offset for tok in tokens])
            except ValueError as exc:
                raise InputError(f"循环中含非整数点: {body!r}") from exc
        return cls.from_cycles(cycles, degree)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(other.images) != len(self.images):
            raise InputError("置换次数不一致")
        o = other.images
        return Permutation._trusted(tuple(o[i] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._trusted(tuple(inv))

    __invert__ = inverse

    def __pow__(self, exponent: int) -> "Permutation":
        base = self if exponent >= 0 else self.inverse()
        exponent = abs(exponent)
        result = Permutation.identity(self.degree)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate_by(self, g: "Permutation") -> "Permutation":
        """返回 g * self * g⁻¹"""
        return g * self * g.inverse()

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> List[Tuple[int, ...]]:
        """非平凡循环，每个循环从其最小点开始"""
        seen = [False] * len(self.images)
        result = []
        for start in range(len(self.images)):
            if seen[start] or self.images[start] == start:
                continue
            cycle = [start]
            seen[start] = True
            nxt = self.images[start]
            while nxt != start:
                cycle.append(nxt)
                seen[nxt] = True
                nxt = self.images[nxt]
            result.append(tuple(cycle))
        return result

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if not self.is_identity() else 1

    def moved_points(self) -> List[int]:
        return [i for i, x in enumerate(self.images) if i != x]

    def smallest_moved_point(self) -> int:
        for i, x in enumerate(self.images):
            if i != x:
                return i
        return -1

    def fixed_point_free(self) -> bool:
        return all(i != x for i, x in enumerate(self.images))

    def to_cycle_string(self, one_based: bool = True) -> str:
        offset = 1 if one_based else 0
        cycles = self.cycles()
        if not cycles:
            return "()"
        return " ".join("(" + " ".join(str(p + offset) for p in c) + ")" for c in cycles)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.images)
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({self.to_cycle_string(one_based=False)}, degree={self.degree})"


def commutator(a: Permutation, b: Permutation) -> Permutation:
    """[a, b] = a⁻¹ b⁻¹ a b"""
    return a.inverse() * b.inverse() * a * b
