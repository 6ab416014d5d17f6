#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
射影直线模块
PG(1, q) 的 q+1 个点、2×2 矩阵与 Frobenius 在点上的置换作用
"""

from dataclasses import dataclass
from typing import Callable, List, Tuple

from core.errors import InputError
from core.gfield import FieldElem, FieldSpec
from core.permcore import Permutation


@dataclass(frozen=True)
class MatrixRep:
    """2×2 矩阵 [[a, b], [c, d]]，作用在列向量上"""
    a: FieldElem
    b: FieldElem
    c: FieldElem
    d: FieldElem

    @classmethod
    def of(cls, spec: FieldSpec, a, b, c, d) -> "MatrixRep":
        def lift(x):
            return x if isinstance(x, FieldElem) else spec.from_int(x)
        return cls(lift(a), lift(b), lift(c), lift(d))

    def det(self) -> FieldElem:
        return self.a * self.d - self.b * self.c

    def entrywise(self, fn: Callable[[FieldElem], FieldElem]) -> "MatrixRep":
        return MatrixRep(fn(self.a), fn(self.b), fn(self.c), fn(self.d))

    def __matmul__(self, other: "MatrixRep") -> "MatrixRep":
        return MatrixRep(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )


class ProjLine:
    """射影直线：点 [1:y]（按 y 的编码排序）之后是 [0:1]

    点 [1:y] 的下标为 y.code，点 [0:1] 的下标为 q。
    """

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.size = spec.q + 1

    @property
    def infinity(self) -> int:
        return self.spec.q

    def point(self, index: int) -> Tuple[FieldElem, FieldElem]:
        if index == self.spec.q:
            return self.spec.zero, self.spec.one
        return self.spec.one, FieldElem(self.spec, index)

    def points(self) -> List[Tuple[FieldElem, FieldElem]]:
        return [self.point(i) for i in range(self.size)]

    def index_of(self, x: FieldElem, y: FieldElem) -> int:
        """规范化 [x:y] 并返回下标"""
        if x.is_zero():
            if y.is_zero():
                raise InputError("[0:0] 不是射影点")
            return self.spec.q
        return (y / x).code


def matrix_action(M: MatrixRep, line: ProjLine) -> Permutation:
    """[x:y] ↦ [ax+by : cx+dy]"""
    if M.det().is_zero():
        raise InputError("奇异矩阵不作用在射影直线上")
    images = []
    for x, y in line.points():
        images.append(line.index_of(M.a * x + M.b * y, M.c * x + M.d * y))
    return Permutation(images)


def frobenius_action(line: ProjLine) -> Permutation:
    """[x:y] ↦ [x^p : y^p]"""
    p = line.spec.p
    images = [line.index_of(x ** p, y ** p) for x, y in line.points()]
    return Permutation(images)
