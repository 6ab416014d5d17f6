#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
有限域模块
GF(p^f) 的多项式基算术、本原元搜索、子域嵌入与环面常数 c, d
"""

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Sequence, Tuple

import numpy as np
from sympy import isprime, primefactors

from core.errors import InputError
from utils.logger import get_logger

logger = get_logger("HolLab.gfield")

# 域元素个数不超过该值时使用预计算的乘法表
TABLE_LIMIT = 256


def _poly_trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod_remainder(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    """a mod b，系数从低到高，b 的首项可逆"""
    rem = _poly_trim([x % p for x in a])
    b = _poly_trim([x % p for x in b])
    lead_inv = pow(b[-1], -1, p)
    while len(rem) >= len(b):
        factor = rem[-1] * lead_inv % p
        shift = len(rem) - len(b)
        for i, coeff in enumerate(b):
            rem[shift + i] = (rem[shift + i] - factor * coeff) % p
        _poly_trim(rem)
    return rem


def _poly_mulmod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int) -> Tuple[int, ...]:
    f = len(modulus) - 1
    prod = [0] * (2 * f - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    for k in range(2 * f - 2, f - 1, -1):
        c = prod[k] % p
        if c:
            for t in range(f + 1):
                prod[k - f + t] -= c * modulus[t]
    return tuple(x % p for x in prod[:f])


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """首一多项式在 GF(p) 上不可约：对所有次数 ≤ f/2 的首一多项式做试除"""
    f = len(coeffs) - 1
    if f < 1:
        return False
    if f == 1:
        return True
    for degree in range(1, f // 2 + 1):
        for tail in itertools.product(range(p), repeat=degree):
            divisor = list(reversed(tail)) + [1]
            if not _poly_divmod_remainder(coeffs, divisor, p):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """有限域 GF(p^f)，modulus 为系数从低到高的首一不可约多项式"""
    p: int
    f: int
    modulus: Tuple[int, ...]

    def __post_init__(self):
        if not isprime(self.p):
            raise InputError(f"特征 {self.p} 不是素数")
        if len(self.modulus) != self.f + 1 or self.modulus[-1] != 1:
            raise InputError(f"模多项式必须是 {self.f} 次首一多项式: {self.modulus}")

    @property
    def q(self) -> int:
        return self.p ** self.f

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.f})"

    def coeffs_of(self, code: int) -> Tuple[int, ...]:
        digits = []
        for _ in range(self.f):
            code, r = divmod(code, self.p)
            digits.append(r)
        return tuple(digits)

    def code_of(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.f:
            raise InputError(f"系数向量长度超过 {self.f}")
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + (c % self.p)
        return code

    @cached_property
    def _coeff_table(self) -> np.ndarray:
        codes = np.arange(self.q, dtype=np.int64)
        powers = self.p ** np.arange(self.f, dtype=np.int64)
        return (codes[:, None] // powers[None, :]) % self.p

    @cached_property
    def _place_values(self) -> np.ndarray:
        return self.p ** np.arange(self.f, dtype=np.int64)

    @cached_property
    def _add_table(self) -> List[List[int]]:
        table = self._coeff_table
        sums = (table[:, None, :] + table[None, :, :]) % self.p
        return (sums @ self._place_values).tolist()

    @cached_property
    def _mul_table(self) -> List[List[int]]:
        table = self._coeff_table
        f, p, q = self.f, self.p, self.q
        prod = np.zeros((q, q, 2 * f - 1), dtype=np.int64)
        for i in range(f):
            for j in range(f):
                prod[:, :, i + j] += np.outer(table[:, i], table[:, j])
        prod %= p
        for k in range(2 * f - 2, f - 1, -1):
            lead = prod[:, :, k].copy()
            for t in range(f + 1):
                prod[:, :, k - f + t] -= lead * self.modulus[t]
            prod %= p
        return (prod[:, :, :f] @ self._place_values).tolist()

    @cached_property
    def _neg_table(self) -> List[int]:
        negs = (-self._coeff_table) % self.p
        return (negs @ self._place_values).tolist()

    @cached_property
    def _inv_table(self) -> List[int]:
        result = [0] * self.q
        for a in range(1, self.q):
            result[a] = self.pow_code(a, self.q - 2)
        return result

    def add_code(self, a: int, b: int) -> int:
        if self.q <= TABLE_LIMIT:
            return self._add_table[a][b]
        ca, cb = self.coeffs_of(a), self.coeffs_of(b)
        return self.code_of([(x + y) % self.p for x, y in zip(ca, cb)])

    def neg_code(self, a: int) -> int:
        if self.q <= TABLE_LIMIT:
            return self._neg_table[a]
        return self.code_of([(-x) % self.p for x in self.coeffs_of(a)])

    def mul_code(self, a: int, b: int) -> int:
        if self.q <= TABLE_LIMIT:
            return self._mul_table[a][b]
        return self.code_of(_poly_mulmod(self.coeffs_of(a), self.coeffs_of(b), self.modulus, self.p))

    def pow_code(self, a: int, exponent: int) -> int:
        if exponent < 0:
            a = self.inv_code(a)
            exponent = -exponent
        result = 1
        while exponent:
            if exponent & 1:
                result = self.mul_code(result, a)
            a = self.mul_code(a, a)
            exponent >>= 1
        return result

    def inv_code(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("零元不可逆")
        if self.q <= TABLE_LIMIT:
            return self._inv_table[a]
        return self.pow_code(a, self.q - 2)

    def element(self, value) -> "FieldElem":
        """由编码整数或系数序列构造元素"""
        if isinstance(value, (int, np.integer)):
            if not 0 <= int(value) < self.q:
                raise InputError(f"编码 {value} 超出 GF({self.q})")
            return FieldElem(self, int(value))
        return FieldElem(self, self.code_of(value))

    def from_int(self, n: int) -> "FieldElem":
        """素域中整数 n 的像"""
        return FieldElem(self, n % self.p)

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, 1)

    def elements(self) -> List["FieldElem"]:
        """按系数字典序（编码顺序）列出全部元素"""
        return [FieldElem(self, c) for c in range(self.q)]


@dataclass(frozen=True)
class FieldElem:
    """域元素，code 为系数向量的 p 进制编码"""
    spec: FieldSpec
    code: int

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self.spec.coeffs_of(self.code)

    def _other(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.spec != self.spec:
                raise InputError("不同域的元素不能运算")
            return other.code
        if isinstance(other, int):
            return other % self.spec.p
        return NotImplemented

    def __add__(self, other):
        return FieldElem(self.spec, self.spec.add_code(self.code, self._other(other)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.spec, self.spec.neg_code(self.code))

    def __sub__(self, other):
        return FieldElem(self.spec, self.spec.add_code(self.code, self.spec.neg_code(self._other(other))))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        return FieldElem(self.spec, self.spec.mul_code(self.code, self._other(other)))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        return FieldElem(self.spec, self.spec.pow_code(self.code, exponent))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.spec, self.spec.inv_code(self.code))

    def __truediv__(self, other):
        return self * FieldElem(self.spec, self._other(other)).inverse()

    def is_zero(self) -> bool:
        return self.code == 0

    def multiplicative_order(self) -> int:
        if self.code == 0:
            raise InputError("零元没有乘法阶")
        n = self.spec.q - 1
        order = n
        for r in primefactors(n):
            while order % r == 0 and self.spec.pow_code(self.code, order // r) == 1:
                order //= r
        return order

    def __repr__(self) -> str:
        terms = [f"{c}·X^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return f"{' + '.join(terms) or '0'} ∈ {self.spec!r}"


@dataclass(frozen=True)
class TorusConstants:
    """X² + cX + d 是 GF(q²)^× 某个生成元在 GF(q) 上的极小多项式"""
    c: FieldElem
    d: FieldElem
    root: FieldElem       # GF(q²) 中选定的生成元 g
    big_field: FieldSpec  # 以 GF(p) 的 2f 次扩张构造的 GF(q²)


def field_make(p: int, f: int) -> FieldSpec:
    """构造 GF(p^f)，模多项式取字典序最小的首一不可约多项式

    字典序按 (a_{f-1}, …, a_0) 从高次到低次比较。
    """
    if not isprime(p):
        raise InputError(f"{p} 不是素数")
    if f < 1:
        raise InputError(f"扩张次数必须 ≥ 1: {f}")
    for tail in itertools.product(range(p), repeat=f):
        coeffs = tuple(reversed(tail)) + (1,)
        if is_irreducible(coeffs, p):
            spec = FieldSpec(p, f, coeffs)
            logger.debug(f"构造 {spec!r}，模多项式系数 {coeffs}")
            return spec
    raise InputError(f"找不到 {f} 次不可约多项式（p = {p}）")


def primitive_generator(field: FieldSpec) -> FieldElem:
    """编码顺序最小的乘法群生成元"""
    n = field.q - 1
    exponents = [n // r for r in primefactors(n)]
    for code in range(1, field.q):
        if all(field.pow_code(code, e) != 1 for e in exponents):
            return FieldElem(field, code)
    raise InputError(f"{field!r} 中找不到本原元")


def frobenius(x: FieldElem) -> FieldElem:
    """x ↦ x^p"""
    return x ** x.spec.p


def subfield_embedding(big: FieldSpec, small: FieldSpec) -> Dict[int, FieldElem]:
    """把 big 中由 f 次 Frobenius 固定的子域同构地映到 small

    在子域中取 small 的模多项式的编码最小的根 α，映射 Σ aᵢXⁱ ↦ Σ aᵢαⁱ。

    Returns:
        Dict[int, FieldElem]: big 中子域元素编码 → small 中的元素
    """
    if big.p != small.p or big.f % small.f:
        raise InputError(f"{small!r} 不是 {big!r} 的子域")
    q = small.q
    subfield = [code for code in range(big.q) if big.pow_code(code, q) == code]
    if len(subfield) != q:
        raise InputError(f"子域元素个数 {len(subfield)} ≠ {q}")

    def evaluate(coeffs: Sequence[int], alpha: int) -> int:
        acc = 0
        for c in reversed(coeffs):
            acc = big.add_code(big.mul_code(acc, alpha), c % big.p)
        return acc

    alpha = next(a for a in subfield if evaluate(small.modulus, a) == 0)
    mapping = {}
    for code in range(q):
        mapping[evaluate(small.coeffs_of(code), alpha)] = FieldElem(small, code)
    return mapping


def torus_constants(spec: FieldSpec) -> TorusConstants:
    """c = −(g + g^q)，d = g^{1+q}，g 为 GF(q²)^× 的本原元"""
    q = spec.q
    if q in (2, 3):
        raise InputError("要求 q ≠ 2, 3")
    big = field_make(spec.p, 2 * spec.f)
    g = primitive_generator(big)
    g_conj = g ** q
    c_big = -(g + g_conj)
    d_big = g * g_conj
    embed = subfield_embedding(big, spec)
    try:
        c, d = embed[c_big.code], embed[d_big.code]
    except KeyError as exc:
        raise InputError("环面常数不在子域 GF(q) 中") from exc
    constants = TorusConstants(c=c, d=d, root=g, big_field=big)
    if not quadratic_is_irreducible(c, d):
        raise InputError(f"X² + cX + d 在 GF({q}) 上可约")
    logger.debug(f"GF({q}) 的环面常数: c = {c.code}, d = {d.code}")
    return constants


def quadratic_is_irreducible(c: FieldElem, d: FieldElem) -> bool:
    """X² + cX + d 在 GF(q) 上无根"""
    return all(not (x * x + c * x + d).is_zero() for x in c.spec.elements())
