#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
有限域测试
"""

import pytest

from core.errors import InputError
from core.gfield import (field_make, frobenius, is_irreducible, primitive_generator,
                         quadratic_is_irreducible, subfield_embedding, torus_constants)

SMALL_Q = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4),
           (17, 1), (19, 1), (23, 1), (5, 2), (3, 3), (29, 1), (31, 1), (2, 5), (37, 1),
           (41, 1), (43, 1), (47, 1), (7, 2)]


@pytest.mark.parametrize("p,f", SMALL_Q)
def test_field_axioms(p, f):
    F = field_make(p, f)
    elements = F.elements()
    assert len(elements) == p ** f
    zero, one = F.zero, F.one
    for a in elements:
        assert a + zero == a
        assert a * one == a
        assert a + (-a) == zero
        if not a.is_zero():
            assert a * a.inverse() == one
    # 结合律与分配律抽样
    sample = elements[:7] + elements[-5:]
    for a in sample:
        for b in sample:
            assert a * b == b * a
            for c in sample[:4]:
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("p,f,modulus", [
    (2, 2, (1, 1, 1)),
    (3, 2, (1, 0, 1)),
    (2, 3, (1, 1, 0, 1)),
    (2, 4, (1, 1, 0, 0, 1)),
])
def test_modulus_is_lexicographically_first(p, f, modulus):
    F = field_make(p, f)
    assert F.modulus == modulus
    assert is_irreducible(modulus, p)


def test_is_irreducible():
    assert is_irreducible((1, 1, 1), 2)
    assert not is_irreducible((1, 0, 1), 2)
    assert is_irreducible((1, 0, 1), 3)
    assert not is_irreducible((2, 0, 1), 3)


@pytest.mark.parametrize("p,f", [(2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3)])
def test_primitive_generator(p, f):
    F = field_make(p, f)
    omega = primitive_generator(F)
    assert omega.multiplicative_order() == F.q - 1
    powers = {(omega ** i).code for i in range(F.q - 1)}
    assert len(powers) == F.q - 1


@pytest.mark.parametrize("p,f", [(2, 2), (2, 3), (3, 2), (5, 2)])
def test_frobenius_is_automorphism_of_order_f(p, f):
    F = field_make(p, f)
    for a in F.elements():
        for b in F.elements()[:6]:
            assert frobenius(a * b) == frobenius(a) * frobenius(b)
            assert frobenius(a + b) == frobenius(a) + frobenius(b)
        x = a
        for _ in range(f):
            x = frobenius(x)
        assert x == a
    fixed = [a for a in F.elements() if frobenius(a) == a]
    assert len(fixed) == p


def test_integer_arithmetic_lands_in_prime_field():
    F = field_make(3, 2)
    x = F.element((0, 1))
    assert (x * x + 1).is_zero()
    assert 2 * F.one + 1 == F.zero
    assert F.from_int(7) == F.from_int(1)


def test_element_rejects_out_of_range_code():
    F = field_make(5, 1)
    with pytest.raises(InputError):
        F.element(5)


def test_zero_has_no_inverse():
    F = field_make(7, 1)
    with pytest.raises(ZeroDivisionError):
        F.zero.inverse()


def test_mixed_fields_rejected():
    with pytest.raises(InputError):
        _ = field_make(2, 2).one + field_make(2, 3).one


def test_large_field_uses_polynomial_arithmetic():
    F = field_make(17, 2)
    assert F.q > 256
    omega = primitive_generator(F)
    assert omega.multiplicative_order() == F.q - 1
    assert omega ** (F.q - 1) == F.one


def test_subfield_embedding_is_ring_map():
    big = field_make(2, 4)
    small = field_make(2, 2)
    mapping = subfield_embedding(big, small)
    assert len(mapping) == 4
    codes = list(mapping)
    for a in codes:
        for b in codes:
            product = big.mul_code(a, b)
            assert mapping[product] == mapping[a] * mapping[b]
            assert mapping[big.add_code(a, b)] == mapping[a] + mapping[b]
    with pytest.raises(InputError):
        subfield_embedding(field_make(2, 3), small)


@pytest.mark.parametrize("p,f", [(2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (2, 4), (5, 2)])
def test_torus_constants(p, f):
    F = field_make(p, f)
    constants = torus_constants(F)
    assert quadratic_is_irreducible(constants.c, constants.d)
    # d = g^(1+q) 生成 GF(q)^×
    assert constants.d.multiplicative_order() == F.q - 1
    assert constants.root.multiplicative_order() == F.q ** 2 - 1


@pytest.mark.parametrize("p", [2, 3])
def test_torus_constants_reject_tiny_fields(p):
    with pytest.raises(InputError):
        torus_constants(field_make(p, 1))


def test_field_make_rejects_bad_input():
    with pytest.raises(InputError):
        field_make(4, 1)
    with pytest.raises(InputError):
        field_make(3, 0)
