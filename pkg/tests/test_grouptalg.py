from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import algebra_and_elements
from qcd.errors import NotCoprime, SpecMismatch
from qcd.gf import field_make
from qcd.grouptalg import GroupAlgebraElement, ga_bar, ga_circulant, ga_inner, ga_mul, ga_sigma
from qcd.text import parse_poly

F2, F4, F5 = field_make(2), field_make(2, 2), field_make(5)


def test_x_times_x_squared():
    x = GroupAlgebraElement.monomial(F2, 3, 1)
    x2 = GroupAlgebraElement.monomial(F2, 3, 2)
    assert ga_mul(x, x2) == GroupAlgebraElement.one(F2, 3)


def test_f4_idempotent_products():
    e0 = parse_poly(F4, 3, "1,1,1")
    e1 = parse_poly(F4, 3, "1,w,w+1")
    assert ga_mul(e1, e1) == e1
    assert ga_mul(e0, e1).is_zero()


def test_bar_examples():
    assert ga_bar(GroupAlgebraElement.one(F4, 3)) == GroupAlgebraElement.one(F4, 3)
    assert ga_bar(parse_poly(F4, 3, "1,w,w+1")) == parse_poly(F4, 3, "1,w+1,w")
    assert ga_bar(parse_poly(F5, 4, "0,1,2,3")) == parse_poly(F5, 4, "0,3,2,1")


def test_sigma_and_inner():
    assert ga_sigma(GroupAlgebraElement.one(F5, 4)).value == 1
    assert ga_sigma(GroupAlgebraElement.monomial(F5, 4, 1)).value == 0
    row = parse_poly(F4, 3, "1,w,w+1")
    assert ga_inner(row, row).value == 0
    assert ga_inner(row, GroupAlgebraElement.zero(F4, 3)).value == 0


def test_circulant_of_x():
    P = ga_circulant(GroupAlgebraElement.monomial(F2, 3, 1))
    assert P.tolist() == [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    assert ga_circulant(GroupAlgebraElement.one(F5, 4)).tolist() == np.eye(4, dtype=int).tolist()


def test_construction_checks():
    with pytest.raises(NotCoprime):
        GroupAlgebraElement.zero(F2, 4)
    with pytest.raises(ValueError):
        GroupAlgebraElement(F5, 3, (1, 2))
    with pytest.raises(SpecMismatch):
        GroupAlgebraElement.one(F5, 3) + GroupAlgebraElement.one(F5, 4)
    with pytest.raises(SpecMismatch):
        GroupAlgebraElement.one(F2, 3) * GroupAlgebraElement.one(F4, 3)


def test_json_roundtrip():
    a = parse_poly(F4, 3, "w,0,w+1")
    assert GroupAlgebraElement.from_json(F4, a.to_json()) == a


def test_shift_is_multiplication_by_x():
    a = parse_poly(F5, 4, "1,2,3,4")
    assert a.shift(1) == GroupAlgebraElement.monomial(F5, 4, 1) * a
    assert a.shift(1).values == (4, 1, 2, 3)


def _naive_product(a, b):
    F, n = a.field, a.n
    out = [0] * n
    for i in range(n):
        for j in range(n):
            out[(i + j) % n] = F.add(out[(i + j) % n], F.mul(a.values[i], b.values[j]))
    return tuple(out)


@settings(max_examples=200, deadline=None)
@given(algebra_and_elements(count=3))
def test_ring_and_bar_laws(sample):
    F, n, (a, b, c) = sample
    assert (a * b).values == _naive_product(a, b)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a * b).bar() == a.bar() * b.bar()
    assert (a + b).bar() == a.bar() + b.bar()
    assert a.bar().bar() == a
    assert ga_sigma(a * b) == ga_sigma(b * a)
    assert ga_inner(a, b) == ga_sigma(a * b.bar()) == ga_sigma(a.bar() * b)
    assert ga_inner(c * a, b) == ga_inner(a, c.bar() * b)


@settings(max_examples=200, deadline=None)
@given(algebra_and_elements(count=2))
def test_circulant_is_injective_homomorphism(sample):
    F, n, (a, b) = sample
    A, B = ga_circulant(a), ga_circulant(b)
    assert ga_circulant(a * b) == A @ B
    assert ga_circulant(a + b) == A + B
    assert ga_circulant(a.bar()) == A.T
    assert A.entries[0].tolist() == list(a.values)
    if a != b:
        assert A != B
