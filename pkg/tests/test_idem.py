from __future__ import annotations

import math
from functools import reduce

import pytest

from qcd import poly
from qcd.errors import BadCharacteristic, CapExceeded, NotCoprime
from qcd.gf import field_from_order, field_make
from qcd.grouptalg import GroupAlgebraElement
from qcd.idem import (
    bar_partition,
    cond6_even,
    cond6_odd,
    cyclotomic_cosets,
    factor_xn1,
    minus_one_in_q_powers,
    multiplicative_order,
    ord_is_odd,
    primitive_idempotents,
    SPLITTING_FIELD_CAP,
)
from qcd.text import parse_poly
from qcd.worked import F5_IDEMPOTENTS

F2, F4, F5 = field_make(2), field_make(2, 2), field_make(5)

GRID = [
    (q, n)
    for q in (2, 3, 4, 5, 7, 8, 9, 13)
    for n in range(1, 16)
    if math.gcd(n, q) == 1 and q ** multiplicative_order(q, n) <= SPLITTING_FIELD_CAP
]


def _product(F, polys):
    return reduce(lambda a, b: poly.mul(F, a, b), polys, [1])


def test_cosets():
    assert [c.members for c in cyclotomic_cosets(3, 2)] == [(0,), (1, 2)]
    assert [c.members for c in cyclotomic_cosets(3, 4)] == [(0,), (1,), (2,)]
    assert [c.members for c in cyclotomic_cosets(4, 5)] == [(0,), (1,), (2,), (3,)]
    assert [c.members for c in cyclotomic_cosets(15, 2)] == [(0,), (1, 2, 4, 8), (3, 6, 9, 12), (5, 10), (7, 11, 13, 14)]
    with pytest.raises(NotCoprime):
        cyclotomic_cosets(4, 2)


def test_factor_examples():
    # each list was checked by multiplying back to x^n - 1
    assert factor_xn1(F2, 3) == [[1, 1], [1, 1, 1]]
    w = F4.element([0, 1]).value
    assert factor_xn1(F4, 3) == [[1, 1], [w, 1], [F4.mul(w, w), 1]]
    # roots 1, 2, 4, 3: the powers of the chosen primitive 4th root 2
    assert factor_xn1(F5, 4) == [[4, 1], [3, 1], [1, 1], [2, 1]]
    for F, n in ((F2, 3), (F4, 3), (F5, 4)):
        assert _product(F, factor_xn1(F, n)) == poly.x_pow_minus_one(F, n)


def test_f4_idempotents():
    B = primitive_idempotents(F4, 3)
    want = {parse_poly(F4, 3, s) for s in ("1,1,1", "1,w,w+1", "1,w+1,w")}
    assert set(B.idempotents) == want
    assert B.idempotents[0] == parse_poly(F4, 3, "1,1,1")


def test_f5_idempotents_match_published_polynomials():
    B = primitive_idempotents(F5, 4)
    want = [parse_poly(F5, 4, s) for s in F5_IDEMPOTENTS.values()]
    assert set(B.idempotents) == set(want)
    assert B.idempotents[0] == want[0]
    assert [e.values for e in B.idempotents] == [(4, 4, 4, 4), (4, 2, 1, 3), (4, 1, 4, 1), (4, 3, 1, 2)]


def test_f2_idempotents():
    B = primitive_idempotents(F2, 3)
    assert [e.values for e in B.idempotents] == [(1, 1, 1), (0, 1, 1)]


def test_bar_partition_examples():
    e1, e2, perm = bar_partition(primitive_idempotents(F4, 3))
    assert (e1, e2, perm) == ({0}, {1, 2}, (0, 2, 1))
    e1, e2, perm = bar_partition(primitive_idempotents(F2, 3))
    assert (e1, e2) == ({0, 1}, set())
    B = primitive_idempotents(F5, 4)
    e1, e2, perm = bar_partition(B)
    named = {k: B.index_of(parse_poly(F5, 4, v)) for k, v in F5_IDEMPOTENTS.items()}
    assert e1 == {named["e0"], named["e1"]}
    assert e2 == {named["e2"], named["e2bar"]}
    assert perm[named["e2"]] == named["e2bar"]


def test_basis_is_cached_and_hashable():
    assert primitive_idempotents(F5, 4) is primitive_idempotents(F5, 4)
    assert hash(primitive_idempotents(F5, 4)) == hash(primitive_idempotents(field_make(5), 4))


@pytest.mark.parametrize("q,n", GRID)
def test_basis_invariants(q, n):
    F = field_from_order(q)
    B = primitive_idempotents(F, n)
    factors = factor_xn1(F, n)
    assert _product(F, factors) == poly.x_pow_minus_one(F, n)
    assert len(set(map(tuple, factors))) == len(factors)
    cosets = cyclotomic_cosets(n, q)
    assert list(B.dims) == [len(c) for c in cosets] == [len(f) - 1 for f in factors]
    assert sum(B.dims) == n
    one = GroupAlgebraElement.one(F, n)
    total = GroupAlgebraElement.zero(F, n)
    for i, a in enumerate(B.idempotents):
        total = total + a
        for j, b in enumerate(B.idempotents):
            assert a * b == (a if i == j else GroupAlgebraElement.zero(F, n))
        # e_i is the identity of the component cut out by f_i: it vanishes mod every other factor
        for j, f in enumerate(factors):
            r = poly.mod(F, a.as_poly(), f)
            assert r == ([1] if i == j else [])
    assert total == one
    assert B.idempotents[0] == GroupAlgebraElement(F, n, (F.inv(F.from_int(n)),) * n)
    perm = B.bar_perm
    assert all(perm[perm[i]] == i for i in range(len(perm))) and perm[0] == 0
    for i, c in enumerate(cosets):
        assert cosets[perm[i]].members == tuple(sorted((-k) % n for k in c.members))
    e1, e2, _ = bar_partition(B)
    if n % 2:
        assert ord_is_odd(n, q) == (len(e1) == 1)
    else:
        # the coset {n/2} is its own negative
        assert len(e1) >= 2
    assert minus_one_in_q_powers(n, q) == (not e2)


def test_splitting_field_cap():
    # ord_11(13) = 10 and 13^10 is far above the cap
    with pytest.raises(CapExceeded):
        factor_xn1(field_make(13), 11)


def test_order_predicates():
    assert ord_is_odd(3, 4) and not ord_is_odd(3, 2)
    assert minus_one_in_q_powers(3, 2)
    assert not minus_one_in_q_powers(3, 4)
    assert not minus_one_in_q_powers(4, 5)
    assert multiplicative_order(2, 7) == 3
    with pytest.raises(NotCoprime):
        ord_is_odd(6, 3)


def test_cond6_examples():
    assert cond6_even(3, 2)
    assert not cond6_even(3, 4)
    assert cond6_even(1, 2)
    assert not cond6_odd(4, 5)
    assert cond6_odd(2, 5)
    with pytest.raises(BadCharacteristic):
        cond6_even(3, 3)
    with pytest.raises(BadCharacteristic):
        cond6_odd(3, 4)


def test_cond6_matches_minus_one_criterion():
    checked = 0
    for q in (2, 4, 8, 16, 32):
        for n in range(1, 200, 2):
            assert cond6_even(n, q) == minus_one_in_q_powers(n, q), (n, q)
            checked += 1
    for q in (3, 5, 7, 9, 11, 13, 25, 27, 49):
        for n in range(1, 200):
            if math.gcd(n, q) == 1:
                assert cond6_odd(n, q) == minus_one_in_q_powers(n, q), (n, q)
                checked += 1
    assert checked > 1500


def test_component_elements():
    B = primitive_idempotents(F4, 3)
    w = F4.element([0, 1]).value
    e0 = B.idempotents[0]
    assert B.component_elements[0] == (e0, e0.scale(w), e0.scale(F4.mul(w, w)))
    B = primitive_idempotents(F2, 7)
    for i, d in enumerate(B.dims):
        elems = B.component_elements[i]
        assert len(set(elems)) == 2**d - 1
        assert all(u * B.idempotents[i] == u for u in elems)
