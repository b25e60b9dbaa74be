"""Cyclic codes of length n as ideals of FH, stored by idempotent support."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import BasisMismatch, CapExceeded
from .grouptalg import GroupAlgebraElement
from .idem import IdempotentBasis, primitive_idempotents
from .matrix import MatrixF, rref_array

DEFAULT_UNITS_CAP = 10**6


@dataclass(frozen=True)
class CyclicCode:
    """C = sum of FH e_i over i in ``support``."""

    basis: IdempotentBasis
    support: frozenset[int]

    def __post_init__(self) -> None:
        support = frozenset(int(i) for i in self.support)
        bad = [i for i in support if not 0 <= i < len(self.basis)]
        if bad:
            raise ValueError(f"support indices {sorted(bad)} out of range 0..{len(self.basis) - 1}")
        object.__setattr__(self, "support", support)

    @classmethod
    def of(cls, basis: IdempotentBasis, support: Iterable[int]) -> CyclicCode:
        return cls(basis, frozenset(support))

    @property
    def dim(self) -> int:
        return sum(self.basis.dims[i] for i in self.support)

    def __le__(self, other: CyclicCode) -> bool:
        _same_basis(self, other)
        return self.support <= other.support

    def contains(self, c: GroupAlgebraElement) -> bool:
        """c lies in C iff e_C c = c."""
        return cc_identity(self) * c == c

    def to_json(self) -> dict:
        return {"support": sorted(self.support), "dim": self.dim}

    def __repr__(self) -> str:
        return f"CyclicCode(q={self.basis.q}, n={self.basis.n}, support={sorted(self.support)})"


def _same_basis(a: CyclicCode, b: CyclicCode) -> None:
    if a.basis != b.basis:
        raise BasisMismatch(f"codes over {a.basis.field!r}, n={a.basis.n} and {b.basis.field!r}, n={b.basis.n}")


def cc_from_generator(g: GroupAlgebraElement, basis: IdempotentBasis | None = None) -> CyclicCode:
    """The ideal FH g, whose support is {i : g e_i != 0}."""
    if basis is None:
        basis = primitive_idempotents(g.field, g.n)
    return CyclicCode(basis, frozenset(i for i, e in enumerate(basis.idempotents) if not (g * e).is_zero()))


def cc_identity(C: CyclicCode) -> GroupAlgebraElement:
    return C.basis.sum_of(C.support)


def cc_sum(C: CyclicCode, D: CyclicCode) -> CyclicCode:
    _same_basis(C, D)
    return CyclicCode(C.basis, C.support | D.support)


def cc_intersect(C: CyclicCode, D: CyclicCode) -> CyclicCode:
    _same_basis(C, D)
    return CyclicCode(C.basis, C.support & D.support)


def bar_support(basis: IdempotentBasis, support: Iterable[int]) -> frozenset[int]:
    return frozenset(basis.bar_perm[i] for i in support)


def cc_bar(C: CyclicCode) -> CyclicCode:
    return CyclicCode(C.basis, bar_support(C.basis, C.support))


def cc_dual(C: CyclicCode) -> CyclicCode:
    everything = frozenset(range(len(C.basis)))
    return CyclicCode(C.basis, everything - bar_support(C.basis, C.support))


def cc_is_lcd(C: CyclicCode) -> bool:
    # C and its dual meet in the ideal supported on S & dual(S)
    return not (C.support & cc_dual(C).support)


def cc_is_self_orthogonal(C: CyclicCode) -> bool:
    return not (C.support & bar_support(C.basis, C.support))


def units_count(C: CyclicCode) -> int:
    q = C.basis.q
    return math.prod(q ** C.basis.dims[i] - 1 for i in C.support)


def cc_units(C: CyclicCode, cap: int = DEFAULT_UNITS_CAP) -> list[GroupAlgebraElement]:
    """All units of the ring (C, e_C): one nonzero component per idempotent of the support."""
    count = units_count(C)
    if count > cap:
        raise CapExceeded(f"{count} units exceed cap {cap}")
    basis = C.basis
    idx = sorted(C.support)
    zero = GroupAlgebraElement.zero(basis.field, basis.n)
    seen = set()
    out = []
    for parts in itertools.product(*(basis.component_elements[i] for i in idx)):
        u = zero
        for c in parts:
            u = u + c
        if u.values not in seen:
            seen.add(u.values)
            out.append(u)
    return out


def cc_generator_matrix(C: CyclicCode) -> MatrixF:
    """Canonical rref basis of C, from the first d_i shifts of each e_i in the support."""
    basis = C.basis
    F, n = basis.field, basis.n
    rows = []
    for i in sorted(C.support):
        e = basis.idempotents[i]
        for k in range(basis.dims[i]):
            rows.append(e.shift(k).values)
    if not rows:
        return MatrixF.zeros(F, 0, n)
    A, pivots = rref_array(F, np.array(rows, dtype=np.int64))
    return MatrixF(F, A[: len(pivots)])
