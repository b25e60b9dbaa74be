"""2-quasi-cyclic codes as FH-submodules of (FH)^2 in Goursat form.

A submodule C is determined by three ideals C1, C2, C12 with
C1 and C2 each meeting C12 trivially, plus a unit g of C12:

    C = (C1 x C2) + {(c, c g) : c in C12}.

Over the semisimple algebra FH everything splits along the primitive
idempotents, so C is also described by one of five shapes per
component: Zero, Plane, Line10 = K x 0, Line01 = 0 x K, or the graph
{(c, c g_e)} of a nonzero slope.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .cyclic import CyclicCode, bar_support, cc_identity, cc_sum
from .errors import BasisMismatch, NotUnit, OverlapViolation
from .grouptalg import GroupAlgebraElement
from .idem import IdempotentBasis, primitive_idempotents
from .matrix import MatrixF, rref_array

Pair = tuple[GroupAlgebraElement, GroupAlgebraElement]


class Tag(enum.Enum):
    ZERO = "Zero"
    PLANE = "Plane"
    LINE10 = "Line10"
    LINE01 = "Line01"
    GRAPH = "Graph"


@dataclass(frozen=True)
class ComponentType:
    tag: Tag
    slope: GroupAlgebraElement | None = None

    def __post_init__(self) -> None:
        if (self.tag is Tag.GRAPH) != (self.slope is not None):
            raise ValueError("a slope is present exactly for Graph components")

    def rank(self) -> int:
        """Dimension over the component field."""
        return {Tag.ZERO: 0, Tag.PLANE: 2}.get(self.tag, 1)

    def __str__(self) -> str:
        return f"Graph({self.slope})" if self.tag is Tag.GRAPH else self.tag.value


@dataclass(frozen=True)
class GoursatData:
    C1: CyclicCode
    C2: CyclicCode
    C12: CyclicCode
    g: GroupAlgebraElement

    def __post_init__(self) -> None:
        b = self.C1.basis
        if self.C2.basis != b or self.C12.basis != b:
            raise BasisMismatch("C1, C2 and C12 must share one idempotent basis")
        if self.g.field != b.field or self.g.n != b.n:
            raise BasisMismatch("g lives in a different group algebra")
        # canonical representative of g inside C12
        object.__setattr__(self, "g", self.g * cc_identity(self.C12))

    @classmethod
    def from_supports(
        cls,
        basis: IdempotentBasis,
        s1: Iterable[int],
        s2: Iterable[int],
        s12: Iterable[int],
        g: GroupAlgebraElement | None = None,
    ) -> GoursatData:
        if g is None:
            g = GroupAlgebraElement.zero(basis.field, basis.n)
        return cls(CyclicCode.of(basis, s1), CyclicCode.of(basis, s2), CyclicCode.of(basis, s12), g)

    @property
    def basis(self) -> IdempotentBasis:
        return self.C1.basis

    @property
    def tilde_C1(self) -> CyclicCode:
        return cc_sum(self.C1, self.C12)

    @property
    def tilde_C2(self) -> CyclicCode:
        return cc_sum(self.C2, self.C12)

    @property
    def dim(self) -> int:
        return self.C1.dim + self.C2.dim + self.C12.dim

    def validate(self) -> None:
        s12 = self.C12.support
        for name, C in (("C1", self.C1), ("C2", self.C2)):
            common = C.support & s12
            if common:
                raise OverlapViolation(f"{name} and C12 share idempotents {sorted(common)}")
        for i in sorted(s12):
            if (self.g * self.basis.idempotents[i]).is_zero():
                raise NotUnit(f"g vanishes on component {i} of C12")

    def to_json(self) -> dict:
        return {
            "C1": sorted(self.C1.support),
            "C2": sorted(self.C2.support),
            "C12": sorted(self.C12.support),
            "g": self.g.to_json(),
        }

    @classmethod
    def from_json(cls, basis: IdempotentBasis, obj: dict) -> GoursatData:
        g = GroupAlgebraElement.from_json(basis.field, obj["g"])
        return cls.from_supports(basis, obj["C1"], obj["C2"], obj["C12"], g)


@dataclass(frozen=True)
class QuasiCyclicCode:
    basis: IdempotentBasis
    components: tuple[ComponentType, ...] = field()

    def __post_init__(self) -> None:
        if len(self.components) != len(self.basis):
            raise ValueError("one component type per primitive idempotent")

    @property
    def dim(self) -> int:
        return sum(c.rank() * d for c, d in zip(self.components, self.basis.dims))

    def data(self) -> GoursatData:
        s1 = [i for i, c in enumerate(self.components) if c.tag in (Tag.PLANE, Tag.LINE10)]
        s2 = [i for i, c in enumerate(self.components) if c.tag in (Tag.PLANE, Tag.LINE01)]
        s12 = [i for i, c in enumerate(self.components) if c.tag is Tag.GRAPH]
        g = GroupAlgebraElement.zero(self.basis.field, self.basis.n)
        for i in s12:
            g = g + self.components[i].slope
        return GoursatData.from_supports(self.basis, s1, s2, s12, g)


def qc_construct(data: GoursatData) -> QuasiCyclicCode:
    data.validate()
    b = data.basis
    s1, s2, s12 = data.C1.support, data.C2.support, data.C12.support
    comps = []
    for i, e in enumerate(b.idempotents):
        if i in s12:
            comps.append(ComponentType(Tag.GRAPH, data.g * e))
        elif i in s1 and i in s2:
            comps.append(ComponentType(Tag.PLANE))
        elif i in s1:
            comps.append(ComponentType(Tag.LINE10))
        elif i in s2:
            comps.append(ComponentType(Tag.LINE01))
        else:
            comps.append(ComponentType(Tag.ZERO))
    return QuasiCyclicCode(b, tuple(comps))


def component_inverse(a: GroupAlgebraElement, e: GroupAlgebraElement, d: int) -> GroupAlgebraElement:
    """Inverse of a nonzero a in the field FH e of order q^d, i.e. a^(q^d - 2) e."""
    return (a ** (a.field.q**d - 2)) * e


def _component_shape(basis: IdempotentBasis, i: int, gens: Sequence[Pair]) -> ComponentType:
    e = basis.idempotents[i]
    vecs = [(a * e, b * e) for a, b in gens]
    vecs = [(a, b) for a, b in vecs if not (a.is_zero() and b.is_zero())]
    if not vecs:
        return ComponentType(Tag.ZERO)
    a0, b0 = vecs[0]
    for a, b in vecs[1:]:
        if not (a0 * b - a * b0).is_zero():
            return ComponentType(Tag.PLANE)
    if a0.is_zero():
        return ComponentType(Tag.LINE01)
    if b0.is_zero():
        return ComponentType(Tag.LINE10)
    return ComponentType(Tag.GRAPH, b0 * component_inverse(a0, e, basis.dims[i]))


def qc_decompose_code(gens: Sequence[Pair], basis: IdempotentBasis | None = None) -> QuasiCyclicCode:
    gens = list(gens)
    if basis is None:
        if not gens:
            raise ValueError("need a basis or at least one generator")
        basis = primitive_idempotents(gens[0][0].field, gens[0][0].n)
    return QuasiCyclicCode(basis, tuple(_component_shape(basis, i, gens) for i in range(len(basis))))


def qc_decompose(gens: Sequence[Pair], basis: IdempotentBasis | None = None) -> GoursatData:
    """Goursat data of the FH-submodule of (FH)^2 generated by ``gens``."""
    return qc_decompose_code(gens, basis).data()


def qc_two_generators(data: GoursatData) -> tuple[Pair, Pair]:
    e1, e2, e12 = cc_identity(data.C1), cc_identity(data.C2), cc_identity(data.C12)
    zero = GroupAlgebraElement.zero(data.basis.field, data.basis.n)
    return (e1 + e12, e12 * data.g), (zero, e2)


def qc_is_principal(data: GoursatData) -> bool:
    s1, s2, s12 = data.C1.support, data.C2.support, data.C12.support
    return not (s1 & s2 or s1 & s12 or s2 & s12)


def qc_is_double_circulant(data: GoursatData) -> bool:
    everything = frozenset(range(len(data.basis)))
    return (data.C1.support | data.C12.support) == everything and not data.C2.support


def _g_gbar_is(data: GoursatData, sign: int) -> bool:
    e12 = cc_identity(data.C12)
    target = e12 if sign > 0 else -e12
    return data.g * data.g.bar() == target


def qc_is_self_dual(data: GoursatData) -> bool:
    b = data.basis
    s1, s2, s12 = data.C1.support, data.C2.support, data.C12.support
    if data.dim != b.n or data.C1.dim != data.C2.dim:
        return False
    bs1, bs2 = bar_support(b, s1), bar_support(b, s2)
    if s1 & bs1 or s2 & bs2 or s12 & bs1 or s12 & bs2:
        return False
    if bar_support(b, s12) != s12:
        return False
    return _g_gbar_is(data, -1)


def _bar_symmetric(data: GoursatData) -> bool:
    b = data.basis
    return bar_support(b, data.C1.support) == data.C2.support and bar_support(b, data.C12.support) == data.C12.support


def qc_is_dihedral(data: GoursatData) -> bool:
    return _bar_symmetric(data) and _g_gbar_is(data, 1)


def qc_is_consta_dihedral(data: GoursatData) -> bool:
    return _bar_symmetric(data) and _g_gbar_is(data, -1)


def pair_rows(pair: Pair) -> np.ndarray:
    """The n words (x^k a, x^k b), k = 0..n-1, as rows of length 2n."""
    a, b = pair
    return np.hstack([a.circulant().entries, b.circulant().entries])


def qc_generator_matrix(code: QuasiCyclicCode | GoursatData) -> MatrixF:
    """Canonical rref generator matrix, from the cyclic shifts of the two generators."""
    data = code.data() if isinstance(code, QuasiCyclicCode) else code
    b = data.basis
    F, n = b.field, b.n
    g1, g2 = qc_two_generators(data)
    A, pivots = rref_array(F, np.vstack([pair_rows(g1), pair_rows(g2)]))
    return MatrixF(F, A[: len(pivots)])
