"""The cyclic group algebra FH = F_q[x]/(x^n - 1), gcd(n, q) = 1.

An element a(x) = a_0 + a_1 x + ... + a_{n-1} x^{n-1} is stored as the
tuple of encoded coefficients, i.e. as the word (a_0, ..., a_{n-1}).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import NotCoprime, SpecMismatch
from .gf import FieldElement, FieldSpec
from .matrix import MatrixF


@dataclass(frozen=True)
class GroupAlgebraElement:
    field: FieldSpec
    n: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be positive")
        if math.gcd(self.n, self.field.p) != 1:
            raise NotCoprime(f"gcd(n={self.n}, q={self.field.q}) != 1")
        if len(self.values) != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {len(self.values)}")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> GroupAlgebraElement:
        return cls(field, n, (0,) * n)

    @classmethod
    def one(cls, field: FieldSpec, n: int) -> GroupAlgebraElement:
        return cls(field, n, (1,) + (0,) * (n - 1))

    @classmethod
    def monomial(cls, field: FieldSpec, n: int, k: int, c: int = 1) -> GroupAlgebraElement:
        vals = [0] * n
        vals[k % n] = c
        return cls(field, n, tuple(vals))

    @classmethod
    def from_coeffs(cls, field: FieldSpec, n: int, coeffs: Sequence[int | FieldElement]) -> GroupAlgebraElement:
        """Build from up to n ascending coefficients (ints are taken mod p / as encodings)."""
        vals = [0] * n
        if len(coeffs) > n:
            raise ValueError(f"{len(coeffs)} coefficients for n={n}")
        for i, c in enumerate(coeffs):
            if isinstance(c, FieldElement):
                if c.spec != field:
                    raise SpecMismatch(f"{c.spec!r} vs {field!r}")
                vals[i] = c.value
            else:
                vals[i] = field.element(int(c)).value
        return cls(field, n, tuple(vals))

    @classmethod
    def from_poly(cls, field: FieldSpec, n: int, p: Sequence[int]) -> GroupAlgebraElement:
        """Reduce an arbitrary-degree polynomial (encoded coefficients) mod x^n - 1."""
        vals = [0] * n
        for i, c in enumerate(p):
            vals[i % n] = field.add(vals[i % n], c)
        return cls(field, n, tuple(vals))

    # -- views ----------------------------------------------------------

    @property
    def coeffs(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, v) for v in self.values)

    def as_poly(self) -> list[int]:
        vals = list(self.values)
        while vals and vals[-1] == 0:
            vals.pop()
        return vals

    def is_zero(self) -> bool:
        return not any(self.values)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __str__(self) -> str:
        terms = []
        for k, v in enumerate(self.values):
            if v == 0:
                continue
            c = self.field.format(v)
            if self.field.m > 1 and "+" in c:
                c = f"({c})"
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if not mono:
                terms.append(c)
            else:
                terms.append(mono if c == "1" else f"{c}{mono}")
        return " + ".join(terms) if terms else "0"

    # -- arithmetic -------------------------------------------------------

    def _same(self, other: GroupAlgebraElement) -> None:
        if not isinstance(other, GroupAlgebraElement):
            raise SpecMismatch(f"expected a group algebra element, got {type(other).__name__}")
        if other.field != self.field or other.n != self.n:
            raise SpecMismatch(f"FH over {self.field!r}, n={self.n} vs {other.field!r}, n={other.n}")

    def __add__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        self._same(other)
        F = self.field
        if F.m == 1:
            p = F.p
            return GroupAlgebraElement(F, self.n, tuple((a + b) % p for a, b in zip(self.values, other.values)))
        add = F.add
        return GroupAlgebraElement(F, self.n, tuple(add(a, b) for a, b in zip(self.values, other.values)))

    def __sub__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        self._same(other)
        sub = self.field.sub
        return GroupAlgebraElement(self.field, self.n, tuple(sub(a, b) for a, b in zip(self.values, other.values)))

    def __neg__(self) -> GroupAlgebraElement:
        neg = self.field.neg
        return GroupAlgebraElement(self.field, self.n, tuple(neg(a) for a in self.values))

    def scale(self, c: int | FieldElement) -> GroupAlgebraElement:
        if isinstance(c, FieldElement):
            if c.spec != self.field:
                raise SpecMismatch(f"{c.spec!r} vs {self.field!r}")
            c = c.value
        mul = self.field.mul
        return GroupAlgebraElement(self.field, self.n, tuple(mul(c, a) for a in self.values))

    def __mul__(self, other):
        if isinstance(other, (FieldElement, int)) and not isinstance(other, bool):
            if isinstance(other, int):
                other = self.field.from_int(other)
            return self.scale(other)
        self._same(other)
        return GroupAlgebraElement(self.field, self.n, _convolve(self.field, self.n, self.values, other.values))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, e: int) -> GroupAlgebraElement:
        if e < 0:
            raise ValueError("negative powers are not defined in FH in general")
        result = GroupAlgebraElement.one(self.field, self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, k: int = 1) -> GroupAlgebraElement:
        """x^k * a, i.e. the word rotated right by k positions."""
        k %= self.n
        v = self.values
        return GroupAlgebraElement(self.field, self.n, v[-k:] + v[:-k] if k else v)

    def bar(self) -> GroupAlgebraElement:
        v = self.values
        return GroupAlgebraElement(self.field, self.n, (v[0],) + tuple(reversed(v[1:])))

    def sigma(self) -> FieldElement:
        return FieldElement(self.field, self.values[0])

    def inner(self, other: GroupAlgebraElement) -> FieldElement:
        self._same(other)
        F = self.field
        acc = 0
        for a, b in zip(self.values, other.values):
            if a and b:
                acc = F.add(acc, F.mul(a, b))
        return FieldElement(F, acc)

    def circulant(self) -> MatrixF:
        return ga_circulant(self)

    def to_json(self) -> dict:
        return {"n": self.n, "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, field: FieldSpec, obj: dict) -> GroupAlgebraElement:
        coeffs = [FieldElement.from_json(field, c) for c in obj["coeffs"]]
        return cls(field, int(obj["n"]), tuple(c.value for c in coeffs))


def _convolve(F: FieldSpec, n: int, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Cyclic convolution of two coefficient tuples."""
    if F.m == 1:
        full = np.convolve(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64))
        out = full[:n].copy()
        out[: n - 1] += full[n:]
        return tuple((out % F.p).tolist())
    add, mul = F.add, F.mul
    out = [0] * n
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                k = i + j
                if k >= n:
                    k -= n
                out[k] = add(out[k], mul(ai, bj))
    return tuple(out)


def ga_add(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    return a + b


def ga_mul(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    """Cyclic convolution: c_k = sum over i + j = k (mod n) of a_i b_j."""
    a._same(b)
    return a * b


def ga_bar(a: GroupAlgebraElement) -> GroupAlgebraElement:
    """The involution x -> x^{-1}: coefficient k moves to n - k."""
    return a.bar()


def ga_sigma(a: GroupAlgebraElement) -> FieldElement:
    """Coefficient of the group identity."""
    return a.sigma()


def ga_inner(a: GroupAlgebraElement, b: GroupAlgebraElement) -> FieldElement:
    return a.inner(b)


def ga_circulant(a: GroupAlgebraElement) -> MatrixF:
    """n x n circulant: first row is the word of a, each row the right shift of the previous."""
    n = a.n
    v = np.array(a.values, dtype=np.int64)
    idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    return MatrixF(a.field, v[idx])


def ga_sum(items: Iterable[GroupAlgebraElement], field: FieldSpec, n: int) -> GroupAlgebraElement:
    acc = GroupAlgebraElement.zero(field, n)
    for x in items:
        acc = acc + x
    return acc
