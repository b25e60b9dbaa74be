"""Exact arithmetic in finite fields F_q, q = p^m.

Elements are encoded as integers ``0 <= v < q`` whose base-p digits are
the coefficients (ascending) of the residue polynomial modulo the field
modulus.  So ``0`` is zero, ``1`` is one, and for m > 1 the integer ``p``
is the class of the modulus variable (written ``w`` in text output).
The integer order therefore coincides with lexicographic order on the
coefficient sequence, low degree first.

Hot paths work on these integers directly (scalar methods on
:class:`FieldSpec`, and numpy-vectorised ``v*`` methods).  :class:`FieldElement`
is the user-facing value type.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from . import poly
from .errors import CapExceeded, DivisionByZero, NotIrreducible, NotPrime, SpecMismatch

DEFAULT_FIELD_CAP = 2**16
_TABLE_LIMIT = 1024


@dataclass(frozen=True)
class FieldSpec:
    """F_q with q = p^m, realised as Z_p[t]/(modulus)."""

    p: int
    m: int
    modulus: tuple[int, ...]

    # The prime field doubles as the coefficient field for ``qcd.poly``.
    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @cached_property
    def q(self) -> int:
        return self.p**self.m

    @property
    def characteristic(self) -> int:
        return self.p

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"

    # -- digits ----------------------------------------------------------

    def digits(self, v: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.m):
            v, d = divmod(v, self.p)
            out.append(d)
        return tuple(out)

    def from_digits(self, coeffs: Sequence[int]) -> int:
        v = 0
        for c in reversed(list(coeffs)):
            v = v * self.p + (c % self.p)
        return v

    # -- scalar arithmetic on encoded ints --------------------------------

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_digits(a, b)

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return self._neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        log = self._log
        return self._exp[(log[a] + log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self.m == 1:
            return pow(a, e, self.p)
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def from_int(self, k: int) -> int:
        """Image of the integer ``k`` under Z -> F_q."""
        return k % self.p

    # -- tables ------------------------------------------------------------

    def _add_digits(self, a: int, b: int) -> int:
        p = self.p
        da, db = self.digits(a), self.digits(b)
        return self.from_digits([(x + y) % p for x, y in zip(da, db)])

    @cached_property
    def _add_table(self) -> list[list[int]] | None:
        if self.m == 1 or self.p == 2 or self.q > _TABLE_LIMIT:
            return None
        return [[self._add_digits(a, b) for b in range(self.q)] for a in range(self.q)]

    @cached_property
    def _neg_table(self) -> list[int]:
        return [self.from_digits([-d for d in self.digits(a)]) for a in range(self.q)]

    def _mul_poly(self, a: int, b: int) -> int:
        """Schoolbook multiply-and-reduce; used once to seed the log tables."""
        K = _prime_field(self.p)
        prod = poly.mul(K, poly.trim(K, self.digits(a)), poly.trim(K, self.digits(b)))
        r = poly.mod(K, prod, list(self.modulus))
        return self.from_digits(r)

    @cached_property
    def _exp_log(self) -> tuple[list[int], list[int]]:
        q = self.q
        for g in range(2, q):
            exp = [1]
            x = g
            while x != 1 and len(exp) < q:
                exp.append(x)
                x = self._mul_poly(x, g)
            if len(exp) == q - 1:
                log = [0] * q
                for k, v in enumerate(exp):
                    log[v] = k
                return exp, log
        raise AssertionError(f"no primitive element found in {self!r}")

    @property
    def _exp(self) -> list[int]:
        return self._exp_log[0]

    @property
    def _log(self) -> list[int]:
        return self._exp_log[1]

    # -- vectorised arithmetic on int64 arrays ----------------------------

    @cached_property
    def _np_tables(self) -> tuple[np.ndarray, np.ndarray] | None:
        if self.m == 1 or self.q > _TABLE_LIMIT:
            return None
        q = self.q
        add = np.array([[self.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
        mul = np.array([[self.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
        return add, mul

    @cached_property
    def _np_exp_log_digits(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        exp = np.array(self._exp, dtype=np.int64)
        log = np.array(self._log, dtype=np.int64)
        digits = np.array([self.digits(v) for v in range(self.q)], dtype=np.int64)
        weights = self.p ** np.arange(self.m, dtype=np.int64)
        return exp, log, digits, weights

    @cached_property
    def np_neg(self) -> np.ndarray:
        return np.array([self.neg(a) for a in range(self.q)], dtype=np.int64)

    @cached_property
    def np_inv(self) -> np.ndarray:
        return np.array([0] + [self.inv(a) for a in range(1, self.q)], dtype=np.int64)

    def vadd(self, a, b) -> np.ndarray:
        if self.m == 1:
            return (np.asarray(a) + b) % self.p
        if self.p == 2:
            return np.bitwise_xor(a, b)
        tables = self._np_tables
        if tables is not None:
            return tables[0][a, b]
        _, _, digits, weights = self._np_exp_log_digits
        return ((digits[a] + digits[b]) % self.p) @ weights

    def vneg(self, a) -> np.ndarray:
        if self.m == 1:
            return (-np.asarray(a)) % self.p
        return self.np_neg[a]

    def vsub(self, a, b) -> np.ndarray:
        if self.m == 1:
            return (np.asarray(a) - b) % self.p
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b) -> np.ndarray:
        if self.m == 1:
            return (np.asarray(a) * b) % self.p
        tables = self._np_tables
        if tables is not None:
            return tables[1][a, b]
        exp, log, _, _ = self._np_exp_log_digits
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        out = exp[(log[a] + log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    # -- misc -------------------------------------------------------------

    def elements(self) -> list[FieldElement]:
        return field_elements(self)

    def element(self, value: int | Sequence[int]) -> FieldElement:
        """Wrap an encoded int (reduced mod p in a prime field) or a coefficient list."""
        if isinstance(value, int):
            return FieldElement(self, value % self.p if self.m == 1 else value)
        return FieldElement(self, self.from_digits(value))

    def format(self, v: int) -> str:
        """Render an encoded element as text, e.g. ``w^2+w+1`` or ``3``."""
        if self.m == 1:
            return str(v)
        terms = []
        for k, c in reversed(list(enumerate(self.digits(v)))):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "w" if k == 1 else f"w^{k}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms) if terms else "0"


@lru_cache(maxsize=None)
def _prime_field(p: int) -> FieldSpec:
    return FieldSpec(p, 1, (0, 1))


@dataclass(frozen=True)
class FieldElement:
    """An element of F_q bound to its field."""

    spec: FieldSpec
    value: int

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.spec.q:
            raise ValueError(f"value {self.value} out of range for {self.spec!r}")

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.spec.digits(self.value)

    def _other(self, other: object) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise SpecMismatch(f"{self.spec!r} vs {other.spec!r}")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.spec.from_int(other)
        raise SpecMismatch(f"cannot combine field element with {type(other).__name__}")

    def __add__(self, other: object) -> FieldElement:
        return FieldElement(self.spec, self.spec.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other: object) -> FieldElement:
        return FieldElement(self.spec, self.spec.sub(self.value, self._other(other)))

    def __rsub__(self, other: object) -> FieldElement:
        return FieldElement(self.spec, self.spec.sub(self._other(other), self.value))

    def __mul__(self, other: object) -> FieldElement:
        return FieldElement(self.spec, self.spec.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __neg__(self) -> FieldElement:
        return FieldElement(self.spec, self.spec.neg(self.value))

    def __truediv__(self, other: object) -> FieldElement:
        return self * field_inv(FieldElement(self.spec, self._other(other)))

    def __pow__(self, e: int) -> FieldElement:
        return FieldElement(self.spec, self.spec.pow(self.value, e))

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return self.spec.format(self.value)

    def to_json(self) -> dict:
        return {"p": self.spec.p, "m": self.spec.m, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, spec: FieldSpec, obj: dict) -> FieldElement:
        if obj["p"] != spec.p or obj["m"] != spec.m:
            raise SpecMismatch(f"element of GF({obj['p']}^{obj['m']}) given for {spec!r}")
        coeffs = obj["coeffs"]
        if len(coeffs) != spec.m or any(not 0 <= c < spec.p for c in coeffs):
            raise ValueError(f"bad coefficient list {coeffs!r}")
        return cls(spec, spec.from_digits(coeffs))


def _default_cap() -> int:
    return int(os.environ.get("QCD_FIELD_CAP", DEFAULT_FIELD_CAP))


def _monic_irreducible_by_trial_division(p: int, f: Sequence[int]) -> bool:
    K = _prime_field(p)
    f = poly.trim(K, [c % p for c in f])
    d = poly.deg(f)
    if d < 1 or f[-1] != 1:
        return False
    for k in range(1, d // 2 + 1):
        for low in itertools.product(range(p), repeat=k):
            divisor = list(low) + [1]
            if not poly.mod(K, f, divisor):
                return False
    return True


@lru_cache(maxsize=None)
def _smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    if m == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=m):
        cand = list(low) + [1]
        if _monic_irreducible_by_trial_division(p, cand):
            return tuple(cand)
    raise AssertionError("irreducible polynomials exist in every degree")


def field_make(p: int, m: int = 1, modulus: Sequence[int] | None = None, cap: int | None = None) -> FieldSpec:
    """Build F_{p^m}; without ``modulus`` the lexicographically smallest monic irreducible is used."""
    if not poly.is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise ValueError("extension degree must be positive")
    cap = _default_cap() if cap is None else cap
    if p**m > cap:
        raise CapExceeded(f"q = {p}^{m} exceeds field cap {cap}")
    if modulus is None:
        return FieldSpec(p, m, _smallest_irreducible(p, m))
    modulus = tuple(int(c) for c in modulus)
    if len(modulus) != m + 1 or modulus[-1] != 1 or any(not 0 <= c < p for c in modulus):
        raise NotIrreducible(f"modulus {list(modulus)} is not a monic degree-{m} polynomial over Z_{p}")
    if not _monic_irreducible_by_trial_division(p, modulus):
        raise NotIrreducible(f"modulus {list(modulus)} is reducible over Z_{p}")
    return FieldSpec(p, m, modulus)


def field_from_order(q: int, cap: int | None = None) -> FieldSpec:
    """Default field of order ``q`` (a prime power)."""
    for p in poly.prime_factors(q)[:1]:
        m = 0
        r = q
        while r % p == 0:
            r //= p
            m += 1
        if r == 1:
            return field_make(p, m, cap=cap)
    raise NotPrime(f"{q} is not a prime power")


def field_elements(spec: FieldSpec) -> list[FieldElement]:
    """All q elements in lexicographic coefficient order; 0 then 1 first."""
    return [FieldElement(spec, v) for v in range(spec.q)]


def _check(a: FieldElement, b: FieldElement) -> None:
    if a.spec != b.spec:
        raise SpecMismatch(f"{a.spec!r} vs {b.spec!r}")


def field_add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check(a, b)
    return a + b


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _check(a, b)
    return a * b


def field_neg(a: FieldElement) -> FieldElement:
    return -a


def field_inv(a: FieldElement) -> FieldElement:
    return FieldElement(a.spec, a.spec.inv(a.value))
