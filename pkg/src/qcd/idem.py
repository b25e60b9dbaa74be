"""Primitive idempotents of FH and the number theory around them.

x^n - 1 is factored over F_q one q-cyclotomic coset at a time: the
minimal polynomial of alpha^j (alpha a primitive n-th root of unity in
F_{q^r}, r = ord_n(q)) is prod_{k in coset}(X - alpha^k).  The primitive
idempotent attached to a coset is the CRT lift of 1 modulo its factor,
so e_i(alpha^k) = 1 exactly for k in the i-th coset.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence

from . import poly
from .errors import BadCharacteristic, CapExceeded, EquivalenceViolation, NotCoprime
from .gf import FieldSpec
from .grouptalg import GroupAlgebraElement

SPLITTING_FIELD_CAP = 2**24


@dataclass(frozen=True)
class CyclotomicCoset:
    representative: int
    members: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, k: int) -> bool:
        return k in self.members


def _require_coprime(n: int, q: int) -> None:
    if n < 1 or math.gcd(n, q) != 1:
        raise NotCoprime(f"gcd(n={n}, q={q}) != 1")


def multiplicative_order(a: int, n: int) -> int:
    """Order of a in (Z/n)^x; by convention 1 when n == 1."""
    if n == 1:
        return 1
    _require_coprime(n, a)
    k, x = 1, a % n
    while x != 1:
        x = x * a % n
        k += 1
    return k


def cyclotomic_cosets(n: int, q: int) -> list[CyclotomicCoset]:
    _require_coprime(n, q)
    seen: set[int] = set()
    out = []
    for rep in range(n):
        if rep in seen:
            continue
        orbit = []
        k = rep
        while k not in orbit:
            orbit.append(k)
            k = k * q % n
        seen.update(orbit)
        out.append(CyclotomicCoset(rep, tuple(sorted(orbit))))
    return out


class _Extension:
    """F_q[t]/(h) for a monic irreducible h of degree r; elements are r-tuples."""

    def __init__(self, F: FieldSpec, h: Sequence[int]):
        self.F = F
        self.h = list(h)
        self.r = len(h) - 1
        self.zero = (0,) * self.r
        self.one = (1,) + (0,) * (self.r - 1)

    def _wrap(self, a: list) -> tuple:
        return tuple(a) + (0,) * (self.r - len(a))

    def add(self, a: tuple, b: tuple) -> tuple:
        return tuple(self.F.add(x, y) for x, y in zip(a, b))

    def neg(self, a: tuple) -> tuple:
        return tuple(self.F.neg(x) for x in a)

    def sub(self, a: tuple, b: tuple) -> tuple:
        return self.add(a, self.neg(b))

    def mul(self, a: tuple, b: tuple) -> tuple:
        F = self.F
        return self._wrap(poly.mulmod(F, poly.trim(F, a), poly.trim(F, b), self.h))

    def pow(self, a: tuple, e: int) -> tuple:
        F = self.F
        return self._wrap(poly.powmod(F, poly.trim(F, a), e, self.h))

    def inv(self, a: tuple) -> tuple:
        F = self.F
        d, s, _ = poly.xgcd(F, poly.trim(F, a), self.h)
        if d != [1]:
            raise ZeroDivisionError("not invertible")
        return self._wrap(poly.mod(F, s, self.h))

    def element(self, k: int) -> tuple:
        """The k-th element in lexicographic (low coefficient first) order."""
        out = []
        for _ in range(self.r):
            k, d = divmod(k, self.F.q)
            out.append(d)
        return tuple(out)


@lru_cache(maxsize=None)
def _smallest_irreducible_over(F: FieldSpec, r: int) -> tuple[int, ...]:
    if r == 1:
        return (0, 1)
    for low in itertools.product(range(F.q), repeat=r):
        cand = list(low) + [1]
        if cand[0] != 0 and poly.is_irreducible_rabin(F, cand, F.q):
            return tuple(cand)
    raise AssertionError("irreducible polynomials exist in every degree")


def _root_of_unity(K: _Extension, N: int, n: int) -> tuple:
    """First element (lexicographic search) of exact multiplicative order n in K."""
    if n == 1:
        return K.one
    primes = poly.prime_factors(n)
    for k in range(1, K.F.q**K.r):
        gamma = K.pow(K.element(k), N // n)
        if all(K.pow(gamma, n // ell) != K.one for ell in primes):
            return gamma
    raise AssertionError(f"no primitive {n}-th root of unity found")


@lru_cache(maxsize=None)
def _factor(F: FieldSpec, n: int) -> tuple[tuple[int, ...], ...]:
    q = F.q
    _require_coprime(n, q)
    cosets = cyclotomic_cosets(n, q)
    r = multiplicative_order(q, n)
    if q**r > SPLITTING_FIELD_CAP:
        raise CapExceeded(f"splitting field F_{q}^{r} exceeds cap {SPLITTING_FIELD_CAP}")
    K = _Extension(F, _smallest_irreducible_over(F, r))
    alpha = _root_of_unity(K, q**r - 1, n)
    powers = [K.one]
    for _ in range(n - 1):
        powers.append(K.mul(powers[-1], alpha))
    factors = []
    for coset in cosets:
        f = [K.one]
        for j in coset.members:
            f = poly.mul(K, f, [K.neg(powers[j]), K.one])
        if any(any(c[1:]) for c in f):
            raise EquivalenceViolation(f"minimal polynomial of coset {coset.members} not over F_q")
        factors.append(tuple(c[0] for c in f))
    return tuple(factors)


def factor_xn1(spec: FieldSpec, n: int) -> list[list[int]]:
    """Monic irreducible factors of x^n - 1 over F_q, one per cyclotomic coset, in coset order."""
    return [list(f) for f in _factor(spec, n)]


@dataclass(frozen=True, eq=False)
class IdempotentBasis:
    """The primitive idempotents e_0, ..., e_s of FH in canonical (coset) order."""

    field: FieldSpec
    n: int
    cosets: tuple[CyclotomicCoset, ...]
    factors: tuple[tuple[int, ...], ...]
    idempotents: tuple[GroupAlgebraElement, ...]
    bar_perm: tuple[int, ...]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IdempotentBasis):
            return NotImplemented
        return self.field == other.field and self.n == other.n

    def __hash__(self) -> int:
        return hash((self.field, self.n))

    def __len__(self) -> int:
        return len(self.idempotents)

    def __getitem__(self, i: int) -> GroupAlgebraElement:
        return self.idempotents[i]

    @property
    def q(self) -> int:
        return self.field.q

    @cached_property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cosets)

    @cached_property
    def fixed(self) -> frozenset[int]:
        """E': indices with bar(e_i) = e_i."""
        return frozenset(i for i, j in enumerate(self.bar_perm) if i == j)

    @cached_property
    def moved(self) -> frozenset[int]:
        """E'': indices swapped with a different idempotent by bar."""
        return frozenset(i for i, j in enumerate(self.bar_perm) if i != j)

    def orbits(self) -> list[tuple[int, ...]]:
        """Bar orbits on indices: singletons for E', ordered pairs (i, bar i), i < bar i, for E''."""
        out = []
        for i, j in enumerate(self.bar_perm):
            if i == j:
                out.append((i,))
            elif i < j:
                out.append((i, j))
        return out

    def index_of(self, e: GroupAlgebraElement) -> int:
        """Position of a primitive idempotent given by its coefficients."""
        for i, x in enumerate(self.idempotents):
            if x == e:
                return i
        raise KeyError(f"{e} is not a primitive idempotent of FH")

    @cached_property
    def _sums(self) -> dict[frozenset[int], GroupAlgebraElement]:
        return {}

    def sum_of(self, support) -> GroupAlgebraElement:
        key = frozenset(support)
        acc = self._sums.get(key)
        if acc is None:
            acc = GroupAlgebraElement.zero(self.field, self.n)
            for i in sorted(key):
                acc = acc + self.idempotents[i]
            self._sums[key] = acc
        return acc

    @cached_property
    def component_elements(self) -> tuple[tuple[GroupAlgebraElement, ...], ...]:
        """For each i, the nonzero elements f(x) e_i of the field FH e_i, f of degree < d_i.

        f -> f e_i is injective on polynomials of degree < d_i because
        FH e_i is isomorphic to F[x]/(f_i); order follows the coefficient tuples.
        """
        F, n = self.field, self.n
        out = []
        for e, d in zip(self.idempotents, self.dims):
            elems = []
            for coeffs in itertools.product(range(F.q), repeat=d):
                if not any(coeffs):
                    continue
                f = GroupAlgebraElement.from_poly(F, n, list(coeffs))
                elems.append(f * e)
            out.append(tuple(elems))
        return tuple(out)

    def to_json(self) -> dict:
        e1, e2, perm = bar_partition(self)
        return {
            "idempotents": [e.to_json() for e in self.idempotents],
            "dims": list(self.dims),
            "bar_perm": list(perm),
            "E1": sorted(e1),
            "E2": sorted(e2),
        }


@lru_cache(maxsize=None)
def primitive_idempotents(spec: FieldSpec, n: int) -> IdempotentBasis:
    F = spec
    _require_coprime(n, F.q)
    factors = _factor(F, n)
    xn1 = poly.x_pow_minus_one(F, n)
    idems = []
    for f in factors:
        f = list(f)
        h, rem = poly.divmod_(F, xn1, f)
        assert not rem
        d, u, _ = poly.xgcd(F, poly.mod(F, h, f), f)
        if d != [1]:
            raise EquivalenceViolation("x^n - 1 is not squarefree; gcd(n, q) must be 1")
        e = poly.mod(F, poly.mul(F, u, h), xn1)
        idems.append(GroupAlgebraElement.from_poly(F, n, e))
    idems = tuple(idems)
    _check_idempotent_identities(F, n, idems)

    perm = []
    for e in idems:
        b = e.bar()
        perm.append(next(j for j, x in enumerate(idems) if x == b))
    cosets = tuple(cyclotomic_cosets(n, F.q))
    # bar on idempotents is negation on cosets
    for i, c in enumerate(cosets):
        neg = tuple(sorted((-k) % n for k in c.members))
        if cosets[perm[i]].members != neg:
            raise EquivalenceViolation(f"bar permutation disagrees with coset negation at index {i}")
    return IdempotentBasis(F, n, cosets, factors, idems, tuple(perm))


def _check_idempotent_identities(F: FieldSpec, n: int, idems: Sequence[GroupAlgebraElement]) -> None:
    total = GroupAlgebraElement.zero(F, n)
    zero = total
    for i, a in enumerate(idems):
        total = total + a
        for j, b in enumerate(idems):
            prod = a * b
            if prod != (a if i == j else zero):
                raise EquivalenceViolation(f"e_{i} e_{j} violates orthogonality/idempotency")
    if total != GroupAlgebraElement.one(F, n):
        raise EquivalenceViolation("primitive idempotents do not sum to 1")
    e0 = GroupAlgebraElement(F, n, (F.inv(F.from_int(n)),) * n)
    if idems[0] != e0:
        raise EquivalenceViolation("e_0 differs from (1/n) sum x^i")


def bar_partition(basis: IdempotentBasis) -> tuple[frozenset[int], frozenset[int], tuple[int, ...]]:
    """(E', E'', pi) with bar(e_i) = e_{pi(i)}."""
    return basis.fixed, basis.moved, basis.bar_perm


def ord_is_odd(n: int, q: int) -> bool:
    """ord_n(q) odd; equivalent to E' = {e_0}."""
    _require_coprime(n, q)
    return multiplicative_order(q, n) % 2 == 1


def minus_one_in_q_powers(n: int, q: int) -> bool:
    """-1 is a power of q modulo n; equivalent to E'' being empty."""
    _require_coprime(n, q)
    target = (-1) % n
    x = 1 % n
    for _ in range(multiplicative_order(q, n)):
        if x == target:
            return True
        x = x * q % n
    return False


def _is_power_of(q: int, p: int) -> bool:
    while q % p == 0:
        q //= p
    return q == 1


def two_adic_valuation(k: int) -> int:
    v = 0
    while k % 2 == 0:
        k //= 2
        v += 1
    return v


def cond6_even(n: int, q: int) -> bool:
    """All prime divisors p of n share the same v(p) >= 1, v(p) = 2-adic valuation of ord_p(q)."""
    if q < 2 or not _is_power_of(q, 2):
        raise BadCharacteristic(f"q = {q} is not a power of 2")
    if n % 2 == 0:
        raise BadCharacteristic(f"n = {n} must be odd in characteristic 2")
    vals = {two_adic_valuation(multiplicative_order(q, p)) for p in poly.prime_factors(n)}
    return len(vals) <= 1 and 0 not in vals


def cond6_odd(n: int, q: int) -> bool:
    """Odd-characteristic counterpart, splitting on whether 4 divides n."""
    if q % 2 == 0:
        raise BadCharacteristic(f"q = {q} is even")
    _require_coprime(n, q)
    odd_primes = [p for p in poly.prime_factors(n) if p != 2]
    vals = [two_adic_valuation(multiplicative_order(q, p)) for p in odd_primes]
    if n % 4 != 0:
        return len(set(vals)) <= 1 and 0 not in vals
    ell = two_adic_valuation(n)
    return q % 2**ell == 2**ell - 1 and all(v == 1 for v in vals)
