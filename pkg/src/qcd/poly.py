"""Dense univariate polynomials over an exact field.

A polynomial is a list of coefficients in ascending degree with no
trailing zeros; ``[]`` is the zero polynomial.  Every function takes the
coefficient field ``K`` first.  ``K`` only needs ``zero``, ``one``,
``add``, ``sub``, ``mul``, ``neg`` and ``inv``, so the same code serves
the prime field, F_q itself and the splitting extensions built in
:mod:`qcd.idem`.
"""

from __future__ import annotations

from typing import Any, Sequence

Poly = list


def trim(K: Any, a: Sequence) -> Poly:
    a = list(a)
    while a and a[-1] == K.zero:
        a.pop()
    return a


def deg(a: Poly) -> int:
    return len(a) - 1


def add(K: Any, a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] = K.add(out[i], y)
    return trim(K, out)


def neg(K: Any, a: Poly) -> Poly:
    return [K.neg(x) for x in a]


def sub(K: Any, a: Poly, b: Poly) -> Poly:
    return add(K, a, neg(K, b))


def scale(K: Any, c: Any, a: Poly) -> Poly:
    return trim(K, [K.mul(c, x) for x in a])


def mul(K: Any, a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return []
    out = [K.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == K.zero:
            continue
        for j, y in enumerate(b):
            out[i + j] = K.add(out[i + j], K.mul(x, y))
    return trim(K, out)


def divmod_(K: Any, a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    lead_inv = K.inv(b[-1])
    q = [K.zero] * max(len(a) - len(b) + 1, 0)
    while len(r) >= len(b):
        c = K.mul(r[-1], lead_inv)
        shift = len(r) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] = K.sub(r[shift + i], K.mul(c, y))
        r = trim(K, r)
    return trim(K, q), r


def mod(K: Any, a: Poly, b: Poly) -> Poly:
    return divmod_(K, a, b)[1]


def monic(K: Any, a: Poly) -> Poly:
    if not a:
        return []
    return scale(K, K.inv(a[-1]), a)


def gcd(K: Any, a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, mod(K, a, b)
    return monic(K, a)


def xgcd(K: Any, a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(d, s, t)`` with ``s*a + t*b = d`` and ``d`` monic."""
    r0, r1 = a, b
    s0, s1 = [K.one], []
    t0, t1 = [], [K.one]
    while r1:
        q, r = divmod_(K, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(K, s0, mul(K, q, s1))
        t0, t1 = t1, sub(K, t0, mul(K, q, t1))
    if not r0:
        return [], s0, t0
    c = K.inv(r0[-1])
    return scale(K, c, r0), scale(K, c, s0), scale(K, c, t0)


def mulmod(K: Any, a: Poly, b: Poly, m: Poly) -> Poly:
    return mod(K, mul(K, a, b), m)


def powmod(K: Any, a: Poly, e: int, m: Poly) -> Poly:
    result = mod(K, [K.one], m)
    base = mod(K, a, m)
    while e:
        if e & 1:
            result = mulmod(K, result, base, m)
        e >>= 1
        if e:
            base = mulmod(K, base, base, m)
    return result


def x_pow_minus_one(K: Any, n: int) -> Poly:
    """The polynomial X^n - 1."""
    return [K.neg(K.one)] + [K.zero] * (n - 1) + [K.one]


def evaluate(K: Any, a: Poly, x: Any) -> Any:
    acc = K.zero
    for c in reversed(a):
        acc = K.add(K.mul(acc, x), c)
    return acc


def is_irreducible_rabin(K: Any, f: Poly, q: int) -> bool:
    """Rabin's test for a monic ``f`` over the field ``K`` of size ``q``."""
    d = deg(f)
    if d < 1:
        return False
    if d == 1:
        return True
    t = [K.zero, K.one]

    def frob_iter(k: int) -> Poly:
        h = t
        for _ in range(k):
            h = powmod(K, h, q, f)
        return h

    if frob_iter(d) != mod(K, t, f):
        return False
    for ell in prime_factors(d):
        h = sub(K, frob_iter(d // ell), t)
        if deg(gcd(K, h, f)) != 0:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    k = 2
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            while n % k == 0:
                n //= k
        k += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return prime_factors(n) == [n]
