"""Parsing and printing of fields, elements, polynomials and matrices.

Element tokens are sums of terms ``c``, ``w``, ``cw``, ``w^k`` or
``cw^k`` joined by ``+`` or ``-`` (for example ``w^2+w+1`` or ``-2``),
where ``w`` is the class of the modulus variable.  A polynomial in FH is
a comma-separated list of element tokens in ascending degree.
"""

from __future__ import annotations

import re
from typing import Iterable, TextIO

import numpy as np

from .gf import FieldSpec, field_from_order, field_make
from .grouptalg import GroupAlgebraElement
from .matrix import MatrixF

_TERM = re.compile(r"([+-]?)(\d*)(?:(w)(?:\^(\d+))?)?")


def parse_field(text: str, cap: int | None = None) -> FieldSpec:
    """``p^m``, ``p^m:c0,...,cm`` (explicit modulus) or a bare prime power ``q``."""
    text = text.strip()
    base, _, modulus = text.partition(":")
    if "^" in base:
        p_txt, m_txt = base.split("^", 1)
        p, m = int(p_txt), int(m_txt)
    else:
        if modulus:
            raise ValueError(f"explicit modulus needs the p^m form, got {text!r}")
        return field_from_order(int(base), cap=cap)
    coeffs = [int(c) for c in modulus.split(",")] if modulus else None
    return field_make(p, m, coeffs, cap=cap)


def format_field(F: FieldSpec) -> str:
    return f"{F.p}^{F.m}:" + ",".join(str(c) for c in F.modulus)


def parse_element(F: FieldSpec, token: str) -> int:
    """Encoded value of an element token."""
    s = token.replace(" ", "")
    if not s:
        raise ValueError("empty element token")
    digits = [0] * F.m
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
            raise ValueError(f"cannot parse element {token!r} at {s[pos:]!r}")
        if pos and not m.group(1):
            raise ValueError(f"missing + or - in {token!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = int(m.group(2)) if m.group(2) else 1
        k = 0
        if m.group(3):
            k = int(m.group(4)) if m.group(4) else 1
            if F.m == 1:
                raise ValueError(f"'w' is undefined in the prime field GF({F.p})")
        if k >= F.m:
            raise ValueError(f"w^{k} exceeds the extension degree {F.m}; reduce it first")
        digits[k] = (digits[k] + sign * coef) % F.p
        pos = m.end()
    return F.from_digits(digits)


def parse_poly(F: FieldSpec, n: int, text: str) -> GroupAlgebraElement:
    tokens = [t for t in text.split(",")] if text.strip() else []
    if len(tokens) > n:
        raise ValueError(f"{len(tokens)} coefficients given for n={n}")
    vals = [parse_element(F, t) for t in tokens] + [0] * (n - len(tokens))
    return GroupAlgebraElement(F, n, tuple(vals))


def format_poly(a: GroupAlgebraElement) -> str:
    return ",".join(a.field.format(v) for v in a.values)


def parse_support(text: str | None) -> list[int]:
    if text is None or not text.strip():
        return []
    return sorted({int(t) for t in text.split(",")})


def read_matrix(F: FieldSpec, fh: TextIO) -> MatrixF:
    """First line ``rows cols``, then one row per line of space-separated element tokens."""
    lines = [ln for ln in (raw.strip() for raw in fh) if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty matrix file")
    rows, cols = (int(t) for t in lines[0].split())
    body = lines[1:]
    if len(body) != rows:
        raise ValueError(f"expected {rows} rows, found {len(body)}")
    data = np.zeros((rows, cols), dtype=np.int64)
    for i, ln in enumerate(body):
        toks = ln.split()
        if len(toks) != cols:
            raise ValueError(f"row {i} has {len(toks)} entries, expected {cols}")
        data[i] = [parse_element(F, t) for t in toks]
    return MatrixF(F, data)


def write_matrix(M: MatrixF) -> str:
    lines = [f"{M.rows} {M.cols}"]
    for row in M.entries:
        lines.append(" ".join(M.spec.format(int(v)) for v in row))
    return "\n".join(lines) + "\n"


def matrix_pairs(M: MatrixF) -> list[tuple[GroupAlgebraElement, GroupAlgebraElement]]:
    """Split each row of a 2n-column matrix into a pair of FH elements."""
    if M.cols % 2:
        raise ValueError("need an even number of columns")
    n = M.cols // 2
    return [
        (GroupAlgebraElement(M.spec, n, tuple(int(v) for v in row[:n])), GroupAlgebraElement(M.spec, n, tuple(int(v) for v in row[n:])))
        for row in M.entries
    ]


def rows_text(rows: Iterable[Iterable[int]], F: FieldSpec) -> list[str]:
    return [" ".join(F.format(int(v)) for v in row) for row in rows]
