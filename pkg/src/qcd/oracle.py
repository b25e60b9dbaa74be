"""Brute-force checks on generator matrices of length-2n codes.

Nothing here looks at idempotents or Goursat data: every predicate acts
on the row space of a matrix through explicit coordinate maps, so it can
serve as ground truth for the algebraic predicates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import CapExceeded
from .gf import FieldSpec
from .grouptalg import GroupAlgebraElement
from .matrix import MatrixF, all_words, mat_nullspace, mat_rref, matmul, reduce_against, rref_array

__all__ = [
    "mat_rref",
    "mat_nullspace",
    "span_matrix",
    "oracle_self_dual",
    "oracle_shift_invariant",
    "oracle_y_closed",
    "oracle_ytilde_closed",
    "oracle_double_circulant",
    "oracle_min_distance",
    "oracle_report",
    "OracleReport",
    "shift_map",
    "y_map",
    "ytilde_map",
]

MIN_DISTANCE_CAP = 2**20


def span_matrix(F: FieldSpec, n: int, gens: Sequence[tuple[GroupAlgebraElement, GroupAlgebraElement]]) -> MatrixF:
    """Rows x^k (a, b) for every generator and every shift k; spans the FH-module of ``gens``."""
    rows = []
    for a, b in gens:
        va, vb = np.array(a.values, dtype=np.int64), np.array(b.values, dtype=np.int64)
        for k in range(n):
            rows.append(np.concatenate([np.roll(va, k), np.roll(vb, k)]))
    if not rows:
        return MatrixF.zeros(F, 0, 2 * n)
    return MatrixF(F, np.array(rows, dtype=np.int64))


def _bar_cols(n: int) -> np.ndarray:
    return (-np.arange(n)) % n


def shift_map(W: np.ndarray, n: int) -> np.ndarray:
    return np.hstack([np.roll(W[:, :n], 1, axis=1), np.roll(W[:, n:], 1, axis=1)])


def y_map(W: np.ndarray, n: int) -> np.ndarray:
    """(a, b) -> (bar b, bar a)."""
    idx = _bar_cols(n)
    return np.hstack([W[:, n:][:, idx], W[:, :n][:, idx]])


def ytilde_map(F: FieldSpec, W: np.ndarray, n: int) -> np.ndarray:
    """(a, b) -> (-bar b, bar a)."""
    idx = _bar_cols(n)
    return np.hstack([F.vneg(W[:, n:][:, idx]), W[:, :n][:, idx]])


def _reduced(G: MatrixF, n: int) -> tuple[np.ndarray, list[int]]:
    if G.cols != 2 * n:
        raise ValueError(f"expected {2 * n} columns, got {G.cols}")
    return rref_array(G.spec, G.entries)


def _closed(F: FieldSpec, R: np.ndarray, pivots: list[int], image) -> bool:
    if not pivots:
        return True
    return not reduce_against(F, R, pivots, image(R[: len(pivots)])).any()


def _self_dual(F: FieldSpec, R: np.ndarray, pivots: list[int], n: int) -> bool:
    if len(pivots) != n:
        return False
    B = R[:n]
    return not matmul(F, B, B.T).any()


def _double_circulant(F: FieldSpec, R: np.ndarray, pivots: list[int], n: int) -> GroupAlgebraElement | None:
    if pivots != list(range(n)):
        return None
    right = R[:n, n:]
    idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    if not np.array_equal(right, right[0][idx]):
        return None
    return GroupAlgebraElement(F, n, tuple(int(v) for v in right[0]))


def oracle_self_dual(G: MatrixF, n: int) -> bool:
    """rank n and G G^T = 0."""
    R, pivots = _reduced(G, n)
    return _self_dual(G.spec, R, pivots, n)


def oracle_shift_invariant(G: MatrixF, n: int) -> bool:
    R, pivots = _reduced(G, n)
    return _closed(G.spec, R, pivots, lambda W: shift_map(W, n))


def oracle_y_closed(G: MatrixF, n: int) -> bool:
    R, pivots = _reduced(G, n)
    return _closed(G.spec, R, pivots, lambda W: y_map(W, n))


def oracle_ytilde_closed(G: MatrixF, n: int) -> bool:
    R, pivots = _reduced(G, n)
    return _closed(G.spec, R, pivots, lambda W: ytilde_map(G.spec, W, n))


def oracle_double_circulant(G: MatrixF, n: int) -> GroupAlgebraElement | None:
    """a(x) when the code has a generator matrix (I | circulant a(P)), else None."""
    R, pivots = _reduced(G, n)
    return _double_circulant(G.spec, R, pivots, n)


@dataclass(frozen=True)
class OracleReport:
    rank: int
    shift_invariant: bool
    self_dual: bool
    y_closed: bool
    ytilde_closed: bool
    double_circulant: GroupAlgebraElement | None


def oracle_report(G: MatrixF, n: int) -> OracleReport:
    """All matrix-level checks from a single row reduction."""
    F = G.spec
    R, pivots = _reduced(G, n)
    return OracleReport(
        rank=len(pivots),
        shift_invariant=_closed(F, R, pivots, lambda W: shift_map(W, n)),
        self_dual=_self_dual(F, R, pivots, n),
        y_closed=_closed(F, R, pivots, lambda W: y_map(W, n)),
        ytilde_closed=_closed(F, R, pivots, lambda W: ytilde_map(F, W, n)),
        double_circulant=_double_circulant(F, R, pivots, n),
    )


def oracle_min_distance(G: MatrixF, cap: int = MIN_DISTANCE_CAP) -> int:
    """Minimum nonzero Hamming weight by walking the whole span; 0 for the zero code."""
    F = G.spec
    R, pivots = rref_array(F, G.entries)
    k = len(pivots)
    if F.q**k > cap:
        raise CapExceeded(f"{F.q}^{k} codewords exceed cap {cap}")
    if k == 0:
        return 0
    words = all_words(F, R[:k], cap)
    weights = np.count_nonzero(words, axis=1)
    return int(weights[weights > 0].min())
