"""Dense matrices over F_q with exact Gauss-Jordan elimination."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import CapExceeded, SpecMismatch
from .gf import FieldElement, FieldSpec


@dataclass(frozen=True, eq=False)
class MatrixF:
    """A rows x cols matrix of encoded field elements (int64 numpy array)."""

    spec: FieldSpec
    entries: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        a = np.asarray(self.entries, dtype=np.int64)
        if a.size == 0 and a.ndim != 2:
            a = np.zeros((0, 0), dtype=np.int64)
        if a.ndim != 2:
            raise ValueError(f"expected a 2-d array, got shape {a.shape}")
        if a.size and (a.min() < 0 or a.max() >= self.spec.q):
            raise ValueError("matrix entries out of range")
        object.__setattr__(self, "entries", a)

    @classmethod
    def zeros(cls, spec: FieldSpec, rows: int, cols: int) -> MatrixF:
        return cls(spec, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> MatrixF:
        return cls(spec, np.eye(n, dtype=np.int64))

    @classmethod
    def from_rows(cls, spec: FieldSpec, rows: Sequence[Sequence[int | FieldElement]], cols: int | None = None) -> MatrixF:
        data = [[x.value if isinstance(x, FieldElement) else int(x) for x in row] for row in rows]
        if not data:
            return cls.zeros(spec, 0, cols or 0)
        return cls(spec, np.array(data, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def __getitem__(self, idx) -> FieldElement:
        i, j = idx
        return FieldElement(self.spec, int(self.entries[i, j]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixF):
            return NotImplemented
        return self.spec == other.spec and self.shape == other.shape and bool(np.array_equal(self.entries, other.entries))

    def __hash__(self) -> int:
        return hash((self.spec, self.shape, self.entries.tobytes()))

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()

    @property
    def T(self) -> MatrixF:
        return MatrixF(self.spec, self.entries.T.copy())

    def _same(self, other: MatrixF) -> None:
        if other.spec != self.spec:
            raise SpecMismatch(f"{self.spec!r} vs {other.spec!r}")

    def __add__(self, other: MatrixF) -> MatrixF:
        self._same(other)
        return MatrixF(self.spec, self.spec.vadd(self.entries, other.entries))

    def __matmul__(self, other: MatrixF) -> MatrixF:
        self._same(other)
        return MatrixF(self.spec, matmul(self.spec, self.entries, other.entries))

    def hstack(self, other: MatrixF) -> MatrixF:
        self._same(other)
        return MatrixF(self.spec, np.hstack([self.entries, other.entries]))

    def vstack(self, other: MatrixF) -> MatrixF:
        self._same(other)
        return MatrixF(self.spec, np.vstack([self.entries, other.entries]))

    def is_zero(self) -> bool:
        return not self.entries.any()

    def format(self) -> str:
        cells = [[self.spec.format(int(v)) for v in row] for row in self.entries]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def matmul(F: FieldSpec, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"shape mismatch {A.shape} @ {B.shape}")
    if F.m == 1:
        # entries < p <= 2^16 and inner dimension is small, so int64 cannot overflow
        return (A @ B) % F.p
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for k in range(A.shape[1]):
        out = F.vadd(out, F.vmul(A[:, k, None], B[None, k, :]))
    return out


def rref_array(F: FieldSpec, M: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Gauss-Jordan on a copy of ``M``; leftmost column, topmost row pivoting.

    Returns the reduced matrix (same shape, zero rows last) and pivot columns.
    """
    A = np.array(M, dtype=np.int64, copy=True)
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        lead = int(A[r, c])
        if lead != 1:
            A[r] = F.vmul(A[r], F.inv(lead))
        col = A[:, c].copy()
        col[r] = 0
        others = np.flatnonzero(col)
        if others.size:
            A[others] = F.vsub(A[others], F.vmul(col[others, None], A[r][None, :]))
        pivots.append(c)
        r += 1
    return A, pivots


def reduce_against(F: FieldSpec, R: np.ndarray, pivots: Sequence[int], V: np.ndarray) -> np.ndarray:
    """Residues of the rows of ``V`` modulo the row space of an rref ``R``."""
    V = np.array(V, dtype=np.int64, copy=True)
    if V.ndim == 1:
        V = V[None, :]
    for i, c in enumerate(pivots):
        coef = V[:, c].copy()
        if coef.any():
            V = F.vsub(V, F.vmul(coef[:, None], R[i][None, :]))
    return V


def mat_rref(M: MatrixF) -> tuple[MatrixF, int]:
    A, pivots = rref_array(M.spec, M.entries)
    return MatrixF(M.spec, A), len(pivots)


def rank(M: MatrixF) -> int:
    return mat_rref(M)[1]


def row_basis(M: MatrixF) -> MatrixF:
    """Canonical basis of the row space: the nonzero rows of the rref."""
    A, pivots = rref_array(M.spec, M.entries)
    return MatrixF(M.spec, A[: len(pivots)])


def mat_nullspace(M: MatrixF) -> MatrixF:
    """Basis (as rows) of ``{v : M v^T = 0}``; one vector per free column."""
    F = M.spec
    A, pivots = rref_array(F, M.entries)
    cols = M.cols
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, c in enumerate(pivots):
            basis[k, c] = F.neg(int(A[i, f]))
    return MatrixF(F, basis)


def same_row_space(A: MatrixF, B: MatrixF) -> bool:
    return row_basis(A) == row_basis(B)


def contains_rows(R: MatrixF, V: MatrixF) -> bool:
    """True iff every row of ``V`` lies in the row space of ``R``.

    Equivalent to rank(R) == rank(R stacked with V); done by reducing
    against the rref so the rank of R is only computed once.
    """
    if V.rows == 0:
        return True
    A, pivots = rref_array(R.spec, R.entries)
    return not reduce_against(R.spec, A, pivots, V.entries).any()


def all_words(F: FieldSpec, basis: np.ndarray, cap: int = 2**20) -> np.ndarray:
    """Every F-linear combination of the rows of ``basis`` (q^k rows)."""
    k, L = basis.shape
    if F.q**k > cap:
        raise CapExceeded(f"{F.q}^{k} codewords exceed cap {cap}")
    words = np.zeros((1, L), dtype=np.int64)
    scalars = np.arange(F.q, dtype=np.int64)
    for row in basis:
        multiples = F.vmul(scalars[:, None], row[None, :])  # q x L
        words = F.vadd(words[None, :, :], multiples[:, None, :]).reshape(-1, L)
    return words


def word_keys(F: FieldSpec, words: np.ndarray) -> np.ndarray:
    """Sorted integer keys identifying a set of words (base-q positional encoding)."""
    L = words.shape[1]
    if L and F.q ** L >= 2**62:
        # too long for int64 keys: fall back to lexicographic row order
        return np.unique(words, axis=0)
    weights = F.q ** np.arange(L, dtype=np.int64)
    return np.unique(words @ weights)


def random_words(F: FieldSpec, basis: np.ndarray, count: int, rng: np.random.Generator) -> np.ndarray:
    k, L = basis.shape
    if k == 0:
        return np.zeros((count, L), dtype=np.int64)
    coefs = rng.integers(0, F.q, size=(count, k))
    return matmul(F, coefs, basis)


def stack(spec: FieldSpec, blocks: Iterable[np.ndarray], cols: int) -> MatrixF:
    blocks = [b for b in blocks if b.size]
    if not blocks:
        return MatrixF.zeros(spec, 0, cols)
    return MatrixF(spec, np.vstack(blocks))
