"""Hand-checkable worked examples over F_4 (n = 3) and F_5 (n = 4).

Idempotents are looked up by their coefficients, so the cases do not
depend on how the basis happens to be ordered.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .gf import field_make
from .goursat import GoursatData
from .grouptalg import GroupAlgebraElement
from .idem import IdempotentBasis, primitive_idempotents
from .matrix import MatrixF
from .text import parse_element, parse_poly

F4_IDEMPOTENTS = {"e0": "1,1,1", "e1": "1,w,w+1", "e1bar": "1,w+1,w"}
F5_IDEMPOTENTS = {"e0": "-1,-1,-1,-1", "e1": "-1,1,-1,1", "e2": "-1,2,1,-2", "e2bar": "-1,-2,1,2"}

# generator matrices of the two F_4 codes, rows as element tokens
F4_MATRIX_1 = ["1 1 1 1 1 1", "1 w w+1 0 0 0", "0 0 0 1 w w+1"]
F4_MATRIX_2 = ["1 1 1 1 1 1", "1 w w+1 0 0 0", "0 0 0 1 w+1 w"]


@dataclass(frozen=True)
class WorkedCase:
    name: str
    data: GoursatData
    expect: dict[str, bool]
    matrix: MatrixF | None = field(default=None, compare=False)


@dataclass(frozen=True)
class WorkedExample:
    name: str
    basis: IdempotentBasis
    idempotents: dict[str, GroupAlgebraElement]
    cases: tuple[WorkedCase, ...]

    def index(self, key: str) -> int:
        return self.basis.index_of(self.idempotents[key])


def _matrix(basis: IdempotentBasis, rows: list[str]) -> MatrixF:
    F = basis.field
    return MatrixF.from_rows(F, [[parse_element(F, t) for t in r.split()] for r in rows])


def _named(basis: IdempotentBasis, table: dict[str, str]) -> dict[str, GroupAlgebraElement]:
    return {k: parse_poly(basis.field, basis.n, v) for k, v in table.items()}


def example_f4() -> WorkedExample:
    """F_4, n = 3: two self-dual codes with the same C12, and a double circulant one."""
    F = field_make(2, 2)
    basis = primitive_idempotents(F, 3)
    E = _named(basis, F4_IDEMPOTENTS)
    i0, i1, i1b = (basis.index_of(E[k]) for k in ("e0", "e1", "e1bar"))
    w = F.element([0, 1]).value
    w2 = F.mul(w, w)
    case1 = WorkedCase(
        "1",
        GoursatData.from_supports(basis, [i1], [i1], [i0], E["e0"]),
        {"self_dual": True, "dihedral": False, "double_circulant": False, "principal": False},
        _matrix(basis, F4_MATRIX_1),
    )
    case2 = WorkedCase(
        "2",
        GoursatData.from_supports(basis, [i1], [i1b], [i0], E["e0"]),
        {"self_dual": True, "dihedral": True, "double_circulant": False, "principal": True},
        _matrix(basis, F4_MATRIX_2),
    )
    # g = alpha e0 + beta e1 + gamma e1bar with alpha^2 = beta gamma = 1
    g = E["e0"] + E["e1"].scale(w) + E["e1bar"].scale(w2)
    case3 = WorkedCase(
        "3",
        GoursatData.from_supports(basis, [], [], [i0, i1, i1b], g),
        {"self_dual": True, "dihedral": True, "double_circulant": True, "principal": True},
    )
    return WorkedExample("example-f4", basis, E, (case1, case2, case3))


def example_f5() -> WorkedExample:
    """F_5, n = 4: self-dual codes that are or are not consta-dihedral."""
    F = field_make(5)
    basis = primitive_idempotents(F, 4)
    E = _named(basis, F5_IDEMPOTENTS)
    i0, i1, i2, i2b = (basis.index_of(E[k]) for k in ("e0", "e1", "e2", "e2bar"))
    e = E["e0"] + E["e1"]
    case1 = WorkedCase(
        "1",
        GoursatData.from_supports(basis, [i2], [i2], [i0, i1], e.scale(2)),
        {"self_dual": True, "consta_dihedral": False, "double_circulant": False},
    )
    case2 = WorkedCase(
        "2",
        GoursatData.from_supports(basis, [i2], [i2b], [i0, i1], e.scale(2)),
        {"self_dual": True, "consta_dihedral": True, "double_circulant": False},
    )
    # alpha^2 = beta^2 = gamma delta = -1
    g = E["e0"].scale(2) + E["e1"].scale(2) + E["e2"].scale(1) + E["e2bar"].scale(4)
    case3 = WorkedCase(
        "3",
        GoursatData.from_supports(basis, [], [], [i0, i1, i2, i2b], g),
        {"self_dual": True, "consta_dihedral": True, "double_circulant": True},
    )
    return WorkedExample("example-f5", basis, E, (case1, case2, case3))
