"""Exact algebra for 2-quasi-cyclic codes over finite fields."""

from .errors import QCDError
from .gf import FieldElement, FieldSpec, field_make
from .grouptalg import GroupAlgebraElement
from .idem import IdempotentBasis, primitive_idempotents
from .cyclic import CyclicCode
from .goursat import GoursatData, QuasiCyclicCode, qc_construct, qc_decompose

__all__ = [
    "QCDError",
    "FieldElement",
    "FieldSpec",
    "field_make",
    "GroupAlgebraElement",
    "IdempotentBasis",
    "primitive_idempotents",
    "CyclicCode",
    "GoursatData",
    "QuasiCyclicCode",
    "qc_construct",
    "qc_decompose",
]
