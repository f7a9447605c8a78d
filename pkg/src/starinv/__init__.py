"""Exact generalized inverses for matrices of double star digraphs.

The package has two independent routes to every inverse it computes:
closed-form block formulas driven by a handful of structural scalars
(:mod:`starinv.doublestar`), and definition-driven constructions that work
for arbitrary square matrices over the supported fields
(:mod:`starinv.oracle`). The test suite insists the two routes agree.
"""

from .field import (
    FieldBase,
    FieldMode,
    GAUSSIAN_CONJUGATION,
    GAUSSIAN_IDENTITY,
    Involution,
    RATIONAL,
    Scalar,
    parse_scalar,
    scalar,
)
from .matrix import DimensionMismatch, Matrix, Permutation, ZeroMatrixError, perm_similar
from .doublestar import (
    CaseKind,
    CaseLabel,
    DoubleStarSpec,
    InvalidSpecError,
    InverseKind,
    InverseReport,
    Orientation,
    StructuralScalars,
    build,
    classify,
    closed_form,
    existence_table,
    mirror,
    projectors,
    structural_scalars,
    to_dot,
)

__version__ = "0.1.0"

__all__ = [
    "FieldBase",
    "FieldMode",
    "Involution",
    "RATIONAL",
    "GAUSSIAN_IDENTITY",
    "GAUSSIAN_CONJUGATION",
    "Scalar",
    "scalar",
    "parse_scalar",
    "Matrix",
    "Permutation",
    "perm_similar",
    "DimensionMismatch",
    "ZeroMatrixError",
    "CaseKind",
    "CaseLabel",
    "DoubleStarSpec",
    "InvalidSpecError",
    "InverseKind",
    "InverseReport",
    "Orientation",
    "StructuralScalars",
    "build",
    "classify",
    "closed_form",
    "existence_table",
    "mirror",
    "projectors",
    "structural_scalars",
    "to_dot",
    "__version__",
]
