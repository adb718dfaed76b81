"""Finite workbench for implicative-orthomodular algebras and their relatives."""

from .algebra import (
    MAX_ELEMENTS,
    AlgebraError,
    ConsistencyError,
    DerivedTables,
    FiniteAlgebra,
    InvolutionError,
    build_derived,
    odot_power,
    validate,
)
from .fixtures import B2, E5, TRIVIAL

__all__ = [
    "MAX_ELEMENTS",
    "AlgebraError",
    "ConsistencyError",
    "DerivedTables",
    "FiniteAlgebra",
    "InvolutionError",
    "build_derived",
    "odot_power",
    "validate",
    "B2",
    "E5",
    "TRIVIAL",
]
