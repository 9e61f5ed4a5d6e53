from hierarchy_forge.liealg.base_algebras import (
    EPSILON,
    SL2,
    SL2_SYMMETRIC,
    SO3,
    BaseAlgebra,
)
from hierarchy_forge.liealg.basis import LieBasis, LieCase, build_basis
from hierarchy_forge.liealg.embedding import block_embed, commutator
from hierarchy_forge.liealg.printed_tables import (
    PRINTED_INDEXED_FAMILIES,
    PRINTED_TABLES,
    printed_expectation,
)
from hierarchy_forge.liealg.structure import (
    JacobiReport,
    StructureEntry,
    StructureReport,
    expand_in_basis,
    predicted_bracket,
    structure_constants,
    verify_grading,
    verify_jacobi,
    verify_structure_constants,
)

__all__ = [
    # Base algebras
    "EPSILON",
    "BaseAlgebra",
    "SL2",
    "SL2_SYMMETRIC",
    "SO3",
    # Extended algebras
    "LieCase",
    "LieBasis",
    "build_basis",
    "block_embed",
    "commutator",
    # Published data
    "PRINTED_TABLES",
    "PRINTED_INDEXED_FAMILIES",
    "printed_expectation",
    # Structure checks
    "StructureEntry",
    "StructureReport",
    "JacobiReport",
    "expand_in_basis",
    "predicted_bracket",
    "structure_constants",
    "verify_structure_constants",
    "verify_grading",
    "verify_jacobi",
]
