from hierarchy_forge.diffpoly import DiffPoly, FlowVector, OperatorExpr, normalize
from hierarchy_forge.exceptions import (
    HierarchyForgeError,
    HierarchyForgeRuntimeError,
    HierarchyForgeValueError,
)
from hierarchy_forge.hierarchy import hierarchy_equation, reduce, solve_recursion
from hierarchy_forge.liealg import LieCase, build_basis, verify_structure_constants
from hierarchy_forge.spectral import build_model, coupled_model, kdv_model, multi_model
from hierarchy_forge.verification import VerificationRunner, VerificationSuite

__all__ = [
    # Exceptions
    "HierarchyForgeError",
    "HierarchyForgeValueError",
    "HierarchyForgeRuntimeError",
    # Expressions
    "DiffPoly",
    "FlowVector",
    "OperatorExpr",
    "normalize",
    # Algebras
    "LieCase",
    "build_basis",
    "verify_structure_constants",
    # Models and hierarchies
    "build_model",
    "kdv_model",
    "coupled_model",
    "multi_model",
    "solve_recursion",
    "hierarchy_equation",
    "reduce",
    # Verification
    "VerificationSuite",
    "VerificationRunner",
]
