from hierarchy_forge.hierarchy.equations import (
    HierarchyEquation,
    equation_from_table,
    hierarchy_equation,
    modification_term,
    v_matrix,
)
from hierarchy_forge.hierarchy.known_values import (
    COUPLED_COEFFICIENTS,
    MULTI_LEADING_COEFFICIENTS,
    MULTI_UNIFORM_COEFFICIENTS,
    NAMED_EQUATIONS,
    SCALAR_COEFFICIENTS,
    CoefficientComparison,
    NamedEquation,
    PrintedCoefficient,
    compare_with_printed,
    named_equation,
    printed_coefficients,
)
from hierarchy_forge.hierarchy.recursion import RecursionTable, ring_for, solve_recursion
from hierarchy_forge.hierarchy.reduction import ReductionSpec, reduce
from hierarchy_forge.hierarchy.ring import BlockRing, RingElement
from hierarchy_forge.hierarchy.zero_curvature import (
    DriftMode,
    LaxPair,
    ZeroCurvatureReport,
    frobenius_lax_pair,
    verify_lax_pair,
    verify_stationary,
    verify_zero_curvature,
    zero_curvature_residual,
)

__all__ = [
    # Recursion
    "BlockRing",
    "RingElement",
    "RecursionTable",
    "ring_for",
    "solve_recursion",
    # Equations
    "HierarchyEquation",
    "hierarchy_equation",
    "equation_from_table",
    "modification_term",
    "v_matrix",
    # Zero curvature
    "DriftMode",
    "ZeroCurvatureReport",
    "zero_curvature_residual",
    "verify_zero_curvature",
    "verify_stationary",
    "LaxPair",
    "frobenius_lax_pair",
    "verify_lax_pair",
    # Reductions
    "ReductionSpec",
    "reduce",
    # Published values
    "PrintedCoefficient",
    "CoefficientComparison",
    "SCALAR_COEFFICIENTS",
    "COUPLED_COEFFICIENTS",
    "MULTI_UNIFORM_COEFFICIENTS",
    "MULTI_LEADING_COEFFICIENTS",
    "printed_coefficients",
    "compare_with_printed",
    "NamedEquation",
    "NAMED_EQUATIONS",
    "named_equation",
]
