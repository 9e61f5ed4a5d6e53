from hierarchy_forge.diffpoly.calculus import (
    d_t,
    d_x,
    euler_derivative,
    gateaux_poly,
    int_x,
    integrate_by_parts,
    integrate_over_unit_interval,
    kill_time_coefficients,
    partial,
    reduce_modulo_derivatives,
    scale_fields,
    substitute,
    total_time_derivative,
)
from hierarchy_forge.diffpoly.equivalence import (
    EquivalenceOptions,
    SemanticComparer,
    all_equivalent,
    equivalent,
    is_semantically_zero,
    is_total_derivative,
)
from hierarchy_forge.diffpoly.flow_vector import (
    FlowVector,
    d_t_flow,
    d_x_flow,
    gateaux,
)
from hierarchy_forge.diffpoly.formatting import format_latex, format_text
from hierarchy_forge.diffpoly.generators import (
    LAMBDA,
    EMPTY_MONOMIAL,
    T,
    X,
    AntiDeriv,
    JetVariable,
    ParamSymbol,
    SpaceVariable,
    SpectralParameter,
    TimeSymbol,
    TimeVariable,
)
from hierarchy_forge.diffpoly.operators import (
    OperatorEntry,
    OperatorExpr,
    adjoint,
    apply_operator,
    frechet_operator,
    linearization_entry,
)
from hierarchy_forge.diffpoly.parsing import normalize
from hierarchy_forge.diffpoly.polynomial import DiffPoly
from hierarchy_forge.diffpoly.sampling import random_test_vectors

__all__ = [
    # Ring and generators
    "DiffPoly",
    "ParamSymbol",
    "TimeSymbol",
    "TimeVariable",
    "SpectralParameter",
    "SpaceVariable",
    "JetVariable",
    "AntiDeriv",
    "X",
    "T",
    "LAMBDA",
    "EMPTY_MONOMIAL",
    # Parsing and rendering
    "normalize",
    "format_text",
    "format_latex",
    # Calculus
    "d_x",
    "d_t",
    "int_x",
    "integrate_by_parts",
    "reduce_modulo_derivatives",
    "partial",
    "euler_derivative",
    "gateaux_poly",
    "total_time_derivative",
    "substitute",
    "kill_time_coefficients",
    "scale_fields",
    "integrate_over_unit_interval",
    # Equivalence
    "EquivalenceOptions",
    "SemanticComparer",
    "equivalent",
    "all_equivalent",
    "is_semantically_zero",
    "is_total_derivative",
    # Flows and operators
    "FlowVector",
    "gateaux",
    "d_x_flow",
    "d_t_flow",
    "OperatorEntry",
    "OperatorExpr",
    "adjoint",
    "apply_operator",
    "frechet_operator",
    "linearization_entry",
    # Test data
    "random_test_vectors",
]
