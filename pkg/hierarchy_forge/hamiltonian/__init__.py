from hierarchy_forge.hamiltonian.functionals import (
    SCALE_SYMBOL,
    HamiltonianFunctional,
    conserved_quantity,
    hamiltonian_scaling,
    poisson_bracket,
)
from hierarchy_forge.hamiltonian.operators import (
    OperatorFamily,
    OperatorTriple,
    adjoint_recursion_operator,
    build_operators,
    half_derivative,
    reciprocal,
    recursion_flow,
    recursion_operator,
    ring_operator,
    seed_flow,
)
from hierarchy_forge.hamiltonian.verification import (
    PUBLISHED_CONSERVED_DENSITIES,
    IdentityCheck,
    IdentityReport,
    conserved_covariance_residual,
    flows_agree,
    operators_agree,
    record_check,
    verify_conserved_quantities,
    verify_gradient_relation,
    verify_operator_identities,
    verify_poisson_brackets,
)

__all__ = [
    # Operators
    "OperatorFamily",
    "OperatorTriple",
    "build_operators",
    "ring_operator",
    "recursion_operator",
    "adjoint_recursion_operator",
    "half_derivative",
    "reciprocal",
    "seed_flow",
    "recursion_flow",
    # Functionals
    "SCALE_SYMBOL",
    "HamiltonianFunctional",
    "hamiltonian_scaling",
    "poisson_bracket",
    "conserved_quantity",
    # Checks
    "IdentityCheck",
    "IdentityReport",
    "flows_agree",
    "operators_agree",
    "record_check",
    "verify_gradient_relation",
    "verify_operator_identities",
    "verify_poisson_brackets",
    "verify_conserved_quantities",
    "conserved_covariance_residual",
    "PUBLISHED_CONSERVED_DENSITIES",
]
