from hierarchy_forge.symmetry.flows import (
    ConstantMixer,
    CoupledSymmetries,
    SymmetryFlow,
    SymmetryKind,
    coupled_symmetries,
    k_flow,
    lie_bracket,
    tau_flow,
)
from hierarchy_forge.symmetry.verification import (
    DEFAULT_HEREDITARY_SAMPLES,
    verify_algebra,
    verify_hereditary,
    verify_hereditary_samples,
    verify_jacobi,
    verify_strong_symmetry,
    verify_symmetry_equation,
)

__all__ = [
    # Flows
    "ConstantMixer",
    "CoupledSymmetries",
    "SymmetryFlow",
    "SymmetryKind",
    "coupled_symmetries",
    "k_flow",
    "tau_flow",
    "lie_bracket",
    # Checks
    "verify_symmetry_equation",
    "verify_algebra",
    "verify_hereditary",
    "verify_hereditary_samples",
    "verify_strong_symmetry",
    "verify_jacobi",
    "DEFAULT_HEREDITARY_SAMPLES",
]
