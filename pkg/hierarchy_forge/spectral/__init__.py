from hierarchy_forge.spectral.laurent_series import (
    LaurentSeries,
    as_series,
    split_plus_minus,
)
from hierarchy_forge.spectral.matrix_expr import MatrixExpr
from hierarchy_forge.spectral.models import (
    EPSILON_SYMBOL,
    SIGMA_SYMBOL,
    ModelKind,
    SeedProfile,
    SpectralModel,
    build_model,
    coupled_model,
    kdv_model,
    multi_model,
)
from hierarchy_forge.spectral.spectral_pair import SpectralPair, build_spectral_pair

__all__ = [
    # Series arithmetic
    "LaurentSeries",
    "as_series",
    "split_plus_minus",
    "MatrixExpr",
    # Models
    "EPSILON_SYMBOL",
    "SIGMA_SYMBOL",
    "ModelKind",
    "SeedProfile",
    "SpectralModel",
    "build_model",
    "kdv_model",
    "coupled_model",
    "multi_model",
    # Spectral pairs
    "SpectralPair",
    "build_spectral_pair",
]
