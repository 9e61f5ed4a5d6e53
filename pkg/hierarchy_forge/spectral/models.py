"""
The three nonisospectral models and their parameters.

Every model is sl(2) tensored with the block ring ``Q[S]/(S^N - eps_eff)``: the
scalar model has one block, the coupled model two blocks with ``eps_eff = eps`` and
the multi-component model N blocks with ``eps_eff = sigma * eps``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING

from sympy import Basic

from hierarchy_forge.diffpoly import DiffPoly, ParamSymbol, TimeSymbol, normalize
from hierarchy_forge.diffpoly.polynomial import as_diffpoly
from hierarchy_forge.exceptions import BadModel
from hierarchy_forge.liealg import LieCase

if TYPE_CHECKING:  # pragma: no cover
    from hierarchy_forge.diffpoly.polynomial import Scalar

    ParameterValue = DiffPoly | Scalar | Basic

EPSILON_SYMBOL = ParamSymbol("epsilon")
SIGMA_SYMBOL = ParamSymbol("sigma")


class ModelKind(str, Enum):
    KDV = "kdv"
    COUPLED = "coupled"
    MULTI = "multi"

    @classmethod
    def parse(cls, value: ModelKind | str) -> ModelKind:
        if isinstance(value, ModelKind):
            return value
        name = value.strip().lower()
        if name == "scalar":
            return cls.KDV
        try:
            return cls(name)
        except ValueError:
            known = ", ".join(kind.value for kind in cls)
            msg = f"Unknown model {value!r}; expected one of {known}."
            raise BadModel(msg) from None


class SeedProfile(str, Enum):
    """How the multi-component seeds ``c_{k,0}`` are chosen."""

    LEADING = "leading"
    UNIFORM = "uniform"

    @classmethod
    def parse(cls, value: SeedProfile | str) -> SeedProfile:
        if isinstance(value, SeedProfile):
            return value
        try:
            return cls(value.strip().lower())
        except ValueError:
            msg = f"Unknown seed profile {value!r}; expected 'leading' or 'uniform'."
            raise BadModel(msg) from None


def _parameter(value: ParameterValue) -> DiffPoly:
    if isinstance(value, (str, Basic)):
        poly = normalize(value)
    else:
        poly = as_diffpoly(value)
    if not poly.is_scalar():
        msg = f"Model parameters must be constants or parameter symbols, got {poly}."
        raise BadModel(msg)
    return poly


@dataclass(frozen=True)
class SpectralModel:
    kind: ModelKind
    n_components: int
    seeds: tuple[DiffPoly, ...]
    epsilon: DiffPoly
    sigma: DiffPoly
    isospectral: bool = False
    seed_profile: SeedProfile | None = None

    def __post_init__(self) -> None:
        expected = {ModelKind.KDV: 1, ModelKind.COUPLED: 2}.get(self.kind)
        if expected is not None and self.n_components != expected:
            msg = f"The {self.kind.value} model has {expected} component(s), got N={self.n_components}."
            raise BadModel(msg)
        if self.n_components < 1:
            msg = f"The number of components must be positive, got N={self.n_components}."
            raise BadModel(msg)
        if len(self.seeds) != self.n_components:
            msg = f"Expected {self.n_components} seed constant(s), got {len(self.seeds)}."
            raise BadModel(msg)
        for value in (*self.seeds, self.epsilon, self.sigma):
            if not value.is_scalar():
                msg = f"Model parameters must be scalar, got {value}."
                raise BadModel(msg)

    @property
    def epsilon_effective(self) -> DiffPoly:
        """The constant ``S^N`` reduces to in the block ring."""
        if self.kind is ModelKind.MULTI:
            return self.sigma * self.epsilon
        if self.kind is ModelKind.COUPLED:
            return self.epsilon
        return DiffPoly.one()

    @property
    def lie_case(self) -> LieCase:
        return LieCase.A12 if self.kind is ModelKind.COUPLED else LieCase.A1N

    @property
    def label(self) -> str:
        if self.kind is ModelKind.MULTI:
            return f"multi(N={self.n_components})"
        return self.kind.value

    def time_coefficient(self, m: int, order: int = 0) -> DiffPoly:
        """``k_m(t)`` or its t-derivatives; zero for the isospectral variant."""
        if self.isospectral:
            return DiffPoly()
        return DiffPoly.from_generator(TimeSymbol(m, order))

    def with_isospectral(self, isospectral: bool = True) -> SpectralModel:
        return SpectralModel(
            kind=self.kind,
            n_components=self.n_components,
            seeds=self.seeds,
            epsilon=self.epsilon,
            sigma=self.sigma,
            isospectral=isospectral,
            seed_profile=self.seed_profile,
        )


def kdv_model(alpha: ParameterValue = "alpha", *, isospectral: bool = False) -> SpectralModel:
    return SpectralModel(
        kind=ModelKind.KDV,
        n_components=1,
        seeds=(_parameter(alpha),),
        epsilon=DiffPoly.from_generator(EPSILON_SYMBOL),
        sigma=DiffPoly.one(),
        isospectral=isospectral,
    )


def coupled_model(
    alpha1: ParameterValue = "alpha1",
    alpha2: ParameterValue = "alpha2",
    epsilon: ParameterValue = "epsilon",
    *,
    isospectral: bool = False,
) -> SpectralModel:
    return SpectralModel(
        kind=ModelKind.COUPLED,
        n_components=2,
        seeds=(_parameter(alpha1), _parameter(alpha2)),
        epsilon=_parameter(epsilon),
        sigma=DiffPoly.one(),
        isospectral=isospectral,
    )


def multi_model(
    n_components: int,
    beta1: ParameterValue = "beta1",
    sigma: ParameterValue = "sigma",
    epsilon: ParameterValue = "epsilon",
    *,
    profile: SeedProfile | str = SeedProfile.LEADING,
    isospectral: bool = False,
) -> SpectralModel:
    if n_components < 1:
        msg = f"The number of components must be positive, got N={n_components}."
        raise BadModel(msg)
    profile = SeedProfile.parse(profile)
    beta = _parameter(beta1)
    if profile is SeedProfile.LEADING:
        seeds = (beta,) + (DiffPoly(),) * (n_components - 1)
    else:
        seeds = (beta,) * n_components
    return SpectralModel(
        kind=ModelKind.MULTI,
        n_components=n_components,
        seeds=seeds,
        epsilon=_parameter(epsilon),
        sigma=_parameter(sigma),
        isospectral=isospectral,
        seed_profile=profile,
    )


def build_model(
    kind: ModelKind | str,
    n_components: int | None = None,
    *,
    parameters: dict[str, ParameterValue] | None = None,
    isospectral: bool = False,
    profile: SeedProfile | str = SeedProfile.LEADING,
) -> SpectralModel:
    """Build a model from a tag, mapping unknown parameter names to ``BadModel``."""
    kind = ModelKind.parse(kind)
    parameters = dict(parameters or {})
    allowed = {
        ModelKind.KDV: {"alpha"},
        ModelKind.COUPLED: {"alpha1", "alpha2", "epsilon"},
        ModelKind.MULTI: {"beta1", "sigma", "epsilon"},
    }[kind]
    unknown = sorted(set(parameters) - allowed)
    if unknown:
        msg = f"Unknown parameter(s) for the {kind.value} model: {', '.join(unknown)}."
        raise BadModel(msg)
    if kind is ModelKind.KDV:
        if n_components not in (None, 1):
            msg = f"The kdv model has one component, got N={n_components}."
            raise BadModel(msg)
        return kdv_model(isospectral=isospectral, **parameters)
    if kind is ModelKind.COUPLED:
        if n_components not in (None, 2):
            msg = f"The coupled model has two components, got N={n_components}."
            raise BadModel(msg)
        return coupled_model(isospectral=isospectral, **parameters)
    if n_components is None:
        msg = "The multi model needs an explicit number of components."
        raise BadModel(msg)
    return multi_model(n_components, isospectral=isospectral, profile=profile, **parameters)
