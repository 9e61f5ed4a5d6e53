from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import TYPE_CHECKING, Mapping

from frozendict import frozendict

from hierarchy_forge.exceptions import BadModel, HierarchyForgeValueError, OrderExceeded
from hierarchy_forge.spectral import ModelKind, SeedProfile, build_model
from hierarchy_forge.utils.env_var_helpers import MAX_ORDER_ENV_VAR, get_max_order

if TYPE_CHECKING:  # pragma: no cover
    from hierarchy_forge.spectral import SpectralModel


class Command(str, Enum):
    GENERATE = "gen"
    VERIFY = "verify"
    TABLE = "table"


class OutputFormat(str, Enum):
    TEXT = "text"
    LATEX = "latex"
    JSON = "json"


class TimeMode(str, Enum):
    """Whether the drift coefficients ``k_m`` stay symbolic or are set to zero."""

    SYMBOLIC = "symbolic"
    ZERO = "zero"


_FIXED_COMPONENTS = {ModelKind.KDV: 1, ModelKind.COUPLED: 2}


@dataclass(frozen=True)
class JobConfig:
    """
    One CLI job. Build it with ``JobConfig.build`` so the component count is
    filled in for the fixed-size models and the order is checked against
    ``HIERARCHY_FORGE_MAX_ORDER``.
    """

    command: Command
    model: ModelKind = ModelKind.KDV
    n_components: int = 1
    order: int = 1
    bindings: frozendict[str, str] = field(default_factory=frozendict)
    time_mode: TimeMode = TimeMode.SYMBOLIC
    profile: SeedProfile = SeedProfile.LEADING
    output_format: OutputFormat = OutputFormat.TEXT
    out: Path | None = None
    timing: bool = False

    @classmethod
    def build(
        cls,
        command: Command | str,
        *,
        model: ModelKind | str = ModelKind.KDV,
        n_components: int | None = None,
        order: int = 1,
        bindings: Mapping[str, str] | None = None,
        time_mode: TimeMode | str = TimeMode.SYMBOLIC,
        profile: SeedProfile | str = SeedProfile.LEADING,
        output_format: OutputFormat | str = OutputFormat.TEXT,
        out: Path | str | None = None,
        timing: bool = False,
        max_order: int | None = None,
    ) -> JobConfig:
        kind = ModelKind.parse(model)
        fixed = _FIXED_COMPONENTS.get(kind)
        if n_components is None:
            if fixed is None:
                msg = "The multi model needs --N."
                raise BadModel(msg)
            n_components = fixed
        if n_components < 1:
            msg = f"N must be at least 1, got {n_components}."
            raise BadModel(msg)
        if fixed is not None and n_components != fixed:
            msg = f"The {kind.value} model has N={fixed}, got N={n_components}."
            raise BadModel(msg)
        if order < 0:
            msg = f"The order must be nonnegative, got {order}."
            raise HierarchyForgeValueError(msg)
        limit = get_max_order(max_order)
        if order > limit:
            msg = f"Order {order} exceeds the limit {limit} (set {MAX_ORDER_ENV_VAR} to raise it)."
            raise OrderExceeded(msg)
        return cls(
            command=Command(command),
            model=kind,
            n_components=n_components,
            order=order,
            bindings=frozendict(bindings or {}),
            time_mode=TimeMode(time_mode),
            profile=SeedProfile.parse(profile),
            output_format=OutputFormat(output_format),
            out=Path(out) if out is not None else None,
            timing=timing,
        )

    @property
    def isospectral(self) -> bool:
        return self.time_mode is TimeMode.ZERO

    def spectral_model(self) -> SpectralModel:
        return build_model(
            self.model,
            self.n_components,
            parameters=dict(self.bindings),
            isospectral=self.isospectral,
            profile=self.profile,
        )
