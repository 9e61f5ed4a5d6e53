from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Mapping, Union

from frozendict import frozendict
from loguru import logger
from sympy import Basic

from hierarchy_forge.diffpoly import (
    DiffPoly,
    FlowVector,
    JetVariable,
    ParamSymbol,
    is_semantically_zero,
    kill_time_coefficients,
    normalize,
    substitute,
)
from hierarchy_forge.diffpoly.parsing import PARAMETER_ALIASES
from hierarchy_forge.diffpoly.polynomial import as_diffpoly
from hierarchy_forge.exceptions import BadSpec, MalformedExpression
from hierarchy_forge.hierarchy.equations import HierarchyEquation

if TYPE_CHECKING:  # pragma: no cover
    from hierarchy_forge.diffpoly.generators import Generator

BindingValue = Union[DiffPoly, int, str, Basic]

MODEL_PARAMETERS = frozenset({"alpha", "alpha1", "alpha2", "beta1", "sigma", "epsilon"})


@dataclass(frozen=True)
class ReductionSpec:
    """
    A reduction of a hierarchy equation: drop the spectral drift, bind parameters
    to constants or other parameters, and keep only the first components.
    """

    isospectral: bool = False
    bindings: frozendict[str, BindingValue] = field(default_factory=frozendict)
    keep_components: int | None = None

    @classmethod
    def build(
        cls,
        *,
        isospectral: bool = False,
        bindings: Mapping[str, BindingValue] | None = None,
        keep_components: int | None = None,
    ) -> ReductionSpec:
        return cls(isospectral, frozendict(bindings or {}), keep_components)


def _binding_map(equation: HierarchyEquation, spec: ReductionSpec) -> dict[Generator, DiffPoly]:
    present = {
        generator.name
        for value in equation.rhs
        for generator in value.generators()
        if isinstance(generator, ParamSymbol)
    }
    known = present | MODEL_PARAMETERS
    mapping: dict[Generator, DiffPoly] = {}
    for raw_name, value in spec.bindings.items():
        name = PARAMETER_ALIASES.get(raw_name, raw_name)
        if name not in known:
            msg = f"Unknown parameter {raw_name!r}; the equation uses {', '.join(sorted(present)) or 'none'}."
            raise BadSpec(msg)
        try:
            image = normalize(value) if isinstance(value, (str, Basic)) else as_diffpoly(value)
        except MalformedExpression as error:
            msg = f"Cannot bind {raw_name!r}: {error}"
            raise BadSpec(msg) from None
        if not image.is_scalar():
            msg = f"Parameter {raw_name!r} can only be bound to a scalar, got {image}."
            raise BadSpec(msg)
        mapping[ParamSymbol(name)] = image
    return mapping


def reduce(equation: HierarchyEquation, spec: ReductionSpec) -> HierarchyEquation:
    """
    Apply ``spec`` to ``equation``. Dropped components are set to zero; their own
    right-hand sides must then vanish, otherwise the reduction is inconsistent.
    """
    dimension = equation.rhs.dimension
    keep = dimension if spec.keep_components is None else spec.keep_components
    if not 1 <= keep <= dimension:
        msg = f"Cannot keep {keep} components of a {dimension}-component equation."
        raise BadSpec(msg)
    mapping: dict[Generator, DiffPoly] = dict(_binding_map(equation, spec))
    for component in range(keep + 1, dimension + 1):
        mapping[JetVariable(component, 0)] = DiffPoly()

    values = []
    for value in equation.rhs:
        reduced = substitute(value, mapping) if mapping else value
        if spec.isospectral:
            reduced = kill_time_coefficients(reduced)
        values.append(reduced)

    for component in range(keep + 1, dimension + 1):
        if not is_semantically_zero(values[component - 1]):
            msg = (
                f"Dropping u{component} is inconsistent: its flow reduces to "
                f"{values[component - 1]} instead of 0."
            )
            raise BadSpec(msg)

    logger.debug("Reduced {} order {} flow with {}", equation.model.label, equation.order, spec)
    return HierarchyEquation(
        model=equation.model,
        order=equation.order,
        rhs=FlowVector(tuple(values[:keep])),
        table=equation.table,
        reduction=spec,
    )
