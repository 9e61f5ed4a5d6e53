"""Hamiltonian functionals, their Poisson brackets and the conserved quantities."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from loguru import logger

from hierarchy_forge.diffpoly import (
    DiffPoly,
    FlowVector,
    ParamSymbol,
    euler_derivative,
    int_x,
    integrate_over_unit_interval,
    reduce_modulo_derivatives,
    scale_fields,
)
from hierarchy_forge.exceptions import BadModel, DimensionMismatch
from hierarchy_forge.hamiltonian.operators import recursion_flow, recursion_operator
from hierarchy_forge.spectral import ModelKind, coupled_model

if TYPE_CHECKING:  # pragma: no cover
    from hierarchy_forge.diffpoly import OperatorExpr
    from hierarchy_forge.hierarchy import RecursionTable
    from hierarchy_forge.spectral import SpectralModel

SCALE_SYMBOL = ParamSymbol("scale")


def hamiltonian_scaling(order: int) -> DiffPoly:
    """``1 / (2 (2m + 1))``."""
    return DiffPoly.one() / (2 * (2 * order + 1))


@dataclass(frozen=True)
class HamiltonianFunctional:
    """
    The functional ``H = integral of density dx``. For functionals read from a
    recursion table ``order`` is ``m`` in ``H_{m+1} = c_{m+1} / (2 (2m + 1))``.
    """

    order: int
    density: DiffPoly
    components: int
    block: int = 1

    @classmethod
    def from_table(cls, table: RecursionTable, order: int, block: int = 1) -> HamiltonianFunctional:
        density = hamiltonian_scaling(order) * table.c(block, order + 1)
        return cls(
            order=order,
            density=reduce_modulo_derivatives(density),
            components=table.model.n_components,
            block=block,
        )

    def gradient(self) -> FlowVector:
        return FlowVector(
            tuple(euler_derivative(self.density, j) for j in range(1, self.components + 1)),
        )


def poisson_bracket(
    left: HamiltonianFunctional,
    right: HamiltonianFunctional,
    operator: OperatorExpr,
) -> DiffPoly:
    """
    Integrand of ``{F, G} = integral of grad(F) . J grad(G) dx``, reduced modulo
    exact x-derivatives. The bracket vanishes exactly when the result is zero.
    """
    if left.components != operator.size or right.components != operator.size:
        msg = (
            f"Functionals of {left.components} and {right.components} components do not "
            f"match an operator of size {operator.size}."
        )
        raise DimensionMismatch(msg)
    integrand = left.gradient().pairing(operator.apply(right.gradient()))
    return reduce_modulo_derivatives(integrand)


def _pairing_weights(model: SpectralModel, *, weighted: bool) -> tuple[DiffPoly, ...]:
    if not weighted:
        return (DiffPoly.one(),) * model.n_components
    if model.kind is not ModelKind.COUPLED:
        msg = "The epsilon-weighted pairing is defined for the coupled model only."
        raise BadModel(msg)
    return DiffPoly.one(), model.epsilon


def conserved_quantity(
    order: int,
    model: SpectralModel | None = None,
    *,
    weighted: bool = False,
) -> HamiltonianFunctional:
    """
    The density of ``I_m = integral over s in [0, 1] of <Dinv K_m(s u), u>``.

    ``weighted`` pairs with ``a_1 b_1 + eps a_2 b_2`` instead of the plain sum; the
    plain pairing gives the published densities, which are conserved only at
    ``eps = 1``.
    """
    model = model or coupled_model(alpha1=1, alpha2=0, isospectral=True)
    if model.kind is ModelKind.MULTI or not model.isospectral:
        msg = f"Conserved quantities are built for the isospectral scalar and coupled models, not {model.label}."
        raise BadModel(msg)
    weights = _pairing_weights(model, weighted=weighted)
    flow = recursion_flow(model, order, recursion_operator(model))
    integrand = DiffPoly()
    for component, (entry, weight) in enumerate(zip(flow, weights), start=1):
        lifted = int_x(scale_fields(entry, SCALE_SYMBOL))
        integrand = integrand + weight * lifted * DiffPoly.jet(component)
    density = reduce_modulo_derivatives(integrate_over_unit_interval(integrand, SCALE_SYMBOL))
    logger.debug("Conserved density I_{} of {}: {}", order, model.label, density)
    return HamiltonianFunctional(order=order, density=density, components=model.n_components)
