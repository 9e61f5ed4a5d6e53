"""
Hamiltonian and recursion operators of the three hierarchies.

Every model shares one recursion operator written in the block ring: the first
column carries

    Phi_1 = D^2 + 4 u_1 + 2 u_1x Dinv,    Phi_m = 4 u_m + 2 u_mx Dinv  (m >= 2)

and the remaining columns follow the ring multiplication, with ``eps_eff`` above the
diagonal. ``L`` is built the same way from ``D^2 + 4 u_1 - 2 Dinv u_1x`` and
``4 u_m - 2 Dinv u_mx``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Sequence

from hierarchy_forge.diffpoly import DiffPoly, FlowVector, OperatorEntry, OperatorExpr
from hierarchy_forge.diffpoly.generators import make_monomial
from hierarchy_forge.exceptions import BadModel
from hierarchy_forge.hierarchy import hierarchy_equation
from hierarchy_forge.spectral import ModelKind

if TYPE_CHECKING:  # pragma: no cover
    from hierarchy_forge.spectral import SpectralModel


class OperatorFamily(str, Enum):
    SCALAR = "scalar"
    COUPLED_1 = "coupled-1"
    COUPLED_2 = "coupled-2"
    MULTI = "multi"


@dataclass(frozen=True)
class OperatorTriple:
    """
    A Hamiltonian pair ``(J, M)`` and the recursion operator with ``M = Phi J``.
    """

    family: OperatorFamily
    J: OperatorExpr  # noqa: N815
    M: OperatorExpr  # noqa: N815
    Phi: OperatorExpr  # noqa: N815

    @property
    def size(self) -> int:
        return self.J.size


def _field(component: int, order: int = 0) -> DiffPoly:
    return DiffPoly.jet(component, order)


def _derivative(order: int = 1) -> OperatorEntry:
    return OperatorEntry.derivative(order)


def _times(value: DiffPoly) -> OperatorEntry:
    return OperatorEntry.multiplication(value)


def _after_inverse(left: DiffPoly) -> OperatorEntry:
    """``left Dinv``."""
    return _times(left) @ OperatorEntry.inverse_derivative()


def _before_inverse(right: DiffPoly) -> OperatorEntry:
    """``Dinv right``."""
    return OperatorEntry.inverse_derivative() @ _times(right)


def _symmetric_product(value: DiffPoly) -> OperatorEntry:
    """``D value + value D``."""
    return _derivative() @ _times(value) + _times(value) @ _derivative()


def reciprocal(value: DiffPoly) -> DiffPoly:
    """Inverse of a single nonzero parameter monomial such as ``epsilon`` or ``2*epsilon``."""
    if len(value.terms) != 1 or not value.is_scalar():
        msg = f"Cannot invert {value}: expected a single nonzero parameter monomial."
        raise BadModel(msg)
    ((monomial, coefficient),) = value.terms.items()
    inverse = make_monomial({generator: -exponent for generator, exponent in monomial})
    return DiffPoly.from_monomial(inverse) / coefficient


def ring_operator(column: Sequence[OperatorEntry], epsilon: DiffPoly) -> OperatorExpr:
    """
    Operator of multiplication by the ring element ``column``: entry (k, j) is
    ``column[k - j]`` on and below the diagonal and ``epsilon * column[N + k - j]``
    above it.
    """
    n = len(column)
    rows = []
    for k in range(n):
        row = []
        for j in range(n):
            if k >= j:
                row.append(column[k - j])
            else:
                row.append(column[n + k - j].scaled(epsilon))
        rows.append(row)
    return OperatorExpr.from_entries(rows)


def recursion_column(n_components: int) -> list[OperatorEntry]:
    column = []
    for m in range(1, n_components + 1):
        entry = _times(_field(m) * 4) + _after_inverse(_field(m, 1) * 2)
        if m == 1:
            entry = _derivative(2) + entry
        column.append(entry)
    return column


def adjoint_recursion_column(n_components: int) -> list[OperatorEntry]:
    column = []
    for m in range(1, n_components + 1):
        entry = _times(_field(m) * 4) - _before_inverse(_field(m, 1) * 2)
        if m == 1:
            entry = _derivative(2) + entry
        column.append(entry)
    return column


def recursion_operator(model: SpectralModel) -> OperatorExpr:
    return ring_operator(recursion_column(model.n_components), model.epsilon_effective)


def adjoint_recursion_operator(model: SpectralModel) -> OperatorExpr:
    """``L`` with ``C_{m+1} = L C_m + 1/2 k_m x omega``."""
    return ring_operator(adjoint_recursion_column(model.n_components), model.epsilon_effective)


def half_derivative(size: int) -> OperatorExpr:
    """``J = 1/2 D`` on every component."""
    return OperatorExpr.diagonal([OperatorEntry.derivative(1, DiffPoly.constant("1/2"))] * size)


def _scalar_triple() -> OperatorTriple:
    half = DiffPoly.constant("1/2")
    m_entry = (_derivative(3) + _symmetric_product(_field(1) * 2)).scaled(half)
    return OperatorTriple(
        family=OperatorFamily.SCALAR,
        J=half_derivative(1),
        M=OperatorExpr.scalar(m_entry),
        Phi=ring_operator(recursion_column(1), DiffPoly.one()),
    )


def _coupled_triples(model: SpectralModel) -> tuple[OperatorTriple, OperatorTriple]:
    half = DiffPoly.constant("1/2")
    epsilon = model.epsilon
    inverse = reciprocal(epsilon)
    derivative = OperatorEntry.derivative(1, half)
    zero = OperatorEntry.zero()
    diagonal = (_derivative(3) + _symmetric_product(_field(1) * 2)).scaled(half)
    off_diagonal = _symmetric_product(_field(2) * 2).scaled(half)
    phi = recursion_operator(model)
    first = OperatorTriple(
        family=OperatorFamily.COUPLED_1,
        J=OperatorExpr.diagonal([derivative, derivative.scaled(inverse)]),
        M=OperatorExpr.from_entries(
            [[diagonal, off_diagonal], [off_diagonal, diagonal.scaled(inverse)]],
        ),
        Phi=phi,
    )
    second = OperatorTriple(
        family=OperatorFamily.COUPLED_2,
        J=OperatorExpr.from_entries([[zero, derivative], [derivative, zero]]),
        M=OperatorExpr.from_entries(
            [[off_diagonal.scaled(epsilon), diagonal], [diagonal, off_diagonal]],
        ),
        Phi=phi,
    )
    return first, second


def _multi_triple(model: SpectralModel) -> OperatorTriple:
    half = DiffPoly.constant("1/2")
    column = []
    for m in range(1, model.n_components + 1):
        entry = _symmetric_product(_field(m) * 2)
        if m == 1:
            entry = _derivative(3) + entry
        column.append(entry.scaled(half))
    return OperatorTriple(
        family=OperatorFamily.MULTI,
        J=half_derivative(model.n_components),
        M=ring_operator(column, model.epsilon_effective),
        Phi=recursion_operator(model),
    )


def build_operators(model: SpectralModel) -> tuple[OperatorTriple, ...]:
    """
    The Hamiltonian structures of ``model``: one triple for the scalar and
    multi-component hierarchies, two sharing ``Phi`` for the coupled one.
    """
    if model.kind is ModelKind.KDV:
        return (_scalar_triple(),)
    if model.kind is ModelKind.COUPLED:
        return _coupled_triples(model)
    return (_multi_triple(model),)


def seed_flow(model: SpectralModel) -> FlowVector:
    """``K_0``: the zeroth flow with every ``k_m`` set to zero."""
    return hierarchy_equation(model.with_isospectral(), 0).rhs


def recursion_flow(model: SpectralModel, n: int, phi: OperatorExpr | None = None) -> FlowVector:
    """``K_n = Phi^n K_0``."""
    phi = phi or recursion_operator(model)
    flow = seed_flow(model)
    for _ in range(n):
        flow = phi.apply(flow)
    return flow
