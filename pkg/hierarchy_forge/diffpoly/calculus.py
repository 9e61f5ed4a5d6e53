"""
Calculus on differential polynomials: total derivatives, the formal
antiderivative, variational and directional derivatives, substitutions.
"""

from __future__ import annotations

from functools import lru_cache
from typing import TYPE_CHECKING, Callable, Mapping, Sequence

from loguru import logger

from hierarchy_forge.diffpoly.coefficients import ONE, Coefficient, to_coefficient
from hierarchy_forge.diffpoly.generators import (
    EMPTY_MONOMIAL,
    X,
    AntiDeriv,
    Generator,
    JetVariable,
    Monomial,
    ParamSymbol,
    SortKey,
    SpaceVariable,
    TimeSymbol,
    TimeVariable,
    divide_monomials,
    exponent_of,
    make_monomial,
    monomial_atom_weight,
    monomial_key,
    multiply_monomials,
    split_scalar,
    top_jet,
    without_factor,
)
from hierarchy_forge.diffpoly.polynomial import DiffPoly
from hierarchy_forge.exceptions import (
    DimensionMismatch,
    IntegrationDidNotTerminate,
    MalformedExpression,
    NotPolynomialInScale,
)

if TYPE_CHECKING:  # pragma: no cover
    from hierarchy_forge.diffpoly.polynomial import Scalar

MAX_INTEGRATION_STEPS = 100_000


def _factor_d_x(generator: Generator) -> DiffPoly | None:
    if isinstance(generator, SpaceVariable):
        return DiffPoly.one()
    if isinstance(generator, JetVariable):
        return DiffPoly.from_generator(generator.shifted())
    if isinstance(generator, AntiDeriv):
        return generator.body
    return None


def _factor_d_t(generator: Generator) -> DiffPoly | None:
    if isinstance(generator, TimeVariable):
        return DiffPoly.one()
    if isinstance(generator, TimeSymbol):
        return DiffPoly.from_generator(TimeSymbol(generator.index, generator.order + 1))
    return None


def _leibniz(
    monomial: Monomial,
    factor_derivative: Callable[[Generator], DiffPoly | None],
) -> DiffPoly:
    result = DiffPoly()
    for index, (generator, exponent) in enumerate(monomial):
        derivative = factor_derivative(generator)
        if derivative is None or derivative.is_zero():
            continue
        rest = DiffPoly.from_monomial(without_factor(monomial, index), exponent)
        result = result + rest * derivative
    return result


@lru_cache(maxsize=1 << 16)
def _d_x_monomial(monomial: Monomial) -> DiffPoly:
    return _leibniz(monomial, _factor_d_x)


def d_x(p: DiffPoly, times: int = 1) -> DiffPoly:
    """Total x-derivative, applied ``times`` times."""
    for _ in range(times):
        result = DiffPoly()
        for monomial, coefficient in p.terms.items():
            result = result + _d_x_monomial(monomial) * coefficient
        p = result
    return p


def d_t(p: DiffPoly) -> DiffPoly:
    """Explicit time derivative: acts on ``t`` and the time coefficients only."""
    result = DiffPoly()
    for monomial, coefficient in p.terms.items():
        result = result + _leibniz(monomial, _factor_d_t) * coefficient
    return result


def partial(p: DiffPoly, generator: Generator) -> DiffPoly:
    """Partial derivative with respect to a single ring generator."""
    result: dict[Monomial, Coefficient] = {}
    for monomial, coefficient in p.terms.items():
        for index, (candidate, exponent) in enumerate(monomial):
            if candidate != generator:
                continue
            reduced = without_factor(monomial, index)
            result[reduced] = result.get(reduced, 0) + coefficient * exponent
    return DiffPoly(result)


def _rank(monomial: Monomial) -> SortKey:
    top = top_jet(monomial)
    return (
        monomial_atom_weight(monomial),
        top.sort_key if top is not None else (),
        monomial_key(monomial),
    )


def _integrate_field_monomial(field: Monomial) -> tuple[DiffPoly, DiffPoly] | None:
    """
    Return ``(F, R)`` with ``field = D(F) + R`` where R is strictly simpler, or None
    when the monomial is already reduced.
    """
    x_power = exponent_of(field, X)
    if all(isinstance(g, SpaceVariable) for g, _ in field):
        return DiffPoly.from_generator(X, x_power + 1) / (x_power + 1), DiffPoly()

    powers = dict(field)
    for generator, exponent in field:
        if not isinstance(generator, AntiDeriv):
            continue
        rest = dict(powers)
        rest.pop(generator)
        body_monomial = next(iter(generator.body.terms))
        quotient = divide_monomials(make_monomial(rest), body_monomial)
        if quotient is None or any(g != X for g, _ in quotient):
            continue
        x_power = exponent_of(quotient, X)
        lifted = make_monomial({X: x_power, generator: exponent + 1})
        exact = DiffPoly.from_monomial(lifted, to_coefficient(1) / (exponent + 1))
        if x_power == 0:
            return exact, DiffPoly()
        lowered = make_monomial({X: x_power - 1, generator: exponent + 1})
        residual = DiffPoly.from_monomial(
            lowered, -to_coefficient(x_power) / (exponent + 1)
        )
        return exact, residual

    top = top_jet(field)
    if top is None or top.order == 0 or powers[top] != 1:
        return None
    below = JetVariable(top.component, top.order - 1)
    powers.pop(top)
    k = powers.pop(below, 0) + 1
    cofactor = DiffPoly.from_monomial(make_monomial(powers))
    lifted = DiffPoly.from_generator(below, k) / k
    return cofactor * lifted, -(d_x(cofactor) * lifted)


def integrate_by_parts(p: DiffPoly) -> tuple[DiffPoly, DiffPoly]:
    """
    Split ``p = D(exact) + residual``.

    Monomials are reduced from the highest rank down, where rank orders first by
    antiderivative nesting weight, then by the top jet, then by the monomial order.
    The residual is zero exactly when an atom-free ``p`` is a total derivative.
    """
    pending: dict[Monomial, Coefficient] = dict(p.terms)
    exact = DiffPoly()
    residual: dict[Monomial, Coefficient] = {}
    steps = 0
    while pending:
        steps += 1
        if steps > MAX_INTEGRATION_STEPS:
            msg = f"Integration by parts exceeded {MAX_INTEGRATION_STEPS} steps."
            raise IntegrationDidNotTerminate(msg)
        monomial = max(pending, key=_rank)
        coefficient = pending.pop(monomial)
        if not coefficient:
            continue
        scalar, field = split_scalar(monomial)
        reduced = _integrate_field_monomial(field)
        if reduced is None:
            residual[monomial] = residual.get(monomial, 0) + coefficient
            continue
        scale = DiffPoly.from_monomial(scalar, coefficient)
        exact = exact + scale * reduced[0]
        for term, value in (scale * reduced[1]).terms.items():
            if term in residual:
                residual[term] = residual[term] + value
            else:
                pending[term] = pending.get(term, 0) + value
    return exact, DiffPoly(residual)


def antiderivative_node(field: Monomial) -> DiffPoly:
    return DiffPoly.from_generator(AntiDeriv(DiffPoly.from_monomial(field)))


def int_x(p: DiffPoly) -> DiffPoly:
    """
    Formal antiderivative with integration constant zero: the exactly integrable
    part is integrated, each remaining field monomial becomes an antiderivative node.
    """
    exact, residual = integrate_by_parts(p)
    if residual.is_zero():
        return exact
    logger.trace("Forming antiderivative nodes for residual: {}", residual)
    nonlocal_part = DiffPoly()
    for field, scalar in residual.split_by_scalar().items():
        nonlocal_part = nonlocal_part + scalar * antiderivative_node(field)
    return exact + nonlocal_part


def reduce_modulo_derivatives(p: DiffPoly) -> DiffPoly:
    return integrate_by_parts(p)[1]


def _jet_partials(p: DiffPoly, component: int) -> dict[int, DiffPoly]:
    orders = {
        g.order
        for g in p.generators()
        if isinstance(g, JetVariable) and g.component == component
    }
    return {order: partial(p, JetVariable(component, order)) for order in orders}


def _adjoint_variation(p: DiffPoly, weight: DiffPoly, component: int) -> DiffPoly:
    result = DiffPoly()
    for order, derivative in _jet_partials(p, component).items():
        term = weight * derivative
        result = result + d_x(term, order) * (-1) ** order
    for atom in p.antiderivs():
        inner_weight = -int_x(weight * partial(p, atom))
        result = result + _adjoint_variation(atom.body, inner_weight, component)
    return result


def euler_derivative(p: DiffPoly, component: int = 1) -> DiffPoly:
    """Variational derivative with respect to ``u_component``."""
    return _adjoint_variation(p, DiffPoly.one(), component)


def gateaux_poly(p: DiffPoly, direction: Sequence[DiffPoly]) -> DiffPoly:
    """Directional derivative of ``p`` along ``direction`` (one entry per component)."""
    derivatives: dict[JetVariable, DiffPoly] = {}

    def jet_image(jet: JetVariable) -> DiffPoly:
        if jet.component > len(direction):
            msg = f"Component u{jet.component} is outside a direction of length {len(direction)}."
            raise DimensionMismatch(msg)
        if jet not in derivatives:
            derivatives[jet] = d_x(direction[jet.component - 1], jet.order)
        return derivatives[jet]

    def factor_derivative(generator: Generator) -> DiffPoly | None:
        if isinstance(generator, JetVariable):
            return jet_image(generator)
        if isinstance(generator, AntiDeriv):
            return int_x(gateaux_poly(generator.body, direction))
        return None

    result = DiffPoly()
    for monomial, coefficient in p.terms.items():
        result = result + _leibniz(monomial, factor_derivative) * coefficient
    return result


def total_time_derivative(p: DiffPoly, flow: Sequence[DiffPoly]) -> DiffPoly:
    """Time derivative along ``u_t = flow``: explicit part plus the chain rule."""
    return d_t(p) + gateaux_poly(p, flow)


def substitute(p: DiffPoly, mapping: Mapping[Generator, DiffPoly | Scalar]) -> DiffPoly:
    """
    Replace generators by polynomials.

    Scalar generators are replaced directly. A key ``JetVariable(i, 0)`` replaces the
    whole jet of ``u_i``: ``u_i^(d)`` becomes the d-th derivative of the image.
    Antiderivative bodies are rewritten and re-integrated.
    """
    images: dict[Generator, DiffPoly] = {}
    for generator, value in mapping.items():
        images[generator] = value if isinstance(value, DiffPoly) else DiffPoly.constant(value)
    jet_bases = {g.component: image for g, image in images.items() if isinstance(g, JetVariable)}
    cache: dict[Generator, DiffPoly] = {}

    def image_of(generator: Generator) -> DiffPoly:
        if generator in cache:
            return cache[generator]
        if isinstance(generator, JetVariable) and generator.component in jet_bases:
            value = d_x(jet_bases[generator.component], generator.order)
        elif isinstance(generator, AntiDeriv):
            value = int_x(substitute(generator.body, mapping))
        elif generator in images:
            value = images[generator]
        else:
            value = DiffPoly.from_generator(generator)
        cache[generator] = value
        return value

    result = DiffPoly()
    for monomial, coefficient in p.terms.items():
        term = DiffPoly.constant(coefficient)
        for generator, exponent in monomial:
            if exponent < 0 and generator in images:
                value = images[generator].constant_value()
                if not value:
                    msg = f"Cannot substitute zero for {generator!r}, which occurs with a negative power."
                    raise MalformedExpression(msg)
                term = term * (ONE / value) ** (-exponent)
            elif exponent < 0:
                term = term * DiffPoly.from_generator(generator, exponent)
            else:
                term = term * image_of(generator) ** exponent
        result = result + term
    return result


def kill_time_coefficients(p: DiffPoly) -> DiffPoly:
    """Isospectral reduction: every ``k_m^(r)`` is set to zero."""
    result: dict[Monomial, Coefficient] = {}
    for monomial, coefficient in p.terms.items():
        # antiderivative bodies are field monomials and carry no time coefficients
        if any(isinstance(g, TimeSymbol) for g, _ in monomial):
            continue
        result[monomial] = coefficient
    return DiffPoly(result)


def _jet_degree(monomial: Monomial) -> int:
    degree = 0
    for generator, exponent in monomial:
        if isinstance(generator, JetVariable):
            degree += exponent
        elif isinstance(generator, AntiDeriv):
            body = next(iter(generator.body.terms))
            degree += exponent * _jet_degree(body)
    return degree


def scale_fields(p: DiffPoly, scale: ParamSymbol) -> DiffPoly:
    """Substitute ``u_i -> scale * u_i`` for every component."""
    result: dict[Monomial, Coefficient] = {}
    for monomial, coefficient in p.terms.items():
        degree = _jet_degree(monomial)
        scaled = multiply_monomials(monomial, make_monomial({scale: degree}))
        result[scaled] = result.get(scaled, 0) + coefficient
    return DiffPoly(result)


def integrate_over_unit_interval(p: DiffPoly, scale: ParamSymbol) -> DiffPoly:
    """Integrate the polynomial dependence on ``scale`` over ``[0, 1]``."""
    result: dict[Monomial, Coefficient] = {}
    for monomial, coefficient in p.terms.items():
        power = exponent_of(monomial, scale)
        if power < 0:
            msg = f"Term {DiffPoly.from_monomial(monomial)} has a negative power of {scale.name}."
            raise NotPolynomialInScale(msg)
        rest = tuple(item for item in monomial if item[0] != scale)
        result[rest] = result.get(rest, 0) + coefficient * ONE / (power + 1)
    return DiffPoly(result)


def is_atom_free(polys: Sequence[DiffPoly]) -> bool:
    return not any(p.has_antiderivs() for p in polys)


def constant_term(p: DiffPoly) -> Coefficient:
    return p.coefficient(EMPTY_MONOMIAL)
