"""
Reading raw expressions into canonical differential polynomials.

Input is either a string or a sympy expression. Recognised names:

- ``u``, ``u_x``, ``u2_xxx`` and ``jet(i, d)`` for jet variables (``u`` is component 1)
- ``k0`` or ``k_0``, ``k1_t`` for the time coefficients and their t-derivatives
- ``x``, ``t``, ``lam`` for space, time and the spectral parameter
- ``Dx(e)``, ``Dx(e, n)`` and ``Dinv(e)`` for the total derivative and antiderivative
- ``eps`` as a short form of ``epsilon``; every other identifier is a parameter
"""

from __future__ import annotations

import re
from tokenize import TokenError
from typing import TYPE_CHECKING

import sympy
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)

from hierarchy_forge.diffpoly.calculus import d_x, int_x
from hierarchy_forge.diffpoly.coefficients import to_coefficient
from hierarchy_forge.diffpoly.generators import (
    LAMBDA,
    T,
    X,
    Generator,
    JetVariable,
    ParamSymbol,
    TimeSymbol,
    make_monomial,
)
from hierarchy_forge.diffpoly.polynomial import DiffPoly
from hierarchy_forge.exceptions import MalformedExpression

if TYPE_CHECKING:  # pragma: no cover
    from sympy import Basic

TRANSFORMATIONS = (*standard_transformations, convert_xor)
FUNCTION_NAMES = ("Dinv", "Dx", "jet")
PARAMETER_ALIASES = {"eps": "epsilon"}

_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_JET = re.compile(r"^u(\d*)(?:_(x+))?$")
_TIME_COEFFICIENT = re.compile(r"^k_?(\d+)(?:_(t+))?$")
_FIELD_LIKE = re.compile(r"^u\d*_")


def generator_for_name(name: str, *, components: int | None = None) -> Generator:
    """Map an identifier of the input syntax to its ring generator."""
    jet = _JET.match(name)
    if jet:
        component = int(jet.group(1)) if jet.group(1) else 1
        order = len(jet.group(2) or "")
        return _checked_jet(component, order, components)
    if _FIELD_LIKE.match(name):
        msg = f"Malformed jet variable name: {name!r}"
        raise MalformedExpression(msg)
    time_coefficient = _TIME_COEFFICIENT.match(name)
    if time_coefficient:
        return TimeSymbol(
            int(time_coefficient.group(1)),
            len(time_coefficient.group(2) or ""),
        )
    if name == "x":
        return X
    if name == "t":
        return T
    if name == "lam":
        return LAMBDA
    return ParamSymbol(PARAMETER_ALIASES.get(name, name))


def _checked_jet(component: int, order: int, components: int | None) -> JetVariable:
    if components is not None and component > components:
        msg = f"Component u{component} is not declared (model has {components} components)."
        raise MalformedExpression(msg)
    return JetVariable(component, order)


def _local_namespace(text: str) -> dict[str, object]:
    namespace: dict[str, object] = {name: sympy.Function(name) for name in FUNCTION_NAMES}
    for name in set(_IDENTIFIER.findall(text)):
        if name not in namespace:
            namespace[name] = sympy.Symbol(name)
    return namespace


def _integer(value: Basic, what: str) -> int:
    if not isinstance(value, sympy.Integer):
        msg = f"{what} must be an integer, got {value}."
        raise MalformedExpression(msg)
    return int(value)


def _negative_power(base: DiffPoly, exponent: int) -> DiffPoly:
    if base.is_constant():
        value = base.constant_value()
        if not value:
            msg = "Division by zero."
            raise MalformedExpression(msg)
        return DiffPoly.constant(to_coefficient(1) / value) ** (-exponent)
    if len(base) == 1:
        ((monomial, coefficient),) = base.terms.items()
        if all(isinstance(g, ParamSymbol) for g, _ in monomial):
            inverse = make_monomial({g: e * exponent for g, e in monomial})
            return DiffPoly.from_monomial(inverse, (to_coefficient(1) / coefficient) ** (-exponent))
    msg = f"Negative powers are only allowed for parameters, got ({base})^{exponent}."
    raise MalformedExpression(msg)


def _convert(node: Basic, components: int | None) -> DiffPoly:
    if isinstance(node, sympy.Float):
        msg = f"Floating point numbers are not allowed: {node}"
        raise MalformedExpression(msg)
    if isinstance(node, sympy.Rational):
        return DiffPoly.constant(node)
    if isinstance(node, sympy.Symbol):
        return DiffPoly.from_generator(generator_for_name(node.name, components=components))
    if isinstance(node, sympy.Add):
        result = DiffPoly()
        for arg in node.args:
            result = result + _convert(arg, components)
        return result
    if isinstance(node, sympy.Mul):
        result = DiffPoly.one()
        for arg in node.args:
            result = result * _convert(arg, components)
        return result
    if isinstance(node, sympy.Pow):
        exponent = _integer(node.exp, "Exponent")
        base = _convert(node.base, components)
        if exponent < 0:
            return _negative_power(base, exponent)
        return base**exponent
    if isinstance(node, sympy.core.function.AppliedUndef):
        return _convert_call(node, components)
    msg = f"Unsupported expression: {node}"
    raise MalformedExpression(msg)


def _convert_call(node: Basic, components: int | None) -> DiffPoly:
    name = node.func.__name__
    args = node.args
    if name == "Dinv" and len(args) == 1:
        return int_x(_convert(args[0], components))
    if name == "Dx" and len(args) in (1, 2):
        times = _integer(args[1], "Derivative order") if len(args) == 2 else 1
        if times < 0:
            msg = f"Derivative order must be nonnegative, got {times}."
            raise MalformedExpression(msg)
        return d_x(_convert(args[0], components), times)
    if name == "jet" and len(args) == 2:
        component = _integer(args[0], "Jet component")
        order = _integer(args[1], "Jet order")
        return DiffPoly.from_generator(_checked_jet(component, order, components))
    msg = f"Unknown function call: {node}"
    raise MalformedExpression(msg)


def normalize(
    expression: str | Basic | DiffPoly,
    *,
    components: int | None = None,
) -> DiffPoly:
    """
    Return the canonical form of ``expression``.

    Canonical objects are returned unchanged, so ``normalize`` is idempotent.
    ``components`` bounds the admissible field components when given.
    """
    if isinstance(expression, DiffPoly):
        return expression
    if isinstance(expression, str):
        if not expression.strip():
            msg = "Empty expression."
            raise MalformedExpression(msg)
        try:
            parsed = parse_expr(
                expression,
                local_dict=_local_namespace(expression),
                transformations=TRANSFORMATIONS,
            )
        except (SyntaxError, TypeError, ValueError, TokenError) as error:
            msg = f"Cannot parse {expression!r}: {error}"
            raise MalformedExpression(msg) from None
        return _convert(parsed, components)
    if isinstance(expression, sympy.Basic):
        return _convert(expression, components)
    if isinstance(expression, int) and not isinstance(expression, bool):
        return DiffPoly.constant(expression)
    msg = f"Cannot normalize an object of type {type(expression).__name__}."
    raise MalformedExpression(msg)
