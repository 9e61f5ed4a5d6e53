"""
Plain-text and LaTeX rendering of differential polynomials.

The text form is the input syntax of ``normalize``: rendering and parsing again
gives back the same canonical object.
"""

from __future__ import annotations

import re
from typing import TYPE_CHECKING, Callable

from hierarchy_forge.diffpoly.coefficients import coefficient_parts
from hierarchy_forge.diffpoly.generators import (
    Generator,
    JetVariable,
    ParamSymbol,
    SpaceVariable,
    SpectralParameter,
    TimeSymbol,
    TimeVariable,
)

if TYPE_CHECKING:  # pragma: no cover
    from hierarchy_forge.diffpoly.coefficients import Coefficient
    from hierarchy_forge.diffpoly.polynomial import DiffPoly

GREEK_PARAMETERS = frozenset(
    {"alpha", "beta", "gamma", "delta", "epsilon", "sigma", "mu", "nu", "omega"},
)
_INDEXED_NAME = re.compile(r"^([A-Za-z]+?)(\d+)$")


def _jet_text(jet: JetVariable, *, indexed: bool) -> str:
    name = f"u{jet.component}" if indexed else "u"
    if jet.order:
        return f"{name}_{'x' * jet.order}"
    return name


def generator_text(generator: Generator, *, indexed: bool = False) -> str:
    if isinstance(generator, ParamSymbol):
        return generator.name
    if isinstance(generator, TimeSymbol):
        suffix = f"_{'t' * generator.order}" if generator.order else ""
        return f"k{generator.index}{suffix}"
    if isinstance(generator, TimeVariable):
        return "t"
    if isinstance(generator, SpectralParameter):
        return "lam"
    if isinstance(generator, SpaceVariable):
        return "x"
    if isinstance(generator, JetVariable):
        return _jet_text(generator, indexed=indexed)
    return f"Dinv({format_text(generator.body, indexed=indexed)})"


def _param_latex(name: str) -> str:
    match = _INDEXED_NAME.match(name)
    stem, index = (match.group(1), match.group(2)) if match else (name, "")
    if stem == "epsilon":
        body = r"\varepsilon"
    elif stem in GREEK_PARAMETERS:
        body = f"\\{stem}"
    else:
        body = stem if len(stem) == 1 else f"\\mathrm{{{stem}}}"
    return f"{body}_{{{index}}}" if index else body


def generator_latex(generator: Generator, *, indexed: bool = False) -> str:
    if isinstance(generator, ParamSymbol):
        return _param_latex(generator.name)
    if isinstance(generator, TimeSymbol):
        derivative = f"^{{({generator.order})}}" if generator.order else ""
        return f"k_{{{generator.index}}}{derivative}(t)"
    if isinstance(generator, TimeVariable):
        return "t"
    if isinstance(generator, SpectralParameter):
        return r"\lambda"
    if isinstance(generator, SpaceVariable):
        return "x"
    if isinstance(generator, JetVariable):
        subscript = [str(generator.component)] if indexed else []
        if generator.order:
            subscript.append("x" * generator.order)
        return f"u_{{{','.join(subscript)}}}" if subscript else "u"
    body = format_latex(generator.body, indexed=indexed)
    return f"\\partial^{{-1}}\\left({body}\\right)"


def _power_text(base: str, exponent: int) -> str:
    if exponent == 1:
        return base
    if exponent < 0:
        return f"{base}^({exponent})"
    return f"{base}^{exponent}"


def _power_latex(base: str, exponent: int) -> str:
    if exponent == 1:
        return base
    if base.endswith(")") or "_" in base:
        base = f"{{{base}}}"
    return f"{base}^{{{exponent}}}"


def _render(
    p: DiffPoly,
    *,
    factor: Callable[[Generator], str],
    power: Callable[[str, int], str],
    coefficient: Callable[[Coefficient, bool], str],
    separator: str,
) -> str:
    if p.is_zero():
        return "0"
    pieces: list[str] = []
    for monomial, value in p.sorted_terms():
        negative = value < 0
        magnitude = -value if negative else value
        factors = separator.join(power(factor(g), e) for g, e in monomial)
        lead = coefficient(magnitude, bool(monomial))
        body = separator.join(piece for piece in (lead, factors) if piece)
        sign = "-" if negative else "+"
        pieces.append(f"{sign} {body}")
    text = " ".join(pieces)
    if text.startswith("+ "):
        return text[2:]
    return "-" + text[2:]


def _coefficient_text(value: Coefficient, has_factors: bool) -> str:
    numerator, denominator = coefficient_parts(value)
    if numerator == denominator == 1 and has_factors:
        return ""
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


def _coefficient_latex(value: Coefficient, has_factors: bool) -> str:
    numerator, denominator = coefficient_parts(value)
    if numerator == denominator == 1 and has_factors:
        return ""
    if denominator == 1:
        return str(numerator)
    return f"\\frac{{{numerator}}}{{{denominator}}}"


def _uses_indexed_names(p: DiffPoly, indexed: bool | None) -> bool:
    if indexed is not None:
        return indexed
    return p.max_component() > 1


def format_text(p: DiffPoly, *, indexed: bool | None = None) -> str:
    """Render in the parseable text syntax (``u`` and ``u1`` both name component one)."""
    use_index = _uses_indexed_names(p, indexed)
    return _render(
        p,
        factor=lambda g: generator_text(g, indexed=use_index),
        power=_power_text,
        coefficient=_coefficient_text,
        separator="*",
    )


def format_latex(p: DiffPoly, *, indexed: bool | None = None) -> str:
    use_index = _uses_indexed_names(p, indexed)
    return _render(
        p,
        factor=lambda g: generator_latex(g, indexed=use_index),
        power=_power_latex,
        coefficient=_coefficient_latex,
        separator=" ",
    )

