"""
Exact rational coefficients.

All coefficients live in sympy's ``QQ`` domain; its elements are plain rational
numbers (``PythonMPQ`` or ``gmpy2.mpq`` depending on the installation), which keeps
term arithmetic fast while staying exact.
"""

from __future__ import annotations

from typing import Any

import sympy
from sympy import QQ

from hierarchy_forge.exceptions import MalformedExpression

# Element of sympy's QQ domain.
Coefficient = Any

ZERO: Coefficient = QQ.zero
ONE: Coefficient = QQ.one


def to_coefficient(value: object) -> Coefficient:
    if isinstance(value, bool):
        msg = f"Booleans are not coefficients: {value!r}"
        raise MalformedExpression(msg)
    if isinstance(value, QQ.dtype):
        return value
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, sympy.Rational):
        return QQ.from_sympy(value)
    if isinstance(value, str):
        try:
            parsed = sympy.Rational(value.strip())
        except (TypeError, ValueError, SyntaxError):
            msg = f"Cannot read {value!r} as an exact rational."
            raise MalformedExpression(msg) from None
        return QQ.from_sympy(parsed)
    msg = f"Unsupported coefficient type: {type(value).__name__}"
    raise MalformedExpression(msg)


def coefficient_parts(value: Coefficient) -> tuple[int, int]:
    return int(value.numerator), int(value.denominator)


def coefficient_to_text(value: Coefficient) -> str:
    numerator, denominator = coefficient_parts(value)
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


def coefficient_from_parts(numerator: str, denominator: str) -> Coefficient:
    return QQ(int(numerator), int(denominator))
