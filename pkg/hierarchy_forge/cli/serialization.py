"""
Versioned JSON encoding of polynomials, flows and operators.

Documents look like ``{"schema": "hierarchy-forge/1", "kind": ..., "value": ...}``.
A polynomial is a list of terms in canonical order; every term carries its
monomial as ``[tag, payload, exponent]`` triples and its coefficient as
numerator and denominator strings. Antiderivative payloads are polynomials, so
nested ``Dinv`` nodes nest in the document. Keys are sorted on output, which
makes the text of a document a function of the canonical form alone.
"""

from __future__ import annotations

import json
from typing import TYPE_CHECKING, Any, Callable, Mapping, Union

import xxhash

from hierarchy_forge.diffpoly import (
    LAMBDA,
    T,
    X,
    AntiDeriv,
    DiffPoly,
    FlowVector,
    JetVariable,
    OperatorEntry,
    OperatorExpr,
    ParamSymbol,
    TimeSymbol,
)
from hierarchy_forge.diffpoly.coefficients import coefficient_from_parts, coefficient_parts
from hierarchy_forge.diffpoly.generators import make_monomial, monomial_key
from hierarchy_forge.exceptions import MalformedExpression, SchemaMismatch

if TYPE_CHECKING:  # pragma: no cover
    from hierarchy_forge.diffpoly.generators import Generator, Monomial
    from hierarchy_forge.hierarchy import HierarchyEquation

SCHEMA_VERSION = "hierarchy-forge/1"

Expression = Union[DiffPoly, FlowVector, OperatorExpr]
Document = Mapping[str, Any]


def _generator_payload(generator: Generator) -> Any:
    if isinstance(generator, ParamSymbol):
        return generator.name
    if isinstance(generator, TimeSymbol):
        return [generator.index, generator.order]
    if isinstance(generator, JetVariable):
        return [generator.component, generator.order]
    if isinstance(generator, AntiDeriv):
        return polynomial_to_data(generator.body)
    return None


def _generator_from_data(tag: str, payload: Any) -> Generator:
    builders: dict[str, Callable[[Any], Generator]] = {
        ParamSymbol.tag: lambda p: ParamSymbol(str(p)),
        TimeSymbol.tag: lambda p: TimeSymbol(int(p[0]), int(p[1])),
        JetVariable.tag: lambda p: JetVariable(int(p[0]), int(p[1])),
        AntiDeriv.tag: lambda p: AntiDeriv(polynomial_from_data(p)),
        T.tag: lambda _: T,
        LAMBDA.tag: lambda _: LAMBDA,
        X.tag: lambda _: X,
    }
    builder = builders.get(tag)
    if builder is None:
        msg = f"Unknown generator tag {tag!r}."
        raise SchemaMismatch(msg)
    try:
        return builder(payload)
    except SchemaMismatch:
        raise
    except (TypeError, IndexError, ValueError) as error:
        msg = f"Malformed payload for generator {tag!r}: {payload!r}"
        raise SchemaMismatch(msg) from error


def monomial_to_data(monomial: Monomial) -> list[list[Any]]:
    return [[generator.tag, _generator_payload(generator), exponent] for generator, exponent in monomial]


def monomial_from_data(data: list[list[Any]]) -> Monomial:
    powers: dict[Generator, int] = {}
    for tag, payload, exponent in data:
        generator = _generator_from_data(tag, payload)
        powers[generator] = powers.get(generator, 0) + int(exponent)
    return make_monomial(powers)


def polynomial_to_data(p: DiffPoly) -> list[dict[str, Any]]:
    terms = []
    for monomial, coefficient in p.sorted_terms():
        numerator, denominator = coefficient_parts(coefficient)
        terms.append(
            {
                "monomial": monomial_to_data(monomial),
                "numerator": str(numerator),
                "denominator": str(denominator),
            },
        )
    return terms


def polynomial_from_data(data: list[dict[str, Any]]) -> DiffPoly:
    total = DiffPoly()
    for term in data:
        try:
            coefficient = coefficient_from_parts(term["numerator"], term["denominator"])
            monomial = monomial_from_data(term["monomial"])
        except SchemaMismatch:
            raise
        except MalformedExpression as error:
            msg = f"Invalid polynomial term {term!r}: {error}"
            raise SchemaMismatch(msg) from error
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as error:
            msg = f"Malformed polynomial term: {term!r}"
            raise SchemaMismatch(msg) from error
        total = total + DiffPoly.from_monomial(monomial, coefficient)
    return total


def flow_to_data(flow: FlowVector) -> list[list[dict[str, Any]]]:
    return [polynomial_to_data(component) for component in flow]


def flow_from_data(data: list[list[dict[str, Any]]]) -> FlowVector:
    return FlowVector(tuple(polynomial_from_data(component) for component in data))


def _nonlocal_key(item: tuple[tuple[Monomial, Monomial], DiffPoly]) -> Any:
    (left, right), _ = item
    return (monomial_key(left), monomial_key(right))


def entry_to_data(entry: OperatorEntry) -> dict[str, Any]:
    return {
        "local": [[order, polynomial_to_data(entry.local[order])] for order in sorted(entry.local)],
        "nonlocal": [
            {
                "left": monomial_to_data(left),
                "right": monomial_to_data(right),
                "weight": polynomial_to_data(weight),
            }
            for (left, right), weight in sorted(entry.nonlocal_terms.items(), key=_nonlocal_key)
        ],
    }


def entry_from_data(data: Mapping[str, Any]) -> OperatorEntry:
    try:
        local = {int(order): polynomial_from_data(value) for order, value in data["local"]}
        nonlocal_terms = {
            (monomial_from_data(term["left"]), monomial_from_data(term["right"])): polynomial_from_data(
                term["weight"],
            )
            for term in data["nonlocal"]
        }
    except SchemaMismatch:
        raise
    except (KeyError, TypeError, ValueError) as error:
        msg = f"Malformed operator entry: {data!r}"
        raise SchemaMismatch(msg) from error
    return OperatorEntry.from_parts(local, nonlocal_terms)


def operator_to_data(operator: OperatorExpr) -> list[list[dict[str, Any]]]:
    return [[entry_to_data(entry) for entry in row] for row in operator.rows]


def operator_from_data(data: list[list[Mapping[str, Any]]]) -> OperatorExpr:
    return OperatorExpr.from_entries([[entry_from_data(entry) for entry in row] for row in data])


_ENCODERS: dict[type, tuple[str, Callable[[Any], Any]]] = {
    DiffPoly: ("polynomial", polynomial_to_data),
    FlowVector: ("flow", flow_to_data),
    OperatorExpr: ("operator", operator_to_data),
}

_DECODERS: dict[str, Callable[[Any], Expression]] = {
    "polynomial": polynomial_from_data,
    "flow": flow_from_data,
    "operator": operator_from_data,
}


def document(kind: str, value: Any, **extra: Any) -> dict[str, Any]:
    return {"schema": SCHEMA_VERSION, "kind": kind, "value": value, **extra}


def encode(expression: Expression) -> dict[str, Any]:
    try:
        kind, encoder = _ENCODERS[type(expression)]
    except KeyError:
        msg = f"Cannot serialize objects of type {type(expression).__name__}."
        raise SchemaMismatch(msg) from None
    return document(kind, encoder(expression))


def check_schema(data: Document) -> None:
    version = data.get("schema") if isinstance(data, Mapping) else None
    if version != SCHEMA_VERSION:
        msg = f"Expected schema {SCHEMA_VERSION!r}, got {version!r}."
        raise SchemaMismatch(msg)


def decode(data: Document) -> Expression:
    check_schema(data)
    kind = data.get("kind")
    decoder = _DECODERS.get(kind)  # type: ignore[arg-type]
    if decoder is None:
        msg = f"Unknown document kind {kind!r}."
        raise SchemaMismatch(msg)
    return decoder(data.get("value"))


def dumps(data: Document) -> str:
    return json.dumps(data, indent=4, ensure_ascii=False, sort_keys=True)


def load_document(text: str) -> dict[str, Any]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as error:
        msg = f"Not a JSON document: {error}"
        raise SchemaMismatch(msg) from None
    check_schema(data)
    return data


def serialize(expression: Expression) -> str:
    return dumps(encode(expression))


def deserialize(text: str) -> Expression:
    return decode(load_document(text))


def fingerprint(text: str) -> str:
    return xxhash.xxh32(text).hexdigest()


def equation_document(equation: HierarchyEquation) -> dict[str, Any]:
    """The flow of ``equation`` plus every coefficient of the table it was read from."""
    flow = flow_to_data(equation.rhs)
    table = [
        {"letter": letter, "block": k, "index": m, "value": polynomial_to_data(value)}
        for letter, k, m, value in equation.table.entries()
    ]
    return document(
        "hierarchy",
        {"flow": flow, "table": table},
        model=equation.model.label,
        components=equation.n_components,
        order=equation.order,
        isospectral=equation.model.isospectral,
        fingerprint=fingerprint(dumps({"flow": flow})),
    )


def equation_flow(data: Document) -> FlowVector:
    """Read the flow back from an ``equation_document``."""
    check_schema(data)
    if data.get("kind") != "hierarchy":
        msg = f"Expected a hierarchy document, got {data.get('kind')!r}."
        raise SchemaMismatch(msg)
    return flow_from_data(data["value"]["flow"])
