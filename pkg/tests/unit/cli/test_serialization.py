import json

import pytest

from hierarchy_forge.cli.serialization import (
    SCHEMA_VERSION,
    decode,
    deserialize,
    encode,
    equation_document,
    equation_flow,
    fingerprint,
    load_document,
    serialize,
)
from hierarchy_forge.diffpoly import (
    LAMBDA,
    T,
    DiffPoly,
    FlowVector,
    JetVariable,
    ParamSymbol,
    TimeSymbol,
    normalize,
    random_test_vectors,
)
from hierarchy_forge.diffpoly.generators import make_monomial
from hierarchy_forge.exceptions import SchemaMismatch
from hierarchy_forge.hamiltonian import recursion_operator
from hierarchy_forge.hierarchy import hierarchy_equation, solve_recursion
from hierarchy_forge.spectral import coupled_model, kdv_model

P = normalize


def test_scalar_recursion_coefficient_round_trips():
    # Arrange
    c_2 = solve_recursion(kdv_model(), 1).c(1, 2)

    # Act
    restored = deserialize(serialize(c_2))

    # Assert
    assert restored == c_2


def test_zero_polynomial_round_trips():
    # Act
    text = serialize(DiffPoly())

    # Assert
    assert json.loads(text)["value"] == []
    assert deserialize(text) == DiffPoly()


def test_polynomial_document_layout():
    # Arrange
    p = P("1/2*alpha*u_x")

    # Act
    data = encode(p)

    # Assert
    assert data["schema"] == SCHEMA_VERSION
    assert data["kind"] == "polynomial"
    assert data["value"] == [
        {
            "monomial": [["param", "alpha", 1], ["jet", [1, 1], 1]],
            "numerator": "1",
            "denominator": "2",
        },
    ]


def test_every_generator_kind_round_trips():
    # Arrange
    scalar = DiffPoly.from_generator(TimeSymbol(2, 1)) * DiffPoly.from_generator(T) * DiffPoly.from_generator(LAMBDA)
    laurent = DiffPoly.from_monomial(make_monomial({ParamSymbol("epsilon"): -1, JetVariable(2, 1): 1}), "-3/4")
    p = scalar * P("x*u1_xx") + laurent

    # Act
    restored = deserialize(serialize(p))

    # Assert
    assert restored == p


def test_nested_antiderivatives_round_trip():
    # Arrange
    p = P("u_x*Dinv(u**2*Dinv(u)) + u*Dinv(u)")

    # Act
    restored = deserialize(serialize(p))

    # Assert
    assert p.has_antiderivs()
    assert restored == p


def test_flow_round_trips():
    # Arrange
    flow = hierarchy_equation(coupled_model(), 1).rhs

    # Act
    restored = deserialize(serialize(flow))

    # Assert
    assert isinstance(restored, FlowVector)
    assert restored == flow


def test_recursion_operator_round_trips():
    # Arrange
    phi = recursion_operator(coupled_model(isospectral=True))
    (vector,) = random_test_vectors(2, 1, seed=3)

    # Act
    restored = deserialize(serialize(phi))

    # Assert
    assert restored == phi
    assert restored.apply(vector) == phi.apply(vector)


def test_serialization_is_deterministic():
    # Arrange
    flow = hierarchy_equation(kdv_model(), 2).rhs

    # Act
    first, second = serialize(flow), serialize(flow)

    # Assert
    assert first == second
    assert fingerprint(first) == fingerprint(second)


def test_equation_document_carries_the_flow_and_table():
    # Arrange
    equation = hierarchy_equation(kdv_model(), 1)

    # Act
    data = load_document(json.dumps(equation_document(equation)))

    # Assert
    assert data["kind"] == "hierarchy"
    assert data["order"] == 1
    assert data["components"] == 1
    assert equation_flow(data) == equation.rhs
    assert len(data["value"]["table"]) == len(equation.table.entries())


@pytest.mark.parametrize(
    ("text", "message"),
    [
        ('{"schema": "hierarchy-forge/0", "kind": "polynomial", "value": []}', "Expected schema"),
        ('{"kind": "polynomial", "value": []}', "Expected schema"),
        (f'{{"schema": "{SCHEMA_VERSION}", "kind": "matrix", "value": []}}', "Unknown document kind"),
        (
            f'{{"schema": "{SCHEMA_VERSION}", "kind": "polynomial", "value": '
            '[{"monomial": [["psi", null, 1]], "numerator": "1", "denominator": "1"}]}',
            "Unknown generator tag",
        ),
        (
            f'{{"schema": "{SCHEMA_VERSION}", "kind": "polynomial", "value": [{{"monomial": []}}]}}',
            "Malformed polynomial term",
        ),
        ("not json", "Not a JSON document"),
    ],
    ids=["old-version", "missing-version", "unknown-kind", "unknown-tag", "missing-coefficient", "not-json"],
)
def test_schema_mismatch(text, message):
    # Act & Assert
    with pytest.raises(SchemaMismatch, match=message):
        deserialize(text)


def test_decode_rejects_negative_jet_exponents():
    # Arrange
    data = encode(P("u"))
    data["value"][0]["monomial"][0][2] = -1

    # Act & Assert
    with pytest.raises(SchemaMismatch, match="Invalid polynomial term"):
        decode(data)


def test_equation_flow_needs_a_hierarchy_document():
    # Act & Assert
    with pytest.raises(SchemaMismatch, match="Expected a hierarchy document"):
        equation_flow(encode(P("u")))
