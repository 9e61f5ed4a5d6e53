import pytest

from hierarchy_forge.diffpoly.flow_vector import FlowVector, gateaux
from hierarchy_forge.diffpoly.operators import (
    OperatorEntry,
    OperatorExpr,
    adjoint,
    apply_operator,
    frechet_operator,
)
from hierarchy_forge.diffpoly.parsing import normalize
from hierarchy_forge.diffpoly.sampling import random_test_vectors
from hierarchy_forge.exceptions import DimensionMismatch

P = normalize

SCALAR_RECURSION = OperatorExpr.scalar(OperatorEntry.build({2: 1, 0: "4*u"}, [("2*u_x", 1)]))
SCALAR_M = OperatorExpr.scalar(OperatorEntry.build({3: "1/2", 1: "2*u", 0: "u_x"}))
DERIVATIVE = OperatorExpr.scalar(OperatorEntry.derivative())


def test_adjoint_of_derivative():
    # Act & Assert
    assert adjoint(DERIVATIVE) == -DERIVATIVE
    assert adjoint(DERIVATIVE.scaled(P("1/2"))) == -DERIVATIVE.scaled(P("1/2"))


def test_adjoint_of_inverse_derivative():
    # Arrange
    inverse = OperatorExpr.scalar(OperatorEntry.inverse_derivative())

    # Act & Assert
    assert adjoint(inverse) == -inverse


def test_third_order_hamiltonian_operator_is_antisymmetric():
    # Act & Assert
    assert adjoint(SCALAR_M) == -SCALAR_M


def test_adjoint_is_an_involution_on_nonlocal_operators():
    # Act & Assert
    assert adjoint(adjoint(SCALAR_RECURSION)) == SCALAR_RECURSION


def test_adjoint_reverses_products():
    # Arrange
    first = SCALAR_RECURSION
    second = OperatorExpr.scalar(OperatorEntry.build({1: "u", 0: "u_x^2"}, [("u", "u_x")]))
    vectors = random_test_vectors(1, 3)

    # Act
    left = adjoint(first @ second)
    right = adjoint(second) @ adjoint(first)

    # Assert
    for v in vectors:
        assert left.apply(v).equivalent(right.apply(v))


def test_recursion_operator_maps_first_flow_to_kdv():
    # Act
    result = apply_operator(SCALAR_RECURSION, FlowVector.of("u_x"))

    # Assert
    assert result == FlowVector.of("u_xxx + 6*u*u_x")


def test_identity_leaves_vectors_unchanged():
    # Arrange
    v = FlowVector.of("u1*u2_x", "Dinv(u1^2)")

    # Act & Assert
    assert OperatorExpr.identity(2).apply(v) == v


def test_composition_matches_successive_application():
    # Arrange
    second = OperatorExpr.scalar(OperatorEntry.build({1: "u"}, [("u_x", "u")]))
    third = OperatorExpr.scalar(OperatorEntry.build({0: "x"}, [(1, 1)]))
    vectors = random_test_vectors(1, 3)

    # Act
    composed = (SCALAR_RECURSION @ second) @ third
    regrouped = SCALAR_RECURSION @ (second @ third)

    # Assert
    for v in vectors:
        direct = SCALAR_RECURSION.apply(second.apply(third.apply(v)))
        assert composed.apply(v).equivalent(direct)
        assert regrouped.apply(v).equivalent(direct)


def test_inverse_derivative_composed_with_derivative():
    # Arrange
    inverse = OperatorExpr.scalar(OperatorEntry.inverse_derivative())

    # Act
    product = DERIVATIVE @ inverse

    # Assert
    assert product == OperatorExpr.identity(1)


@pytest.mark.parametrize(
    ("flow", "expected"),
    [
        (("u_x",), OperatorEntry.derivative()),
        (("u^2",), OperatorEntry.multiplication(P("2*u"))),
        (("u_xxx + 6*u*u_x",), OperatorEntry.build({3: 1, 1: "6*u", 0: "6*u_x"})),
    ],
)
def test_frechet_operator_of_local_flows(flow, expected):
    # Act & Assert
    assert frechet_operator(FlowVector.of(*flow)) == OperatorExpr.scalar(expected)


def test_frechet_operator_agrees_with_gateaux():
    # Arrange
    target = FlowVector.of("u1*Dinv(u2) + u2_xx", "u1^2*u2_x + Dinv(u1*u2_x)")
    operator = frechet_operator(target)

    # Act & Assert
    for direction in random_test_vectors(2, 3):
        assert operator.apply(direction).equivalent(gateaux(target, direction))


def test_operator_gateaux_differentiates_coefficients():
    # Act
    derivative = SCALAR_RECURSION.gateaux(FlowVector.of("1/2"))

    # Assert
    assert derivative == OperatorExpr.scalar(OperatorEntry.multiplication(2))


def test_apply_checks_dimensions():
    # Act & Assert
    with pytest.raises(DimensionMismatch):
        SCALAR_RECURSION.apply(FlowVector.of("u1", "u2"))


def test_text_rendering():
    # Act & Assert
    assert str(SCALAR_RECURSION) == "[[D^2 + (4*u) + (2*u_x)*Dinv]]"
