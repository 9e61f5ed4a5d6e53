import pytest

from hierarchy_forge.diffpoly import FlowVector, OperatorEntry, OperatorExpr, normalize
from hierarchy_forge.exceptions import BadModel
from hierarchy_forge.hamiltonian import (
    OperatorFamily,
    build_operators,
    reciprocal,
    recursion_flow,
    recursion_operator,
    seed_flow,
)
from hierarchy_forge.spectral import coupled_model, kdv_model, multi_model

P = normalize

SCALAR_RECURSION = OperatorExpr.scalar(OperatorEntry.build({2: 1, 0: "4*u"}, [("2*u_x", 1)]))
FROBENIUS = coupled_model(alpha1=1, alpha2=0, isospectral=True)


def test_scalar_operators():
    # Act
    (triple,) = build_operators(kdv_model())

    # Assert
    assert triple.family is OperatorFamily.SCALAR
    assert triple.Phi == SCALAR_RECURSION
    assert triple.M == OperatorExpr.scalar(OperatorEntry.build({3: "1/2", 1: "2*u", 0: "u_x"}))
    assert triple.J == OperatorExpr.scalar(OperatorEntry.derivative(1, P("1/2")))


def test_coupled_operators_share_the_recursion_operator():
    # Act
    first, second = build_operators(coupled_model())

    # Assert
    assert (first.family, second.family) == (OperatorFamily.COUPLED_1, OperatorFamily.COUPLED_2)
    assert first.Phi == second.Phi
    assert first.Phi.entry(0, 1) == OperatorEntry.build({0: "4*epsilon*u2"}, [("2*epsilon*u2_x", 1)])
    assert first.Phi.entry(1, 0) == OperatorEntry.build({0: "4*u2"}, [("2*u2_x", 1)])


def test_coupled_hamiltonian_operators():
    # Act
    first, second = build_operators(coupled_model())

    # Assert
    half_derivative = OperatorEntry.derivative(1, P("1/2"))
    assert second.J.entry(0, 1) == half_derivative
    assert second.J.entry(0, 0).is_zero()
    assert first.J.entry(1, 1) == OperatorEntry.derivative(1, P("1/(2*epsilon)"))
    assert first.M.entry(0, 1) == OperatorEntry.build({1: "2*u2", 0: "u2_x"})
    assert second.M.entry(0, 0) == OperatorEntry.build({1: "2*epsilon*u2", 0: "epsilon*u2_x"})


def test_single_component_multi_operator_is_the_scalar_one():
    # Act
    (triple,) = build_operators(multi_model(1))

    # Assert
    assert triple.family is OperatorFamily.MULTI
    assert triple.Phi == SCALAR_RECURSION


def test_three_component_operator_wraps_with_sigma_epsilon():
    # Act
    phi = recursion_operator(multi_model(3))

    # Assert
    assert phi.entry(0, 1) == OperatorEntry.build({0: "4*sigma*epsilon*u3"}, [("2*sigma*epsilon*u3_x", 1)])
    assert phi.entry(2, 1) == OperatorEntry.build({0: "4*u2"}, [("2*u2_x", 1)])
    assert phi.entry(2, 2) == phi.entry(0, 0)


def test_reciprocal_of_parameter_monomials():
    # Act & Assert
    assert reciprocal(P("2*epsilon")) == P("1/(2*epsilon)")
    assert reciprocal(P("-1")) == P("-1")


@pytest.mark.parametrize("value", ["u", "epsilon + 1", "0"])
def test_reciprocal_rejects_other_values(value):
    # Act & Assert
    with pytest.raises(BadModel, match="Cannot invert"):
        reciprocal(P(value))


def test_seed_flow_drops_the_time_coefficients():
    # Act & Assert
    assert seed_flow(kdv_model()) == FlowVector.of("alpha*u_x")
    assert seed_flow(coupled_model()) == FlowVector.of(
        "alpha1*u1_x + epsilon*alpha2*u2_x",
        "alpha2*u1_x + alpha1*u2_x",
    )


def test_first_flow_of_the_frobenius_hierarchy():
    # Act
    flow = recursion_flow(FROBENIUS, 1)

    # Assert
    assert flow == FlowVector.of(
        "u1_xxx + 6*u1*u1_x + 6*epsilon*u2*u2_x",
        "u2_xxx + 6*u1*u2_x + 6*u2*u1_x",
    )
