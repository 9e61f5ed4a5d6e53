import pytest

from hierarchy_forge.diffpoly import FlowVector, normalize
from hierarchy_forge.exceptions import DimensionMismatch, HierarchyForgeValueError
from hierarchy_forge.hamiltonian import recursion_flow
from hierarchy_forge.spectral import coupled_model
from hierarchy_forge.symmetry import (
    ConstantMixer,
    SymmetryKind,
    coupled_symmetries,
    k_flow,
    lie_bracket,
    tau_flow,
)

P = normalize

FROBENIUS = coupled_model(alpha1=1, alpha2=0, isospectral=True)
MIXED_K_0 = FlowVector.of("u1_x + epsilon*u2_x", "u1_x + u2_x")


def test_constant_mixer_multiplies_by_one_plus_s():
    # Arrange
    mixer = ConstantMixer.for_epsilon(P("epsilon"))

    # Act
    mixed = mixer.apply(FlowVector.of("u1", "u2"))

    # Assert
    assert mixed == FlowVector.of("u1 + epsilon*u2", "u1 + u2")


def test_k_flows_follow_the_recursion_operator():
    # Act
    flow = k_flow(1)

    # Assert
    assert flow.kind is SymmetryKind.K
    assert flow.label == "K_1"
    assert flow.value == recursion_flow(FROBENIUS, 1)
    assert not flow.is_time_dependent


def test_first_seed_flow():
    # Act
    flow = coupled_symmetries().sigma_flow(1)

    # Assert
    assert flow.label == "Phi^1 sigma_0"
    assert flow.value == FlowVector.of(
        "x*u1_x + 2*u1 + epsilon*x*u2_x + 2*epsilon*u2",
        "x*u2_x + 2*u2 + x*u1_x + 2*u1",
    )


def test_tau_flow_is_affine_in_time():
    # Act
    flow = tau_flow(1, 0)

    # Assert
    assert flow.kind is SymmetryKind.TAU
    assert flow.label == "tau_0^1"
    assert flow.is_time_dependent
    assert flow.time_coefficient == MIXED_K_0 * 3
    assert flow.value == FlowVector.of(
        "3*t*u1_x + 3*t*epsilon*u2_x + 1/2",
        "3*t*u1_x + 3*t*u2_x + 1/2",
    )


@pytest.mark.parametrize(
    ("build", "message"),
    [
        (lambda: k_flow(-1), "indexed from 0"),
        (lambda: tau_flow(0, 0), "m >= 1"),
        (lambda: tau_flow(1, -1), "n >= 0"),
        (lambda: coupled_symmetries().sigma_flow(-2), "indexed from 0"),
    ],
    ids=["negative-k", "tau-level-zero", "tau-negative-index", "negative-seed"],
)
def test_invalid_indices(build, message):
    # Act & Assert
    with pytest.raises(HierarchyForgeValueError, match=message):
        build()


def test_bracket_of_k_1_with_sigma_0():
    # Arrange
    algebra = coupled_symmetries()

    # Act
    bracket = lie_bracket(algebra.k_value(1), algebra.sigma_0)

    # Assert
    assert bracket == MIXED_K_0 * 3


def test_bracket_of_the_first_seed_flows():
    # Arrange
    algebra = coupled_symmetries()

    # Act
    bracket = lie_bracket(algebra.seed_value(1), algebra.sigma_0)

    # Assert
    assert bracket == FlowVector.of("1 + epsilon", "2")


def test_bracket_is_antisymmetric():
    # Arrange
    algebra = coupled_symmetries()
    left, right = algebra.k_value(1), algebra.seed_value(1)

    # Act & Assert
    assert lie_bracket(left, right) == -lie_bracket(right, left)


def test_bracket_rejects_mismatched_dimensions():
    # Act & Assert
    with pytest.raises(DimensionMismatch):
        lie_bracket(FlowVector.of("u1_x", "u2_x"), FlowVector.of("u1_x"))


def test_nonisospectral_flow_adds_the_seed_flows():
    # Act
    flow = coupled_symmetries().nonisospectral_flow(0)

    # Assert
    assert flow == FlowVector.of("u1_x + k_0/4", "u2_x + k_0/4")
