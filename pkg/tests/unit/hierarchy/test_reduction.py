import pytest

from hierarchy_forge.exceptions import BadSpec
from hierarchy_forge.hierarchy import ReductionSpec, hierarchy_equation, named_equation, reduce
from hierarchy_forge.spectral import coupled_model, kdv_model, multi_model


def test_scalar_flow_reduces_to_kdv():
    # Arrange
    spec = ReductionSpec.build(isospectral=True, bindings={"alpha": 1})

    # Act
    reduced = reduce(hierarchy_equation(kdv_model(), 1), spec)

    # Assert
    assert reduced.rhs.equivalent(named_equation("kdv").flow())
    assert reduced.reduction == spec


def test_coupled_flow_reduces_to_frobenius_kdv():
    # Arrange
    spec = ReductionSpec.build(isospectral=True, bindings={"alpha1": 1, "alpha2": 0})

    # Act
    reduced = reduce(hierarchy_equation(coupled_model(), 1), spec)

    # Assert
    assert reduced.rhs.equivalent(named_equation("frobenius-kdv").flow())


def test_coupled_zeroth_flow_reduces_to_translation():
    # Arrange
    spec = ReductionSpec.build(isospectral=True, bindings={"alpha1": 1, "alpha2": 0})

    # Act
    reduced = reduce(hierarchy_equation(coupled_model(), 0), spec)

    # Assert
    assert reduced.rhs.equivalent(named_equation("coupled-first-flow").flow())


def test_two_component_multi_flow_reduces_to_coupled():
    # Arrange
    multi = hierarchy_equation(multi_model(2), 1)
    coupled = reduce(hierarchy_equation(coupled_model(), 1), ReductionSpec.build(bindings={"alpha2": 0}))

    # Act
    reduced = reduce(multi, ReductionSpec.build(bindings={"sigma": 1, "beta1": "alpha1"}))

    # Assert
    assert reduced.rhs.equivalent(coupled.rhs)


def test_single_component_multi_flow_is_the_scalar_flow():
    # Act
    reduced = reduce(hierarchy_equation(multi_model(1), 1), ReductionSpec.build(bindings={"beta1": "alpha"}))

    # Assert
    assert reduced.rhs.equivalent(named_equation("nonisospectral-kdv").flow())


def test_dropping_the_second_field_of_frobenius_kdv():
    # Arrange
    spec = ReductionSpec.build(
        isospectral=True,
        bindings={"alpha1": 1, "alpha2": 0},
        keep_components=1,
    )

    # Act
    reduced = reduce(hierarchy_equation(coupled_model(), 1), spec)

    # Assert
    assert reduced.rhs.equivalent(named_equation("kdv").flow())


@pytest.mark.parametrize("model", [kdv_model(), coupled_model(), multi_model(3)], ids=["kdv", "coupled", "multi"])
def test_isospectral_reduction_commutes_with_generation(model):
    # Act
    reduced = reduce(hierarchy_equation(model, 2), ReductionSpec.build(isospectral=True))
    generated = hierarchy_equation(model.with_isospectral(), 2)

    # Assert
    assert reduced.rhs.equivalent(generated.rhs)


@pytest.mark.parametrize(
    ("spec", "message"),
    [
        (ReductionSpec.build(bindings={"gamma": 1}), "Unknown parameter"),
        (ReductionSpec.build(bindings={"alpha1": "u1"}), "only be bound to a scalar"),
        (ReductionSpec.build(keep_components=0), "Cannot keep 0"),
        (ReductionSpec.build(keep_components=3), "Cannot keep 3"),
        (ReductionSpec.build(keep_components=1), "inconsistent"),
    ],
)
def test_invalid_reductions(spec, message):
    # Arrange
    equation = hierarchy_equation(coupled_model(), 1)

    # Act & Assert
    with pytest.raises(BadSpec, match=message):
        reduce(equation, spec)
