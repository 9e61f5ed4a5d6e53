from pathlib import Path
from unittest.mock import patch

import pytest

from hierarchy_forge.cli.config import Command, JobConfig, OutputFormat, TimeMode
from hierarchy_forge.exceptions import BadModel, HierarchyForgeValueError, OrderExceeded
from hierarchy_forge.spectral import ModelKind


@pytest.mark.parametrize(
    ("model", "expected"),
    [("kdv", 1), ("coupled", 2)],
    ids=["kdv", "coupled"],
)
def test_fixed_models_fill_in_the_component_count(model, expected):
    # Act
    config = JobConfig.build("gen", model=model)

    # Assert
    assert config.n_components == expected
    assert config.spectral_model().n_components == expected


def test_build_converts_every_field():
    # Act
    config = JobConfig.build(
        "verify",
        model="multi",
        n_components=3,
        order=2,
        bindings={"sigma": "1"},
        time_mode="zero",
        output_format="json",
        out="summary.json",
        timing=True,
    )

    # Assert
    assert config.command is Command.VERIFY
    assert config.model is ModelKind.MULTI
    assert config.time_mode is TimeMode.ZERO
    assert config.isospectral
    assert config.output_format is OutputFormat.JSON
    assert config.out == Path("summary.json")
    assert config.spectral_model().isospectral


@pytest.mark.parametrize(
    ("kwargs", "error", "message"),
    [
        ({"model": "multi"}, BadModel, "needs --N"),
        ({"model": "multi", "n_components": 0}, BadModel, "at least 1"),
        ({"model": "kdv", "n_components": 2}, BadModel, "N=1"),
        ({"model": "coupled", "n_components": 3}, BadModel, "N=2"),
        ({"order": -1}, HierarchyForgeValueError, "nonnegative"),
        ({"model": "dispersionless"}, BadModel, "Unknown model"),
    ],
    ids=["multi-without-n", "zero-components", "kdv-n", "coupled-n", "negative-order", "unknown-model"],
)
def test_invalid_configurations(kwargs, error, message):
    # Act & Assert
    with pytest.raises(error, match=message):
        JobConfig.build("gen", **kwargs)


@patch.dict("os.environ", {"HIERARCHY_FORGE_MAX_ORDER": "2"})
def test_order_is_capped_by_the_environment():
    # Act & Assert
    assert JobConfig.build("gen", order=2).order == 2
    with pytest.raises(OrderExceeded, match="HIERARCHY_FORGE_MAX_ORDER"):
        JobConfig.build("gen", order=3)


def test_unknown_binding_fails_when_building_the_model():
    # Arrange
    config = JobConfig.build("gen", model="kdv", bindings={"sigma": "2"})

    # Act & Assert
    with pytest.raises(BadModel, match="sigma"):
        config.spectral_model()
