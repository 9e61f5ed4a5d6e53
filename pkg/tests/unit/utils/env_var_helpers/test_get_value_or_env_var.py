from unittest.mock import patch

import pytest

from hierarchy_forge.exceptions import HierarchyForgeValueError
from hierarchy_forge.utils.env_var_helpers import (
    DEFAULT_MAX_ORDER,
    DEFAULT_SEED,
    ValueNotSetError,
    get_max_order,
    get_seed,
    get_value_or_env_var,
)


def test_get_value_with_value_provided():
    # Arrange
    value = "test_value"
    env_var = "UNUSED_ENV_VAR"

    # Act
    result = get_value_or_env_var(value, env_var)

    # Assert
    assert result == value


@patch.dict("os.environ", {"TEST_ENV_VAR": "env_test_value"})
def test_get_value_with_env_var_set():
    # Act
    result = get_value_or_env_var(None, "TEST_ENV_VAR")

    # Assert
    assert result == "env_test_value"


@patch.dict("os.environ", {}, clear=True)
def test_get_value_raises_exception():
    # Arrange
    env_var = "TEST_ENV_VAR"

    # Act & Assert
    with pytest.raises(
        ValueNotSetError,
        match=f"No value provided and the environment variable '{env_var}' is also not set.",
    ):
        get_value_or_env_var(None, env_var)


@patch.dict("os.environ", {}, clear=True)
def test_defaults_apply_without_environment():
    # Act & Assert
    assert get_max_order() == DEFAULT_MAX_ORDER
    assert get_seed() == DEFAULT_SEED


@patch.dict("os.environ", {"HIERARCHY_FORGE_MAX_ORDER": "7", "HIERARCHY_FORGE_SEED": "11"})
def test_environment_overrides_defaults():
    # Act & Assert
    assert get_max_order() == 7
    assert get_seed() == 11


@patch.dict("os.environ", {"HIERARCHY_FORGE_MAX_ORDER": "7"})
def test_explicit_value_wins_over_environment():
    # Act
    result = get_max_order(2)

    # Assert
    assert result == 2


@patch.dict("os.environ", {"HIERARCHY_FORGE_SEED": "many"})
def test_non_integer_environment_value_is_rejected():
    # Act & Assert
    with pytest.raises(HierarchyForgeValueError, match="Expected an integer"):
        get_seed()
