from __future__ import annotations

import os

from hierarchy_forge.exceptions import HierarchyForgeValueError

MAX_ORDER_ENV_VAR = "HIERARCHY_FORGE_MAX_ORDER"
DEFAULT_MAX_ORDER = 4
SEED_ENV_VAR = "HIERARCHY_FORGE_SEED"
DEFAULT_SEED = 20240917


class ValueNotSetError(HierarchyForgeValueError):
    pass


def get_value_or_env_var(
    value: str | None,
    env_var: str,
    default: str | None = None,
    exc: type[Exception] = ValueNotSetError,
) -> str:
    value = (value or "").strip()
    if value:
        return value

    env_value = os.environ.get(env_var, "").strip()
    if env_value:
        return env_value

    if default is not None:
        return default

    msg = f"No value provided and the environment variable '{env_var}' is also not set."
    raise exc(msg)


def get_int_or_env_var(
    value: int | None,
    env_var: str,
    default: int,
) -> int:
    raw = get_value_or_env_var(
        None if value is None else str(value),
        env_var,
        str(default),
    )
    try:
        return int(raw)
    except ValueError:
        msg = f"Expected an integer for '{env_var}', got {raw!r}."
        raise HierarchyForgeValueError(msg) from None


def get_max_order(value: int | None = None) -> int:
    return get_int_or_env_var(value, MAX_ORDER_ENV_VAR, DEFAULT_MAX_ORDER)


def get_seed(value: int | None = None) -> int:
    return get_int_or_env_var(value, SEED_ENV_VAR, DEFAULT_SEED)
