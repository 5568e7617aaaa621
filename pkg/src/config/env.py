"""Environment variable loading and .env schema."""

import os
from pathlib import Path
from typing import Any, Type, Union

from config.constants import (
    LANGUAGE_ALIASES,
    SUPPORTED_LANGUAGE_CODES,
    VALID_LANGUAGE_INPUTS,
)

# Type for env schema cast_type (str, int, float, bool)
_EnvCastType = Type[Union[str, int, float, bool]]

try:
    from dotenv import load_dotenv
    # __file__ is src/config/env.py -> project root is three levels up
    _env_path = Path(__file__).resolve().parent.parent.parent / '.env'
    load_dotenv(dotenv_path=_env_path, override=False)
except ImportError:
    pass


# Logging defaults (single source of truth for ENV_SCHEMA and utils.logger)
DEFAULT_LOG_LEVEL = 'WARNING'
DEFAULT_LOG_FILE = 'querylean.log'

LOG_LEVEL_OPTIONS: tuple[str, ...] = ('error', 'warning', 'info', 'debug')

# Integer keys where 0 means "automatic" or "unlimited"; negatives are rejected
_NON_NEGATIVE_INT_FIELDS: frozenset[str] = frozenset({'WORKERS', 'MAX_CANDIDATES'})

# Order defines the order of the generated .env template.
ENV_SCHEMA: list[dict[str, Any]] = [
    # --- language ---
    {'key': 'LANGUAGE', 'default': 'en', 'cast_type': str, 'options': SUPPORTED_LANGUAGE_CODES},
    # --- logging ---
    {'key': 'QUERYLEAN_LOG', 'default': DEFAULT_LOG_LEVEL.lower(), 'cast_type': str, 'options': LOG_LEVEL_OPTIONS},
    {'key': 'LOG_FILE', 'default': DEFAULT_LOG_FILE, 'cast_type': str},
    {'key': 'LOG_CONSOLE', 'default': True, 'cast_type': bool},
    # --- paths ---
    {'key': 'OUTPUT_DIR', 'default': 'output', 'cast_type': str},
    # --- remote oracles ---
    {'key': 'HTTP_TIMEOUT', 'default': 30.0, 'cast_type': float},
    # --- benchmark ---
    {'key': 'WORKERS', 'default': 0, 'cast_type': int},
    {'key': 'MAX_CANDIDATES', 'default': 0, 'cast_type': int},
]

# O(1) lookup by key for get_env and related functions
_ENV_SCHEMA_BY_KEY: dict[str, dict[str, Any]] = {item['key']: item for item in ENV_SCHEMA}


def _validate_env_value(
    key: str,
    value: Any,
    schema_item: dict[str, Any]
) -> tuple[bool, Any]:
    """
    Validate an environment variable value according to its schema.

    Args:
        key: Environment variable name.
        value: The value to validate (already cast to the correct type).
        schema_item: Schema item from ENV_SCHEMA containing validation rules.

    Returns:
        Tuple of (is_valid, corrected_value). If valid, corrected_value is the
        (possibly normalized) value. If invalid, corrected_value is the default.
    """
    default = schema_item['default']
    cast_type = schema_item['cast_type']

    if value is None:
        return False, default

    if key == 'LANGUAGE' and cast_type is str:
        lang_lower = str(value).strip().lower()
        if lang_lower not in VALID_LANGUAGE_INPUTS:
            return False, default
        return True, LANGUAGE_ALIASES.get(lang_lower, lang_lower)

    if 'options' in schema_item:
        options = schema_item['options']
        if cast_type is str:
            normalized = str(value).strip().lower()
            if normalized not in [opt.lower() for opt in options]:
                return False, default
            return True, normalized
        if value not in options:
            return False, default

    if cast_type is int:
        try:
            int_value = int(value)
        except (TypeError, ValueError, OverflowError):
            return False, default
        if key in _NON_NEGATIVE_INT_FIELDS and int_value < 0:
            return False, default
        return True, int_value

    if cast_type is float:
        try:
            float_value = float(value)
        except (TypeError, ValueError, OverflowError):
            return False, default
        if key == 'HTTP_TIMEOUT' and not (0 < float_value <= 600):
            return False, default
        return True, float_value

    if cast_type is str:
        str_value = str(value).strip()
        if not str_value:
            return False, default
        return True, str_value

    return True, value


def _cast(value: str, cast_type: _EnvCastType) -> Any:
    if cast_type is bool:
        return value.strip().lower() in ('true', '1', 'yes')
    return cast_type(value)


def _was_value_corrected(
    key: str,
    current_value: Any,
    cast_type: _EnvCastType,
    schema_item: dict[str, Any]
) -> bool:
    """
    Check if an environment value was corrected during validation.

    Args:
        key: Environment variable name.
        current_value: The validated/corrected value.
        cast_type: Type to cast the value to.
        schema_item: Schema definition for this environment variable.

    Returns:
        True if the original value was invalid or different from current_value.
    """
    original_value = os.getenv(key)
    if original_value is None:
        return False

    try:
        original_casted = _cast(original_value, cast_type)
    except (ValueError, TypeError):
        return True

    is_valid, validated_value = _validate_env_value(key, original_casted, schema_item)
    return not is_valid or validated_value != current_value


def get_env_from_schema(key: str) -> Any:
    """
    Get environment variable using ENV_SCHEMA defaults and cast types.

    Args:
        key: Environment variable name (must exist in ENV_SCHEMA).

    Returns:
        The validated value from get_env(key, default, cast_type).

    Raises:
        KeyError: If key is not in ENV_SCHEMA.
    """
    item = _ENV_SCHEMA_BY_KEY.get(key)
    if item is None:
        raise KeyError(f"Unknown env key: {key}")
    return get_env(key, item['default'], item['cast_type'])


def get_env(
    key: str,
    default: Any,
    cast_type: _EnvCastType = str
) -> Union[str, int, float, bool]:
    """
    Get environment variable with type casting, validation, and default value.

    Values that fail the ENV_SCHEMA rules fall back to ``default``.

    Args:
        key: Environment variable name.
        default: Default value if variable not found or invalid.
        cast_type: Type to cast the value to (str, int, float, bool).

    Returns:
        The environment variable value cast to the specified type, validated,
        or default if invalid or missing.

    Examples:
        >>> os.environ['WORKERS'] = '4'
        >>> get_env('WORKERS', 0, int)
        4
    """
    value = os.getenv(key)
    if value is None:
        return default

    try:
        casted_value = _cast(value, cast_type)
    except (ValueError, TypeError):
        return default

    schema_item = _ENV_SCHEMA_BY_KEY.get(key)
    if schema_item is None:
        return casted_value

    _, corrected_value = _validate_env_value(key, casted_value, schema_item)
    return corrected_value


def validate_all_env_values() -> dict[str, tuple[Any, bool]]:
    """
    Validate all environment values according to ENV_SCHEMA.

    Returns:
        Dictionary mapping environment keys to tuples of (corrected_value, was_corrected).

    Examples:
        >>> results = validate_all_env_values()
        >>> results["QUERYLEAN_LOG"]
        ('warning', False)
    """
    results: dict[str, tuple[Any, bool]] = {}
    for item in ENV_SCHEMA:
        key = item['key']
        current_value = get_env(key, item['default'], item['cast_type'])
        was_corrected = _was_value_corrected(key, current_value, item['cast_type'], item)
        results[key] = (current_value, was_corrected)
    return results


def write_env_template(env_path: Path) -> None:
    """
    Write a ``.env`` template listing every ENV_SCHEMA key with its default.

    Args:
        env_path: Destination path for the template file.
    """
    lines = [
        '# QueryLean configuration',
        '# Copy to .env and edit. Invalid values fall back to the defaults below.',
        '',
    ]
    for item in ENV_SCHEMA:
        default = item['default']
        if item['cast_type'] is bool:
            default = 'true' if default else 'false'
        if 'options' in item:
            lines.append(f"# options: {', '.join(str(o) for o in item['options'])}")
        lines.append(f"{item['key']}={default}")
    env_path.write_text('\n'.join(lines) + '\n', encoding='utf-8')


def initialize_and_validate_config() -> dict[str, Any]:
    """
    Validate all environment values at startup and log any corrections.

    Returns:
        Mapping of ENV_SCHEMA keys to their effective values.
    """
    from utils import get_logger
    logger = get_logger(__name__)

    validation_results = validate_all_env_values()
    corrected_keys = [key for key, (_, was_corrected) in validation_results.items() if was_corrected]

    if corrected_keys:
        logger.warning(
            f"Found {len(corrected_keys)} invalid environment variable(s) that were corrected to defaults: "
            f"{', '.join(corrected_keys)}"
        )
        for key in corrected_keys:
            original = os.getenv(key, '<missing>')
            corrected = validation_results[key][0]
            logger.info(f"  {key}: '{original}' -> '{corrected}' (default)")

    return {key: value for key, (value, _) in validation_results.items()}
