"""
Input validation utilities for QueryLean.

Shared checks for file paths, numeric parameters and probability vectors.
Each validator logs the failure before raising.
"""

# Standard library
from pathlib import Path
from typing import Sequence, Union

# Third-party packages
import numpy as np

# Local imports
from config import PROB_TOLERANCE
from .exceptions import FileNotFoundError, MalformedResponse, ValidationError
from .logger import get_logger
from i18n import t

logger = get_logger(__name__)


def validate_file_path(file_path: Union[str, Path]) -> Path:
    """
    Validate that a file path exists and is a regular file.

    Args:
        file_path: Path to the file

    Returns:
        The path as :class:`pathlib.Path`.

    Raises:
        FileNotFoundError: If file does not exist
        ValidationError: If path is not a file
    """
    path = Path(file_path)

    if not path.exists():
        logger.error(t('log.file_not_found', path=file_path))
        raise FileNotFoundError(t('error.file_not_found', path=file_path))

    if not path.is_file():
        logger.error(t('log.path_not_file', path=file_path))
        raise ValidationError(t('error.path_not_file', path=file_path))

    return path


def validate_positive_integer(value: int, name: str, minimum: int = 1) -> int:
    """
    Validate that ``value`` is an integer not smaller than ``minimum``.

    Args:
        value: Value to check.
        name: Parameter name used in the error message.
        minimum: Smallest accepted value.

    Returns:
        The value, unchanged.

    Raises:
        ValidationError: If the value is not an integer or is below ``minimum``.
    """
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        logger.error(f"Parameter {name} must be an integer, got {value!r}")
        raise ValidationError(t('error.integer_required', name=name, value=value))
    if value < minimum:
        logger.error(f"Parameter {name}={value} is below minimum {minimum}")
        raise ValidationError(t('error.integer_below_minimum', name=name, value=value, minimum=minimum))
    return int(value)


def validate_fraction(value: float, name: str) -> float:
    """
    Validate that ``value`` lies in the half-open interval (0, 1].

    Args:
        value: Value to check.
        name: Parameter name used in the error message.

    Returns:
        The value as float.

    Raises:
        ValidationError: If the value is outside (0, 1].
    """
    try:
        fraction = float(value)
    except (TypeError, ValueError) as e:
        raise ValidationError(t('error.fraction_out_of_range', name=name, value=value)) from e
    if not (0.0 < fraction <= 1.0):
        logger.error(f"Parameter {name}={value} outside (0, 1]")
        raise ValidationError(t('error.fraction_out_of_range', name=name, value=value))
    return fraction


def validate_probability_vector(
    probs: Sequence[float], num_labels: int, tolerance: float = PROB_TOLERANCE
) -> tuple[float, ...]:
    """
    Validate a per-label probability vector returned by a classifier.

    Args:
        probs: Candidate probability values.
        num_labels: Expected vector length.
        tolerance: Allowed deviation of the sum from 1.

    Returns:
        The probabilities as a tuple of floats.

    Raises:
        MalformedResponse: On wrong length, values outside [0, 1], non-finite
            values or a sum farther than ``tolerance`` from 1.

    Examples:
        >>> validate_probability_vector([0.25, 0.75], 2)
        (0.25, 0.75)
    """
    try:
        arr = np.asarray(probs, dtype=float)
    except (TypeError, ValueError) as e:
        raise MalformedResponse(t('error.malformed_probs', detail=str(e))) from e

    if arr.ndim != 1 or arr.shape[0] != num_labels:
        detail = f"expected {num_labels} values, got shape {arr.shape}"
        logger.error(f"Malformed probability vector: {detail}")
        raise MalformedResponse(t('error.malformed_probs', detail=detail))

    if not np.all(np.isfinite(arr)) or np.any(arr < 0.0) or np.any(arr > 1.0):
        detail = f"values outside [0, 1]: {arr.tolist()}"
        logger.error(f"Malformed probability vector: {detail}")
        raise MalformedResponse(t('error.malformed_probs', detail=detail))

    total = float(arr.sum())
    if abs(total - 1.0) > tolerance:
        detail = f"sum {total!r} differs from 1"
        logger.error(f"Malformed probability vector: {detail}")
        raise MalformedResponse(t('error.malformed_probs', detail=detail))

    return tuple(float(p) for p in arr)
