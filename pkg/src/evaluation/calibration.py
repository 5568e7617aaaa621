"""Calibration of length bins from validation query counts."""

# Standard library
import math
from typing import Any, Iterable, Union

# Third-party packages
import numpy as np
import pandas as pd

# Local imports
from config import DEFAULT_NUM_BINS, FALLBACK_N
from i18n import t
from selection import Bin, BinTable, format_bound
from utils import EmptyBin, ValidationError, get_logger

logger = get_logger(__name__)

_COLUMNS = ['length', 'n', 'queries']


def _as_frame(validation: Union[pd.DataFrame, Iterable[Any]]) -> pd.DataFrame:
    if isinstance(validation, pd.DataFrame):
        frame = validation.copy()
    else:
        rows = list(validation)
        if rows and isinstance(rows[0], dict):
            frame = pd.DataFrame(rows)
        else:
            frame = pd.DataFrame(rows, columns=_COLUMNS)
    missing = [c for c in _COLUMNS if c not in frame.columns]
    if missing:
        raise ValidationError(t('error.calibration_columns', missing=', '.join(missing)))
    frame = frame[_COLUMNS]
    if frame.empty:
        raise ValidationError(t('error.calibration_empty'))
    try:
        frame = frame.astype({'length': int, 'n': int, 'queries': float})
    except (TypeError, ValueError) as e:
        raise ValidationError(t('error.calibration_values', error=str(e))) from e
    if (frame['length'] < 1).any() or (frame['n'] < 2).any() or (frame['queries'] < 0).any():
        raise ValidationError(t('error.calibration_values', error='length >= 1, n >= 2, queries >= 0'))
    return frame


def calibrate_bins(
    validation: Union[pd.DataFrame, Iterable[Any]],
    num_bins: int = DEFAULT_NUM_BINS,
    dataset_id: str = 'calibrated',
    open_ended: bool = True,
    strict: bool = False,
) -> BinTable:
    """
    Build length bins choosing, per bin, the N with the lowest mean query count.

    Bins are ``num_bins`` equal-width intervals over ``(0, max_length]``,
    where ``max_length`` is the longest validation document. Ties go to the
    smaller N. The result does not depend on the order of the input rows.

    Args:
        validation: Rows ``(length, n, queries)`` as tuples, dicts or a DataFrame.
        num_bins: Number of bins (>= 1).
        dataset_id: Id stored in the resulting table.
        open_ended: Write the last upper bound as ``max`` (no upper limit).
        strict: Raise on a bin without examples instead of using the fallback N.

    Returns:
        The calibrated :class:`BinTable`.

    Raises:
        ValidationError: On malformed input rows.
        EmptyBin: If ``strict`` and some bin has no examples.

    Examples:
        A longest document of 1000 tokens gives upper bounds
        200, 400, 600, 800 and 1000 (or ``max``).
    """
    if num_bins < 1:
        raise ValidationError(t('error.integer_below_minimum', name='num_bins', value=num_bins, minimum=1))
    frame = _as_frame(validation)

    max_length = int(frame['length'].max())
    width = max_length / num_bins
    uppers = np.array([width * (i + 1) for i in range(num_bins)], dtype=float)
    uppers[-1] = float(max_length)
    lowers = np.concatenate(([0.0], uppers[:-1]))

    frame['bin'] = np.searchsorted(uppers, frame['length'].to_numpy(dtype=float), side='left')
    means = frame.groupby(['bin', 'n'])['queries'].mean()

    bins: list[Bin] = []
    for b in range(num_bins):
        upper = math.inf if (open_ended and b == num_bins - 1) else float(uppers[b])
        if b not in means.index.get_level_values('bin'):
            message = t('error.empty_bin', lower=format_bound(lowers[b]), upper=format_bound(upper))
            if strict:
                logger.error(message)
                raise EmptyBin(message)
            logger.warning(message)
            chosen = FALLBACK_N
        else:
            per_n = means.xs(b, level='bin').sort_index()
            chosen = int(per_n.idxmin())
            logger.debug(f"Bin {b}: mean queries per N {per_n.to_dict()} -> N={chosen}")
        bins.append(Bin(float(lowers[b]), upper, chosen))

    table = BinTable(dataset_id, tuple(bins))
    logger.info(f"Calibrated {num_bins} bins over lengths up to {max_length} for '{dataset_id}'")
    return table
