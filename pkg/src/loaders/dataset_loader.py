"""
Dataset loading for benchmark runs.

Datasets are JSON Lines files, one ``{"text": "...", "label": k}`` object per
line. Blank lines are ignored; any other malformed line is rejected with its
1-based line number.
"""

# Standard library
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence, Union

# Third-party packages
import numpy as np

# Local imports
from i18n import t
from textmodel import tokenize
from utils import (
    DataLoadError,
    EmptyDataset,
    EmptyText,
    ParseError,
    ValidationError,
    get_logger,
    validate_file_path,
)

logger = get_logger(__name__)


@dataclass(frozen=True)
class DatasetRecord:
    """One labelled example."""

    text: str
    label: int


def _parse_line(raw: str, line_number: int) -> DatasetRecord:
    try:
        payload = json.loads(raw)
    except json.JSONDecodeError as e:
        raise ParseError(t('error.invalid_json_line', line=line_number, error=e.msg), line=line_number) from e
    if not isinstance(payload, dict):
        raise ParseError(t('error.record_not_object', line=line_number), line=line_number)
    missing = [key for key in ('text', 'label') if key not in payload]
    if missing:
        raise ParseError(t('error.record_missing_field', line=line_number, field=missing[0]), line=line_number)
    text, label = payload['text'], payload['label']
    if not isinstance(text, str):
        raise ParseError(t('error.record_bad_text', line=line_number), line=line_number)
    if isinstance(label, bool) or not isinstance(label, int) or label < 0:
        raise ParseError(t('error.record_bad_label', line=line_number, value=label), line=line_number)
    try:
        tokenize(text)
    except EmptyText as e:
        raise ParseError(t('error.record_empty_text', line=line_number), line=line_number) from e
    return DatasetRecord(text=text, label=label)


def load_dataset(path: Union[str, Path]) -> list[DatasetRecord]:
    """
    Load a JSONL dataset, preserving line order.

    Args:
        path: Dataset file path.

    Returns:
        Records in file order.

    Raises:
        FileNotFoundError: If the file does not exist.
        ParseError: On the first malformed line (``line`` attribute set).
        EmptyDataset: If the file holds no records.
        DataLoadError: If the file cannot be read.
    """
    file_path = validate_file_path(path)
    logger.info(t('log.loading_dataset', path=str(file_path)))
    records: list[DatasetRecord] = []
    try:
        with open(file_path, encoding='utf-8') as handle:
            for line_number, raw in enumerate(handle, start=1):
                if not raw.strip():
                    continue
                records.append(_parse_line(raw, line_number))
    except ParseError as e:
        logger.error(t('log.dataset_parse_failed', path=str(file_path), error=str(e)))
        raise
    except (OSError, UnicodeDecodeError) as e:
        logger.error(t('log.dataset_read_failed', path=str(file_path), error=str(e)), exc_info=True)
        raise DataLoadError(t('error.dataset_read_failed', path=str(file_path), error=str(e))) from e

    if not records:
        logger.error(t('log.dataset_empty', path=str(file_path)))
        raise EmptyDataset(t('error.dataset_empty', path=str(file_path)))
    logger.info(t('log.dataset_loaded', count=len(records)))
    return records


def sample_indices(total: int, sample_size: int, seed: Optional[int] = None) -> list[int]:
    """
    Seed-deterministic sorted sample of record indices without replacement.

    When ``sample_size`` is at least ``total`` every index is returned.

    Examples:
        >>> sample_indices(5, 10)
        [0, 1, 2, 3, 4]
    """
    if sample_size < 1:
        raise ValidationError(t('error.integer_below_minimum', name='sample', value=sample_size, minimum=1))
    if sample_size >= total:
        return list(range(total))
    rng = np.random.default_rng(seed)
    chosen = rng.choice(total, size=sample_size, replace=False)
    return sorted(int(i) for i in chosen)


def sample_records(
    records: Sequence[DatasetRecord],
    sample_size: int,
    seed: Optional[int] = None,
) -> list[tuple[int, DatasetRecord]]:
    """Sampled ``(index, record)`` pairs in index order; identical for every config of a run."""
    return [(i, records[i]) for i in sample_indices(len(records), sample_size, seed)]


def validate_labels(records: Sequence[DatasetRecord], num_labels: Optional[int]) -> None:
    """
    Check every label fits the classifier's label range.

    Does nothing when the label count is not yet known (remote classifier
    before its first reply).

    Raises:
        ValidationError: On the first out-of-range label.
    """
    if num_labels is None:
        return
    for index, record in enumerate(records):
        if record.label >= num_labels:
            logger.error(t('error.label_out_of_range', index=index, label=record.label, num_labels=num_labels))
            raise ValidationError(t('error.label_out_of_range', index=index, label=record.label, num_labels=num_labels))
