"""Results file (JSON Lines) and summary CSV persistence."""

# Standard library
import json
from pathlib import Path
from typing import Any, Iterator, Mapping, Optional, TextIO, Union

# Third-party packages
import pandas as pd

# Local imports
from i18n import t
from utils import DataLoadError, ParseError, get_logger

logger = get_logger(__name__)


def encode_record(record: Mapping[str, Any]) -> str:
    """One results line: keys sorted so identical records give identical bytes."""
    return json.dumps(record, sort_keys=True, ensure_ascii=False) + '\n'


class ResultsWriter:
    """
    Append-only writer for ``results.jsonl``; every line is flushed on write.

    Examples:
        >>> with ResultsWriter(tmp_path / 'results.jsonl') as writer:  # doctest: +SKIP
        ...     writer.write({'config_id': 'method=greedy', 'record_index': 0})
    """

    def __init__(self, path: Union[str, Path]) -> None:
        self.path = Path(path)
        self._handle: Optional[TextIO] = None
        self.written = 0

    def __enter__(self) -> 'ResultsWriter':
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self._handle = open(self.path, 'a', encoding='utf-8', newline='\n')
        return self

    def write(self, record: Mapping[str, Any]) -> None:
        if self._handle is None:
            raise RuntimeError('ResultsWriter used outside of a with block')
        self._handle.write(encode_record(record))
        self._handle.flush()
        self.written += 1

    def __exit__(self, *exc_info: object) -> None:
        if self._handle is not None:
            self._handle.close()
            self._handle = None
        logger.debug(f"Wrote {self.written} result line(s) to {self.path}")


def _iter_lines(path: Path) -> Iterator[tuple[int, bytes]]:
    """Yield ``(offset, line)`` for each newline-terminated line."""
    offset = 0
    with open(path, 'rb') as handle:
        for line in handle:
            yield offset, line
            offset += len(line)


def read_results(path: Union[str, Path]) -> list[dict[str, Any]]:
    """
    Read every record of a results file.

    Raises:
        ParseError: If a complete line is not a JSON object.
    """
    file_path = Path(path)
    records: list[dict[str, Any]] = []
    if not file_path.exists():
        return records
    for line_number, (_, line) in enumerate(_iter_lines(file_path), start=1):
        if not line.strip():
            continue
        try:
            payload = json.loads(line)
        except json.JSONDecodeError as e:
            raise ParseError(t('error.invalid_json_line', line=line_number, error=e.msg), line=line_number) from e
        if not isinstance(payload, dict):
            raise ParseError(t('error.record_not_object', line=line_number), line=line_number)
        records.append(payload)
    return records


def read_completed(path: Union[str, Path]) -> tuple[list[dict[str, Any]], set[tuple[str, int]]]:
    """
    Prepare a results file for resuming.

    A trailing line that is not newline-terminated or not valid JSON (an
    interrupted write) is cut off the file. Earlier malformed lines are
    errors.

    Returns:
        The intact records and their ``(config_id, record_index)`` pairs.
    """
    file_path = Path(path)
    if not file_path.exists():
        return [], set()

    records: list[dict[str, Any]] = []
    lines = list(_iter_lines(file_path))
    truncate_at: Optional[int] = None
    for position, (offset, line) in enumerate(lines):
        is_last = position == len(lines) - 1
        try:
            if not line.endswith(b'\n'):
                raise ValueError('unterminated line')
            payload = json.loads(line)
            if not isinstance(payload, dict):
                raise ValueError('not an object')
        except ValueError as e:
            if is_last:
                truncate_at = offset
                break
            raise DataLoadError(t('error.results_corrupt', path=str(file_path), line=position + 1)) from e
        records.append(payload)

    if truncate_at is not None:
        logger.warning(t('warning.results_truncated', path=str(file_path), offset=truncate_at))
        with open(file_path, 'r+b') as handle:
            handle.truncate(truncate_at)

    done = {(str(r['config_id']), int(r['record_index'])) for r in records if 'config_id' in r}
    logger.info(t('log.results_resumed', count=len(done), path=str(file_path)))
    return records, done


def save_summary_csv(frame: pd.DataFrame, path: Union[str, Path]) -> Path:
    """Write the summary table at full precision; missing values are empty cells."""
    file_path = Path(path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(file_path, index=False, na_rep='', lineterminator='\n')
    logger.info(t('log.summary_written', path=str(file_path)))
    return file_path
