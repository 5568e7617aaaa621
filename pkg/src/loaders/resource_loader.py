"""
Readers and writers for attack resources.

    - Synonym lexicon TSV, no header: ``headword<TAB>syn1,syn2,...`` ranked best first
    - Classifier weights TSV, no header: ``token<TAB>w_0<TAB>w_1...``; an optional
      ``#bias<TAB>b_0<TAB>b_1...`` line sets the bias
    - Bin table TSV: ``lower<TAB>upper<TAB>n`` with ``max`` as an open upper bound
    - Validation results JSONL for calibration: ``{"length", "n", "queries"}``
    - Run configuration YAML: flat mapping of CLI flag names to values
"""

# Standard library
from functools import lru_cache
from pathlib import Path
from typing import Any, Optional, Union

# Third-party packages
import pandas as pd
import yaml

# Local imports
from config import BUILTIN_BIN_DATASETS, builtin_bins_path
from i18n import t
from oracle import BagOfWordsClassifier
from replacement import SynonymLexicon
from selection import BinTable, format_bound, parse_bound
from utils import (
    ConfigurationError,
    DataLoadError,
    LexiconError,
    ValidationError,
    get_logger,
    validate_file_path,
)

logger = get_logger(__name__)

BIAS_TOKEN = '#bias'
_BIN_COLUMNS = ['lower', 'upper', 'n']


def _parse_tsv(file_path: Path, **read_options: Any) -> pd.DataFrame:
    """Run ``pd.read_csv`` over a tab-separated file, mapping pandas errors to DataLoadError."""
    try:
        return pd.read_csv(
            file_path, sep='\t', dtype=str, keep_default_na=False, quoting=3, **read_options
        )
    except pd.errors.EmptyDataError as e:
        logger.error(t('log.tsv_file_empty', path=str(file_path)))
        raise DataLoadError(t('error.tsv_file_empty', path=str(file_path))) from e
    except pd.errors.ParserError as e:
        logger.error(t('log.tsv_parsing_error', path=str(file_path), error=str(e)))
        raise DataLoadError(t('error.tsv_parsing_error', path=str(file_path), error=str(e))) from e


def _read_tsv(file_path: Path, required: list[str]) -> pd.DataFrame:
    """Read a tab-separated file as strings, checking the header."""
    data = _parse_tsv(file_path)
    missing = [c for c in required if c not in data.columns]
    if missing:
        logger.error(t('log.tsv_missing_columns', path=str(file_path), columns=', '.join(missing)))
        raise DataLoadError(t('error.tsv_missing_columns', path=str(file_path), columns=', '.join(missing)))
    return data


def _read_headerless_tsv(file_path: Path, keep_blank_lines: bool = False) -> pd.DataFrame:
    """
    Read a header-less tab-separated file as strings with integer column labels.

    Fields missing at the end of a short line come back as empty strings. With
    ``keep_blank_lines`` row ``i`` is file line ``i + 1``.
    """
    data = _parse_tsv(file_path, header=None, skip_blank_lines=not keep_blank_lines)
    return data.fillna('')


def load_lexicon(path: Union[str, Path], max_candidates: Optional[int] = None) -> SynonymLexicon:
    """
    Load a ranked synonym lexicon.

    Each line is ``headword<TAB>syn1,syn2,...`` with the most similar synonym
    first. Blank lines and lines without synonyms are skipped, the latter with a
    warning.

    Raises:
        FileNotFoundError: If the file does not exist.
        LexiconError: On a repeated headword.
        DataLoadError: If the file cannot be parsed or a line has extra fields.
    """
    file_path = validate_file_path(path)
    logger.info(t('log.loading_lexicon', path=str(file_path)))
    data = _read_headerless_tsv(file_path, keep_blank_lines=True)
    if data.shape[1] == 1:
        data[1] = ''
    if data.shape[1] != 2:
        details = {'path': str(file_path), 'expected': 2, 'found': data.shape[1]}
        logger.error(t('log.tsv_column_count', **details))
        raise DataLoadError(t('error.tsv_column_count', **details))

    entries: dict[str, list[str]] = {}
    skipped = 0
    for line_number, (word, synonyms) in enumerate(zip(data[0], data[1]), start=1):
        key = word.strip().lower()
        ranked = [s.strip() for s in synonyms.split(',') if s.strip()]
        if not key and not ranked:
            continue
        if not key or not ranked:
            skipped += 1
            continue
        if key in entries:
            logger.error(t('error.lexicon_duplicate', word=key, line=line_number))
            raise LexiconError(t('error.lexicon_duplicate', word=key, line=line_number))
        entries[key] = ranked
    if skipped:
        logger.warning(t('warning.lexicon_rows_skipped', count=skipped, path=str(file_path)))

    lexicon = SynonymLexicon(entries, max_candidates=max_candidates)
    logger.info(t('log.lexicon_loaded', count=len(lexicon)))
    return lexicon


def load_classifier_weights(path: Union[str, Path]) -> BagOfWordsClassifier:
    """
    Build the builtin bag-of-words classifier from a weights TSV.

    Each line is ``token<TAB>w_0<TAB>w_1...``, one weight per label in label
    order. A line whose token is ``#bias`` sets the bias vector; without it the
    bias is zero.

    Raises:
        FileNotFoundError: If the file does not exist.
        ConfigurationError: If weights are not numeric or fewer than 2 labels.
    """
    file_path = validate_file_path(path)
    logger.info(t('log.loading_weights', path=str(file_path)))
    data = _read_headerless_tsv(file_path)
    num_labels = data.shape[1] - 1
    if num_labels < 2:
        raise ConfigurationError(
            t('error.integer_below_minimum', name='num_labels', value=num_labels, minimum=2)
        )
    try:
        values = data[list(range(1, num_labels + 1))].astype(float)
    except ValueError as e:
        logger.error(t('log.weights_not_numeric', path=str(file_path), error=str(e)))
        raise ConfigurationError(t('error.weights_not_numeric', path=str(file_path), error=str(e))) from e

    bias = None
    weights: dict[str, list[float]] = {}
    for token, row in zip(data[0], values.itertuples(index=False)):
        if token == BIAS_TOKEN:
            bias = list(row)
        else:
            weights[token] = list(row)
    return BagOfWordsClassifier(weights, bias=bias, num_labels=num_labels)


def load_bin_table(path: Union[str, Path], dataset_id: Optional[str] = None) -> BinTable:
    """
    Load a length-bin table; the dataset id defaults to the file stem.

    Raises:
        FileNotFoundError: If the file does not exist.
        DataLoadError: On unparsable bounds.
        ValidationError: On invalid or overlapping bins.
    """
    file_path = validate_file_path(path)
    data = _read_tsv(file_path, _BIN_COLUMNS)
    try:
        rows = [(parse_bound(lo), parse_bound(hi), int(n)) for lo, hi, n in data[_BIN_COLUMNS].itertuples(index=False)]
    except ValueError as e:
        logger.error(t('log.tsv_parsing_error', path=str(file_path), error=str(e)))
        raise DataLoadError(t('error.tsv_parsing_error', path=str(file_path), error=str(e))) from e
    table = BinTable.from_rows(dataset_id or file_path.stem, rows)
    logger.debug(f"Loaded {len(table)} bins for '{table.dataset_id}' from {file_path}")
    return table


def write_bin_table(table: BinTable, path: Union[str, Path]) -> Path:
    """Write ``table`` in the format read by :func:`load_bin_table`."""
    file_path = Path(path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    frame = pd.DataFrame(
        [(format_bound(b.lower), format_bound(b.upper), b.n) for b in table.bins],
        columns=_BIN_COLUMNS,
    )
    frame.to_csv(file_path, sep='\t', index=False, lineterminator='\n')
    logger.info(t('log.bins_written', path=str(file_path)))
    return file_path


@lru_cache(maxsize=None)
def builtin_bin_table(dataset_id: str) -> BinTable:
    """
    Shipped length bins for ``imdb``, ``yelp`` or ``agnews``.

    Raises:
        ValidationError: For any other dataset id.
    """
    key = dataset_id.strip().lower()
    if key not in BUILTIN_BIN_DATASETS:
        raise ValidationError(
            t('error.invalid_choice', name='dataset-id', value=dataset_id, options=', '.join(BUILTIN_BIN_DATASETS))
        )
    return load_bin_table(builtin_bins_path(key), dataset_id=key)


def load_validation_results(path: Union[str, Path]) -> pd.DataFrame:
    """
    Read calibration rows from JSON Lines.

    Raises:
        DataLoadError: If the file cannot be parsed.
    """
    file_path = validate_file_path(path)
    try:
        frame = pd.read_json(file_path, lines=True)
    except ValueError as e:
        logger.error(t('log.validation_read_failed', path=str(file_path), error=str(e)))
        raise DataLoadError(t('error.validation_read_failed', path=str(file_path), error=str(e))) from e
    logger.info(t('log.validation_loaded', count=len(frame), path=str(file_path)))
    return frame


def load_run_config(path: Union[str, Path]) -> dict[str, Any]:
    """
    Load a run configuration file.

    Keys use CLI flag spelling with or without leading dashes; dashes inside
    keys become underscores (``top-m`` -> ``top_m``).

    Raises:
        ConfigurationError: If the file is not a flat YAML mapping.
    """
    file_path = validate_file_path(path)
    try:
        with open(file_path, encoding='utf-8') as handle:
            raw = yaml.safe_load(handle)
    except yaml.YAMLError as e:
        logger.error(t('log.config_parse_failed', path=str(file_path), error=str(e)))
        raise ConfigurationError(t('error.config_parse_failed', path=str(file_path), error=str(e))) from e
    if raw is None:
        return {}
    if not isinstance(raw, dict) or any(isinstance(v, dict) for v in raw.values()):
        raise ConfigurationError(t('error.config_not_flat', path=str(file_path)))
    return {str(key).lstrip('-').replace('-', '_'): value for key, value in raw.items()}
