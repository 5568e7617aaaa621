"""Application constants, attack method registry, and version."""

import sys
from pathlib import Path
from typing import Any

import yaml

# Application version number
__version__ = "1.0.0"

# Application metadata
__author__ = "QueryLean developers"
__copyright__ = "Public content for research use"
__status__ = "Beta"

# ---------------------------------------------------------------------------
# Attack method registry
# ---------------------------------------------------------------------------
# Single source of truth loaded from methods.yaml.
# Each entry contains:
#   - selection: selection strategy driving the attack loop
#   - uses_n / uses_tau: which run-matrix dimensions apply to the method
#   - n_mode: default policy for the split factor N
#   - label: display name for summary tables

_METHODS_PATH = Path(__file__).resolve().parent / "methods.yaml"

_SELECTION_KINDS = frozenset({'greedy', 'nnary', 'segment', 'sentence'})
_N_MODES = frozenset({'none', 'fixed', 'manual', 'auto'})


def _load_methods() -> dict[str, dict[str, Any]]:
    """
    Load the attack method registry from methods.yaml.

    Returns:
        Dictionary mapping method IDs to their configuration.

    Raises:
        FileNotFoundError: If methods.yaml does not exist
        yaml.YAMLError: If the YAML file is malformed
        ValueError: If an entry misses required fields or uses unknown values
    """
    if not _METHODS_PATH.exists():
        raise FileNotFoundError(
            f"Methods configuration file not found: {_METHODS_PATH}\n"
            f"Please ensure the file exists in the config directory."
        )

    try:
        with open(_METHODS_PATH, encoding="utf-8") as f:
            raw_data = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise yaml.YAMLError(
            f"Error parsing methods.yaml: {e}\n"
            f"Please check the YAML syntax in: {_METHODS_PATH}"
        ) from e

    if not isinstance(raw_data, dict) or not raw_data:
        raise ValueError(
            f"methods.yaml must contain a non-empty mapping of method IDs.\n"
            f"File path: {_METHODS_PATH}"
        )

    required_fields = {'selection', 'uses_n', 'uses_tau', 'n_mode', 'label'}
    for method_id, method_config in raw_data.items():
        if not isinstance(method_config, dict):
            raise ValueError(
                f"Method '{method_id}' must be a mapping with keys: {required_fields}.\n"
                f"File path: {_METHODS_PATH}"
            )
        missing_fields = required_fields - set(method_config.keys())
        if missing_fields:
            raise ValueError(
                f"Method '{method_id}' is missing required fields: {missing_fields}.\n"
                f"File path: {_METHODS_PATH}"
            )
        if method_config['selection'] not in _SELECTION_KINDS:
            raise ValueError(
                f"Method '{method_id}' has unknown selection '{method_config['selection']}'."
            )
        if method_config['n_mode'] not in _N_MODES:
            raise ValueError(
                f"Method '{method_id}' has unknown n_mode '{method_config['n_mode']}'."
            )
        if method_config['n_mode'] == 'fixed' and 'fixed_n' not in method_config:
            raise ValueError(f"Method '{method_id}' uses n_mode 'fixed' without 'fixed_n'.")

    return raw_data


try:
    _raw_methods = _load_methods()
except (FileNotFoundError, yaml.YAMLError, ValueError) as e:
    print(f"CRITICAL ERROR: Failed to load methods.yaml: {e}", file=sys.stderr)
    raise

# Main registry: method_id -> { selection, uses_n, uses_tau, n_mode, label, ... }
ATTACK_METHODS: dict[str, dict[str, Any]] = _raw_methods
AVAILABLE_METHODS: tuple[str, ...] = tuple(ATTACK_METHODS.keys())

# CLI spelling uses dashes ("sentence-hybrid"); internal IDs use underscores.
METHOD_ALIASES: dict[str, str] = {m.replace('_', '-'): m for m in AVAILABLE_METHODS}

# ---------------------------------------------------------------------------
# Attack defaults
# ---------------------------------------------------------------------------
QUERY_PHASES: tuple[str, ...] = ('root', 'selection', 'replacement')
REPLACE_SOURCES: tuple[str, ...] = ('wordnet', 'mlm')
N_MODES: tuple[str, ...] = ('auto', 'manual', 'sentences')

DEFAULT_TAU: float = 0.10
DEFAULT_K: int = -1
DEFAULT_TOP_M: int = 5
DEFAULT_SAMPLE_SIZE: int = 1000
DEFAULT_NUM_BINS: int = 5
FALLBACK_N: int = 2
PROB_TOLERANCE: float = 1e-6

# Terminal punctuation closing a sentence
SENTENCE_TERMINATORS: tuple[str, ...] = ('.', '!', '?')

# Dataset IDs that ship a Dynamic-N table under config/bins/
BUILTIN_BIN_DATASETS: tuple[str, ...] = ('imdb', 'yelp', 'agnews')

# ---------------------------------------------------------------------------
# Language (i18n) constants
# ---------------------------------------------------------------------------
SUPPORTED_LANGUAGE_CODES: tuple[str, ...] = ('en', 'es')
DEFAULT_LANGUAGE: str = 'en'

# Aliases accepted in .env LANGUAGE (lowercase). Map alias -> canonical code.
LANGUAGE_ALIASES: dict[str, str] = {
    'english': 'en',
    'eng': 'en',
    'inglés': 'en',
    'español': 'es',
    'spanish': 'es',
    'esp': 'es',
}

VALID_LANGUAGE_INPUTS: frozenset[str] = frozenset(SUPPORTED_LANGUAGE_CODES) | frozenset(LANGUAGE_ALIASES.keys())

# ---------------------------------------------------------------------------
# File constants
# ---------------------------------------------------------------------------
RESULTS_FILENAME: str = 'results.jsonl'
SUMMARY_FILENAME: str = 'summary.csv'
BINS_FILENAME: str = 'bins.tsv'
