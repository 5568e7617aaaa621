"""
Central configuration for the QueryLean project.

Re-exports all configuration from submodules so that
"from config import ATTACK_METHODS" etc. work.
"""

from .constants import (
    ATTACK_METHODS,
    AVAILABLE_METHODS,
    BUILTIN_BIN_DATASETS,
    DEFAULT_K,
    DEFAULT_LANGUAGE as _DEFAULT_LANG,
    DEFAULT_NUM_BINS,
    DEFAULT_SAMPLE_SIZE,
    DEFAULT_TAU,
    DEFAULT_TOP_M,
    FALLBACK_N,
    LANGUAGE_ALIASES,
    METHOD_ALIASES,
    N_MODES,
    PROB_TOLERANCE,
    QUERY_PHASES,
    REPLACE_SOURCES,
    SENTENCE_TERMINATORS,
    SUPPORTED_LANGUAGE_CODES,
    __version__,
)
from .env import (
    DEFAULT_LOG_FILE,
    DEFAULT_LOG_LEVEL,
    ENV_SCHEMA,
    LOG_LEVEL_OPTIONS,
    get_env,
    get_env_from_schema,
    initialize_and_validate_config,
    validate_all_env_values,
    write_env_template,
)
from .paths import (
    BINS_DIR,
    builtin_bins_path,
    ensure_output_directory,
    get_output_paths,
    get_project_root,
)

__all__ = [
    'ATTACK_METHODS',
    'AVAILABLE_METHODS',
    'BUILTIN_BIN_DATASETS',
    'DEFAULT_K',
    '_DEFAULT_LANG',
    'DEFAULT_NUM_BINS',
    'DEFAULT_SAMPLE_SIZE',
    'DEFAULT_TAU',
    'DEFAULT_TOP_M',
    'FALLBACK_N',
    'LANGUAGE_ALIASES',
    'METHOD_ALIASES',
    'N_MODES',
    'PROB_TOLERANCE',
    'QUERY_PHASES',
    'REPLACE_SOURCES',
    'SENTENCE_TERMINATORS',
    'SUPPORTED_LANGUAGE_CODES',
    '__version__',
    'DEFAULT_LOG_FILE',
    'DEFAULT_LOG_LEVEL',
    'ENV_SCHEMA',
    'LOG_LEVEL_OPTIONS',
    'get_env',
    'get_env_from_schema',
    'initialize_and_validate_config',
    'validate_all_env_values',
    'write_env_template',
    'BINS_DIR',
    'builtin_bins_path',
    'ensure_output_directory',
    'get_output_paths',
    'get_project_root',
]
