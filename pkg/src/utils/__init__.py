"""
Utils module.
Contains utility functions including exceptions, logging, and validation.
"""

from .exceptions import (
    QueryLeanError,
    TextModelError,
    EmptyText,
    SpanOutOfRange,
    IndexOutOfRange,
    InvalidWord,
    OracleError,
    RemoteUnavailable,
    MalformedResponse,
    ProviderUnavailable,
    EmbedderUnavailable,
    SelectionError,
    TreeExhausted,
    SegmentExhausted,
    AttackError,
    AlreadyMisclassified,
    EvaluationError,
    DomainError,
    NoSuccesses,
    EmptyBin,
    DataLoadError,
    ParseError,
    EmptyDataset,
    FileNotFoundError,
    LexiconError,
    ConfigurationError,
    ValidationError,
)
from .logger import (
    ColoredFormatter,
    get_log_level_from_env,
    get_log_file_from_env,
    should_log_to_console,
    setup_logging,
    get_logger,
    log_exception,
)
from .validators import (
    validate_file_path,
    validate_fraction,
    validate_positive_integer,
    validate_probability_vector,
)

__all__ = [
    'QueryLeanError',
    'TextModelError',
    'EmptyText',
    'SpanOutOfRange',
    'IndexOutOfRange',
    'InvalidWord',
    'OracleError',
    'RemoteUnavailable',
    'MalformedResponse',
    'ProviderUnavailable',
    'EmbedderUnavailable',
    'SelectionError',
    'TreeExhausted',
    'SegmentExhausted',
    'AttackError',
    'AlreadyMisclassified',
    'EvaluationError',
    'DomainError',
    'NoSuccesses',
    'EmptyBin',
    'DataLoadError',
    'ParseError',
    'EmptyDataset',
    'FileNotFoundError',
    'LexiconError',
    'ConfigurationError',
    'ValidationError',
    'ColoredFormatter',
    'get_log_level_from_env',
    'get_log_file_from_env',
    'should_log_to_console',
    'setup_logging',
    'get_logger',
    'log_exception',
    'validate_file_path',
    'validate_fraction',
    'validate_positive_integer',
    'validate_probability_vector',
]
