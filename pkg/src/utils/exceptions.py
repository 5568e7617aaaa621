"""
Custom exceptions for QueryLean.

Every error raised by the toolkit derives from :class:`QueryLeanError`, grouped
by the package that raises it.
"""

from typing import Optional


class QueryLeanError(Exception):
    """Base exception class for all QueryLean-related errors."""
    pass


# ---------------------------------------------------------------------------
# Text model
# ---------------------------------------------------------------------------
class TextModelError(QueryLeanError):
    """Exception raised by tokenization and text-editing operations."""
    pass


class EmptyText(TextModelError):
    """Exception raised when a text has no non-whitespace characters."""
    pass


class SpanOutOfRange(TextModelError):
    """Exception raised when a span does not fit inside a document."""
    pass


class IndexOutOfRange(TextModelError):
    """Exception raised when a token index is outside a document."""
    pass


class InvalidWord(TextModelError):
    """Exception raised when a replacement word is empty or contains whitespace."""
    pass


# ---------------------------------------------------------------------------
# Oracles
# ---------------------------------------------------------------------------
class OracleError(QueryLeanError):
    """Exception raised by classifier, mask-fill and embedding oracles."""
    pass


class RemoteUnavailable(OracleError):
    """Exception raised when a remote classifier cannot be reached."""
    pass


class MalformedResponse(OracleError):
    """Exception raised when an oracle returns an ill-formed payload."""
    pass


class ProviderUnavailable(OracleError):
    """Exception raised when a mask-fill provider cannot be reached."""
    pass


class EmbedderUnavailable(OracleError):
    """Exception raised when an embedding service cannot be reached."""
    pass


# ---------------------------------------------------------------------------
# Selection
# ---------------------------------------------------------------------------
class SelectionError(QueryLeanError):
    """Exception raised by selection algorithms."""
    pass


class TreeExhausted(SelectionError):
    """Exception raised when a search tree has no non-explored node left."""
    pass


class SegmentExhausted(SelectionError):
    """Exception raised when no segment remains for hybrid selection."""
    pass


# ---------------------------------------------------------------------------
# Attack
# ---------------------------------------------------------------------------
class AttackError(QueryLeanError):
    """Exception raised by attack orchestration."""
    pass


class AlreadyMisclassified(AttackError):
    """Exception raised when the classifier does not predict the target label."""

    def __init__(self, message: str, predicted: Optional[int] = None, prob: Optional[float] = None) -> None:
        super().__init__(message)
        self.predicted = predicted
        self.prob = prob


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------
class EvaluationError(QueryLeanError):
    """Exception raised by metric computation."""
    pass


class DomainError(EvaluationError):
    """Exception raised when metric inputs are outside their valid domain."""
    pass


class NoSuccesses(EvaluationError):
    """Exception raised when an average over successful attacks is requested with none."""
    pass


class EmptyBin(EvaluationError):
    """Exception raised when a calibration bin has no validation examples."""
    pass


# ---------------------------------------------------------------------------
# Loading and configuration
# ---------------------------------------------------------------------------
class DataLoadError(QueryLeanError):
    """Exception raised when data loading fails."""
    pass


class ParseError(DataLoadError):
    """Exception raised when a line of an input file cannot be parsed."""

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        super().__init__(message)
        self.line = line


class EmptyDataset(DataLoadError):
    """Exception raised when a dataset file holds no records."""
    pass


class FileNotFoundError(DataLoadError):  # noqa: A001
    """
    Exception raised when a requested file or directory is not found.

    Note: This is a QueryLean-specific exception (subclass of DataLoadError).
    It is distinct from builtins.FileNotFoundError but serves the same semantic purpose.
    """
    pass


class LexiconError(DataLoadError):
    """Exception raised when a synonym lexicon file is invalid."""
    pass


class ConfigurationError(QueryLeanError):
    """Exception raised when configuration is invalid."""
    pass


class ValidationError(QueryLeanError):
    """Exception raised when input validation fails."""
    pass
