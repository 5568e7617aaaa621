"""
Document model and pure text-editing operations.

Texts are split on whitespace with attached punctuation kept on the token, so
token counts match the "length in words" used by length bins and split
thresholds. Sentences close on any token ending in terminal punctuation.
"""

# Standard library
import string
from dataclasses import dataclass
from typing import Sequence

# Local imports
from config import SENTENCE_TERMINATORS
from i18n import t
from utils import (
    EmptyText,
    IndexOutOfRange,
    InvalidWord,
    SpanOutOfRange,
    ValidationError,
)

# ASCII punctuation plus common typographic quotes and dashes
_PUNCTUATION = string.punctuation + '‘’“”–—…'


@dataclass(frozen=True, order=True)
class Span:
    """Half-open token range ``[start, end)``."""

    start: int
    end: int

    def __post_init__(self) -> None:
        if self.start < 0 or self.end <= self.start:
            raise SpanOutOfRange(t('error.invalid_span', start=self.start, end=self.end))

    @property
    def length(self) -> int:
        return self.end - self.start

    def indices(self) -> range:
        return range(self.start, self.end)

    def __contains__(self, index: object) -> bool:
        return isinstance(index, int) and self.start <= index < self.end

    def __str__(self) -> str:
        return f"[{self.start},{self.end})"


@dataclass(frozen=True)
class Document:
    """
    Tokenized text: word tokens plus the sentence spans covering them.

    Build instances with :func:`tokenize`; editing operations return new
    documents and never mutate their input.
    """

    raw: str
    tokens: tuple[str, ...]
    sentence_bounds: tuple[Span, ...]

    def __len__(self) -> int:
        return len(self.tokens)

    @property
    def text(self) -> str:
        """Tokens joined with single spaces (what the classifier sees)."""
        return ' '.join(self.tokens)

    @property
    def full_span(self) -> Span:
        return Span(0, len(self.tokens))

    def check_span(self, span: Span) -> None:
        """Raise SpanOutOfRange unless ``span`` fits inside this document."""
        if span.end > len(self.tokens):
            raise SpanOutOfRange(
                t('error.span_out_of_range', start=span.start, end=span.end, length=len(self.tokens))
            )

    def check_index(self, index: int) -> None:
        """Raise IndexOutOfRange unless ``index`` addresses a token."""
        if not 0 <= index < len(self.tokens):
            raise IndexOutOfRange(t('error.index_out_of_range', index=index, length=len(self.tokens)))


def _closes_sentence(token: str) -> bool:
    return token.endswith(SENTENCE_TERMINATORS)


def sentence_bounds(tokens: Sequence[str]) -> tuple[Span, ...]:
    """
    Compute sentence spans with the terminal-punctuation rule.

    A token ending in '.', '!' or '?' closes the current sentence; a trailing
    unterminated run forms the final sentence.

    Args:
        tokens: Non-empty token sequence.

    Returns:
        Disjoint, sorted spans whose union is ``[0, len(tokens))``.
    """
    bounds: list[Span] = []
    start = 0
    for i, token in enumerate(tokens):
        if _closes_sentence(token):
            bounds.append(Span(start, i + 1))
            start = i + 1
    if start < len(tokens):
        bounds.append(Span(start, len(tokens)))
    return tuple(bounds)


def tokenize(text: str) -> Document:
    """
    Split ``text`` into whitespace tokens and sentence spans.

    Args:
        text: Input text with at least one non-whitespace character.

    Returns:
        The tokenized :class:`Document`.

    Raises:
        EmptyText: If the text is empty or all whitespace.

    Examples:
        >>> tokenize("Bad. Sad!").sentence_bounds
        (Span(start=0, end=1), Span(start=1, end=2))
    """
    if not isinstance(text, str):
        raise ValidationError(t('error.text_must_be_string', type=type(text).__name__))
    tokens = tuple(text.split())
    if not tokens:
        raise EmptyText(t('error.empty_text'))
    return Document(raw=text, tokens=tokens, sentence_bounds=sentence_bounds(tokens))


def remove_span(doc: Document, span: Span) -> str:
    """
    Return the text of ``doc`` with the tokens of ``span`` dropped.

    Raises:
        SpanOutOfRange: If ``span`` does not fit inside ``doc``.

    Examples:
        >>> remove_span(tokenize("a b c"), Span(1, 2))
        'a c'
    """
    doc.check_span(span)
    return ' '.join(doc.tokens[:span.start] + doc.tokens[span.end:])


def replace_token(doc: Document, index: int, word: str) -> Document:
    """
    Return a new document with ``tokens[index]`` replaced by ``word``.

    Sentence spans are recomputed, so replacing a period-bearing token with a
    bare word merges two sentences.

    Raises:
        IndexOutOfRange: If ``index`` is not a valid token position.
        InvalidWord: If ``word`` is empty or contains whitespace.
    """
    doc.check_index(index)
    if not word or any(ch.isspace() for ch in word):
        raise InvalidWord(t('error.invalid_word', word=word))
    tokens = doc.tokens[:index] + (word,) + doc.tokens[index + 1:]
    return Document(raw=' '.join(tokens), tokens=tokens, sentence_bounds=sentence_bounds(tokens))


def partition(span: Span, n: int) -> list[Span]:
    """
    Split ``span`` into ``min(n, span.length)`` contiguous near-equal parts.

    Sizes differ by at most one and the larger parts come first.

    Args:
        span: Span to split.
        n: Requested number of parts (>= 1).

    Returns:
        Sorted, disjoint spans covering ``span`` exactly.

    Raises:
        ValidationError: If ``n`` < 1.

    Examples:
        >>> partition(Span(0, 7), 3)
        [Span(start=0, end=3), Span(start=3, end=5), Span(start=5, end=7)]
    """
    if n < 1:
        raise ValidationError(t('error.integer_below_minimum', name='n', value=n, minimum=1))
    parts = min(n, span.length)
    base, remainder = divmod(span.length, parts)
    pieces: list[Span] = []
    start = span.start
    for k in range(parts):
        size = base + 1 if k < remainder else base
        pieces.append(Span(start, start + size))
        start += size
    return pieces


def normalize_token(token: str) -> str:
    """Lowercase ``token`` and strip surrounding punctuation ("Bad." -> "bad")."""
    return token.strip(_PUNCTUATION).lower()


def split_affixes(token: str) -> tuple[str, str, str]:
    """
    Split a token into leading punctuation, core word and trailing punctuation.

    A token made only of punctuation is returned as its own core.

    Examples:
        >>> split_affixes('"Great!"')
        ('"', 'Great', '!"')
    """
    core = token.strip(_PUNCTUATION)
    if not core:
        return '', token, ''
    head = token.index(core)
    return token[:head], core, token[head + len(core):]


def adapt_candidate(original: str, candidate: str) -> str:
    """
    Shape a replacement word after the token it replaces.

    The candidate inherits the original's leading capitalization and keeps its
    attached punctuation, so sentence boundaries survive the edit.

    Examples:
        >>> adapt_candidate('Good.', 'fine')
        'Fine.'
    """
    prefix, core, suffix = split_affixes(original)
    word = candidate.strip(_PUNCTUATION) or candidate
    if core[:1].isupper() and word[:1].islower():
        word = word[0].upper() + word[1:]
    return f"{prefix}{word}{suffix}"
