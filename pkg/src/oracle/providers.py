"""
Mask-fill candidate providers.

Providers propose replacement words for one token position. They never touch
the classifier ledger.
"""

# Standard library
from abc import ABC, abstractmethod
from typing import Optional, Protocol

# Local imports
from config import DEFAULT_TOP_M
from i18n import t
from textmodel import Document, normalize_token
from utils import MalformedResponse, ProviderUnavailable, get_logger, validate_positive_integer
from .http import normalize_endpoint, post_json

logger = get_logger(__name__)


class SynonymSource(Protocol):
    """Anything that maps a word to its ranked synonyms."""

    def synonyms(self, word: str) -> list[str]: ...


class MaskFillProvider(ABC):
    """Proposes ranked candidate words for a token position."""

    name: str = 'provider'

    @abstractmethod
    def propose(self, doc: Document, index: int, top_m: int) -> list[str]:
        """Return up to ``top_m`` candidates ordered by provider score."""


class LexiconMaskFill(MaskFillProvider):
    """Offline stand-in for a masked language model backed by a synonym lexicon."""

    name = 'lexicon'

    def __init__(self, lexicon: SynonymSource) -> None:
        self.lexicon = lexicon

    def propose(self, doc: Document, index: int, top_m: int) -> list[str]:
        return self.lexicon.synonyms(doc.tokens[index])[:top_m]


class HttpMaskFill(MaskFillProvider):
    """
    Client for a remote masked-LM service.

    Protocol: ``POST /fill_mask`` with ``{"tokens": [...], "index": i, "top_k": M}``
    answered by ``{"candidates": ["w1", ...]}``.
    """

    name = 'http'

    def __init__(self, url: str, timeout: Optional[float] = None) -> None:
        self.endpoint = normalize_endpoint(url, '/fill_mask')
        self.timeout = timeout

    def propose(self, doc: Document, index: int, top_m: int) -> list[str]:
        payload = {'tokens': list(doc.tokens), 'index': index, 'top_k': top_m}
        body = post_json(self.endpoint, payload, ProviderUnavailable, self.timeout)
        candidates = body.get('candidates')
        if not isinstance(candidates, list) or not all(isinstance(c, str) for c in candidates):
            raise MalformedResponse(
                t('error.malformed_response', endpoint=self.endpoint, detail='"candidates" must be a list of strings')
            )
        return candidates


def mask_fill_candidates(
    doc: Document,
    index: int,
    provider: MaskFillProvider,
    top_m: int = DEFAULT_TOP_M,
) -> list[str]:
    """
    Ranked replacement candidates for ``doc.tokens[index]``.

    The original token (compared case-insensitively without punctuation),
    blank candidates and duplicates are dropped; at most ``top_m`` remain.

    Args:
        doc: Current document.
        index: Token position to fill.
        provider: Candidate source.
        top_m: Maximum number of candidates (>= 1).

    Returns:
        Candidate words, best first. Empty when the provider has nothing.

    Raises:
        IndexOutOfRange: If ``index`` is not a valid position.
        ValidationError: If ``top_m`` < 1.
        ProviderUnavailable: If a remote provider cannot be reached.
    """
    doc.check_index(index)
    validate_positive_integer(top_m, 'top_m')

    original = normalize_token(doc.tokens[index])
    seen: set[str] = set()
    result: list[str] = []
    for candidate in provider.propose(doc, index, top_m):
        word = candidate.strip()
        key = normalize_token(word)
        if not word or key == original or key in seen:
            continue
        seen.add(key)
        result.append(word)
        if len(result) == top_m:
            break
    logger.debug(f"{provider.name} proposed {len(result)} candidate(s) for position {index}")
    return result
