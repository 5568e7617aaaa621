"""
Sentence embedding oracles used for post-hoc similarity.

    - :class:`LexicalEmbedder`: token-count vectors over the shared vocabulary
    - :class:`HttpEmbedder`: client for a remote ``/embed`` endpoint
    - :class:`FallbackEmbedder`: remote first, lexical when the service is down
"""

# Standard library
from abc import ABC, abstractmethod
from typing import Optional, Sequence

# Third-party packages
import numpy as np

# Local imports
from i18n import t
from textmodel import normalize_token
from utils import EmbedderUnavailable, MalformedResponse, get_logger
from .http import normalize_endpoint, post_json

logger = get_logger(__name__)


class Embedder(ABC):
    """Maps texts to vectors; ``embed`` also names the embedder that answered."""

    name: str = 'embedder'

    @abstractmethod
    def embed(self, texts: Sequence[str]) -> tuple[np.ndarray, str]:
        """Return a ``(len(texts), dim)`` matrix and the provenance name."""


class LexicalEmbedder(Embedder):
    """
    Deterministic bag-of-tokens embedding.

    The vocabulary is the sorted union of normalized tokens over the texts of a
    single call, so vectors are only comparable within that call.
    """

    name = 'fallback'

    @staticmethod
    def _terms(text: str) -> list[str]:
        return [normalize_token(tok) or tok.lower() for tok in text.split()]

    def embed(self, texts: Sequence[str]) -> tuple[np.ndarray, str]:
        term_lists = [self._terms(text) for text in texts]
        vocabulary = {term: j for j, term in enumerate(sorted({term for terms in term_lists for term in terms}))}
        matrix = np.zeros((len(texts), max(len(vocabulary), 1)))
        for row, terms in enumerate(term_lists):
            for term in terms:
                matrix[row, vocabulary[term]] += 1.0
        return matrix, self.name


class HttpEmbedder(Embedder):
    """
    Client for a remote sentence-embedding service.

    Protocol: ``POST /embed`` with ``{"texts": [...]}`` answered by
    ``{"vectors": [[...], ...]}``.
    """

    name = 'http'

    def __init__(self, url: str, timeout: Optional[float] = None) -> None:
        self.endpoint = normalize_endpoint(url, '/embed')
        self.timeout = timeout

    def embed(self, texts: Sequence[str]) -> tuple[np.ndarray, str]:
        body = post_json(self.endpoint, {'texts': list(texts)}, EmbedderUnavailable, self.timeout)
        vectors = body.get('vectors')
        try:
            matrix = np.asarray(vectors, dtype=float)
        except (TypeError, ValueError) as e:
            raise MalformedResponse(t('error.malformed_response', endpoint=self.endpoint, detail=str(e))) from e
        if matrix.ndim != 2 or matrix.shape[0] != len(texts):
            raise MalformedResponse(
                t('error.malformed_response', endpoint=self.endpoint,
                  detail=f"expected {len(texts)} vectors, got shape {matrix.shape}")
            )
        return matrix, self.name


class FallbackEmbedder(Embedder):
    """Use ``primary`` and switch to the lexical embedder when it is unavailable."""

    def __init__(self, primary: Embedder, fallback: Optional[Embedder] = None) -> None:
        self.primary = primary
        self.fallback = fallback or LexicalEmbedder()
        self.name = primary.name

    def embed(self, texts: Sequence[str]) -> tuple[np.ndarray, str]:
        try:
            return self.primary.embed(texts)
        except EmbedderUnavailable as e:
            logger.warning(f"Embedder {self.primary.name} unavailable, using {self.fallback.name}: {e}")
            return self.fallback.embed(texts)
