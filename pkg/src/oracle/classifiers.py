"""
Classifier oracles.

Every classifier is scored through :meth:`Classifier.classify`, which charges
the ledger once per input text no matter how the texts are batched.

    - :class:`BagOfWordsClassifier`: deterministic linear model with softmax
    - :class:`HttpClassifier`: client for a remote ``/classify`` endpoint
"""

# Standard library
import threading
from abc import ABC, abstractmethod
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Optional, Sequence

# Third-party packages
import numpy as np
from scipy.special import softmax

# Local imports
from i18n import t
from textmodel import normalize_token
from utils import (
    ConfigurationError,
    MalformedResponse,
    RemoteUnavailable,
    ValidationError,
    get_logger,
)
from .http import normalize_endpoint, post_json
from .probs import ClassProbs, QueryLedger

logger = get_logger(__name__)


@dataclass(frozen=True)
class ClassifierSpec:
    """
    Where a classifier comes from: a builtin weight file or a remote endpoint.

    Examples:
        >>> ClassifierSpec.parse('builtin:input/weights.tsv').kind
        'builtin'
        >>> ClassifierSpec.parse('http:localhost:8000').url
        'localhost:8000'
    """

    kind: str
    path: Optional[Path] = None
    url: Optional[str] = None
    batch_size: int = 32

    def __post_init__(self) -> None:
        if self.kind not in ('builtin', 'remote'):
            raise ConfigurationError(t('error.invalid_classifier_spec', spec=self.kind))
        if self.batch_size < 1:
            raise ConfigurationError(
                t('error.integer_below_minimum', name='batch_size', value=self.batch_size, minimum=1)
            )
        if self.kind == 'builtin' and self.path is None:
            raise ConfigurationError(t('error.invalid_classifier_spec', spec='builtin:'))
        if self.kind == 'remote' and not self.url:
            raise ConfigurationError(t('error.invalid_classifier_spec', spec='http:'))

    @classmethod
    def parse(cls, value: str, batch_size: int = 32) -> 'ClassifierSpec':
        """Parse a ``builtin:PATH`` or ``http:URL`` flag value."""
        prefix, sep, rest = value.partition(':')
        if not sep or not rest:
            raise ConfigurationError(t('error.invalid_classifier_spec', spec=value))
        if prefix == 'builtin':
            return cls(kind='builtin', path=Path(rest), batch_size=batch_size)
        if prefix == 'http':
            return cls(kind='remote', url=rest, batch_size=batch_size)
        raise ConfigurationError(t('error.invalid_classifier_spec', spec=value))


class Classifier(ABC):
    """Black-box text classifier returning per-label probabilities."""

    @property
    @abstractmethod
    def num_labels(self) -> Optional[int]:
        """Number of labels, or None while still unknown (remote, before the first reply)."""

    @abstractmethod
    def _score(self, texts: list[str]) -> list[ClassProbs]:
        """Score texts without touching any ledger."""

    def classify(self, texts: Sequence[str], ledger: QueryLedger, phase: str) -> list[ClassProbs]:
        """
        Score ``texts`` and charge ``len(texts)`` queries to ``phase``.

        Args:
            texts: Non-empty list of texts; empty strings are valid inputs.
            ledger: Ledger of the running attack.
            phase: ``root``, ``selection`` or ``replacement``.

        Returns:
            One :class:`ClassProbs` per text, in input order.

        Raises:
            ValidationError: If ``texts`` is empty.
            RemoteUnavailable: On transport failure (remote classifiers).
            MalformedResponse: On an ill-formed probability vector.
        """
        batch = list(texts)
        if not batch:
            raise ValidationError(t('error.empty_query_batch'))
        scored = self._score(batch)
        ledger.charge(phase, len(batch))
        return scored

    def predict(self, text: str, ledger: QueryLedger, phase: str) -> ClassProbs:
        """Score a single text (one query)."""
        return self.classify([text], ledger, phase)[0]


class BagOfWordsClassifier(Classifier):
    """
    Linear bag-of-words scorer: ``softmax(bias + sum of token weight rows)``.

    Tokens are matched after lowercasing and stripping surrounding
    punctuation, so ``"Bad."`` and ``"bad"`` share a weight row. Unknown
    tokens contribute nothing.

    Examples:
        >>> clf = BagOfWordsClassifier({'bad': [0.0, 2.0]}, num_labels=2)
        >>> [round(p, 3) for p in clf.predict('bad', QueryLedger(), 'root').probs]
        [0.119, 0.881]
    """

    def __init__(
        self,
        weights: Mapping[str, Sequence[float]],
        bias: Optional[Sequence[float]] = None,
        num_labels: Optional[int] = None,
    ) -> None:
        if num_labels is None:
            if bias is not None:
                num_labels = len(bias)
            elif weights:
                num_labels = len(next(iter(weights.values())))
            else:
                raise ConfigurationError(t('error.classifier_labels_unknown'))
        if num_labels < 2:
            raise ConfigurationError(
                t('error.integer_below_minimum', name='num_labels', value=num_labels, minimum=2)
            )

        self._num_labels = int(num_labels)
        self._bias = np.zeros(self._num_labels) if bias is None else np.asarray(bias, dtype=float)
        if self._bias.shape != (self._num_labels,):
            raise ConfigurationError(
                t('error.weight_width_mismatch', token='#bias', expected=self._num_labels, got=self._bias.size)
            )

        self._weights: dict[str, np.ndarray] = {}
        for token, row in weights.items():
            vector = np.asarray(row, dtype=float)
            if vector.shape != (self._num_labels,):
                raise ConfigurationError(
                    t('error.weight_width_mismatch', token=token, expected=self._num_labels, got=vector.size)
                )
            key = normalize_token(token) or token.lower()
            if key in self._weights:
                self._weights[key] = self._weights[key] + vector
            else:
                self._weights[key] = vector
        # raw token -> weight row (or None); filled lazily
        self._row_cache: dict[str, Optional[np.ndarray]] = {}
        logger.debug(f"Bag-of-words classifier: {len(self._weights)} weighted tokens, {self._num_labels} labels")

    @property
    def num_labels(self) -> int:
        return self._num_labels

    @property
    def bias(self) -> np.ndarray:
        return self._bias.copy()

    def _row(self, token: str) -> Optional[np.ndarray]:
        try:
            return self._row_cache[token]
        except KeyError:
            row = self._weights.get(normalize_token(token) or token.lower())
            self._row_cache[token] = row
            return row

    def logits(self, text: str) -> np.ndarray:
        """Raw scores for ``text`` (no query is charged)."""
        scores = self._bias.copy()
        for token in text.split():
            row = self._row(token)
            if row is not None:
                scores += row
        return scores

    def _score(self, texts: list[str]) -> list[ClassProbs]:
        return [ClassProbs(tuple(float(p) for p in softmax(self.logits(text)))) for text in texts]


class HttpClassifier(Classifier):
    """
    Client for a remote classifier.

    Protocol: ``POST /classify`` with ``{"texts": [...]}`` answered by
    ``{"probs": [[p0, p1, ...], ...]}`` in request order. Texts are sent in
    chunks of ``batch_size``.
    """

    def __init__(
        self,
        url: str,
        batch_size: int = 32,
        num_labels: Optional[int] = None,
        timeout: Optional[float] = None,
    ) -> None:
        if batch_size < 1:
            raise ConfigurationError(
                t('error.integer_below_minimum', name='batch_size', value=batch_size, minimum=1)
            )
        self.endpoint = normalize_endpoint(url, '/classify')
        self.batch_size = batch_size
        self.timeout = timeout
        self._num_labels = num_labels
        self._lock = threading.Lock()
        logger.info(f"Remote classifier at {self.endpoint} (batch size {batch_size})")

    @property
    def num_labels(self) -> Optional[int]:
        return self._num_labels

    def _fix_label_count(self, width: int) -> int:
        with self._lock:
            if self._num_labels is None:
                if width < 2:
                    raise MalformedResponse(
                        t('error.malformed_probs', detail=f"{width} label(s) in response")
                    )
                self._num_labels = width
                logger.info(f"Remote classifier reports {width} labels")
            return self._num_labels

    def _score(self, texts: list[str]) -> list[ClassProbs]:
        scored: list[ClassProbs] = []
        for start in range(0, len(texts), self.batch_size):
            chunk = texts[start:start + self.batch_size]
            body = post_json(self.endpoint, {'texts': chunk}, RemoteUnavailable, self.timeout)
            rows = body.get('probs')
            if not isinstance(rows, list) or len(rows) != len(chunk):
                got = len(rows) if isinstance(rows, list) else type(rows).__name__
                raise MalformedResponse(
                    t('error.malformed_response', endpoint=self.endpoint,
                      detail=f"expected {len(chunk)} probability rows, got {got}")
                )
            for row in rows:
                width = len(row) if isinstance(row, list) else 0
                scored.append(ClassProbs.from_values(row, self._fix_label_count(width)))
        return scored
