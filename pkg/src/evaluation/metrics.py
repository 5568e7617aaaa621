"""
Attack metrics.

    - :func:`asr`: relative accuracy degradation
    - :func:`avg_queries`: mean query count over successful or all attacks
    - :func:`perturbation_rate`: share of tokens changed
    - :func:`similarity`: embedding cosine between original and final text
"""

# Standard library
from typing import Iterable, Optional, Union

# Third-party packages
import numpy as np

# Local imports
from i18n import t
from oracle import Embedder, LexicalEmbedder
from textmodel import Document, tokenize
from utils import DomainError, EvaluationError, NoSuccesses, ValidationError, get_logger

logger = get_logger(__name__)


def asr(original_acc: float, attack_acc: float) -> float:
    """
    Attack success rate: ``(original_acc - attack_acc) / original_acc * 100``.

    Args:
        original_acc: Accuracy before the attack, in (0, 100].
        attack_acc: Accuracy under attack, in [0, original_acc].

    Returns:
        ASR in percent, full precision.

    Raises:
        DomainError: If either accuracy is outside its domain.

    Examples:
        >>> round(asr(92.0, 1.7), 2)
        98.15
    """
    if not 0.0 < original_acc <= 100.0:
        raise DomainError(t('error.asr_original_domain', value=original_acc))
    if not 0.0 <= attack_acc <= original_acc:
        raise DomainError(t('error.asr_attack_domain', value=attack_acc, original=original_acc))
    return (original_acc - attack_acc) / original_acc * 100.0


def avg_queries(results: Iterable, successes_only: bool = True) -> float:
    """
    Mean ``queries_total`` over successful results, or over every result.

    With ``successes_only`` (the default) failures are ignored. Otherwise the
    mean covers every attacked result, successful or not.

    Raises:
        NoSuccesses: If ``successes_only`` and no result succeeded.
        EvaluationError: If ``successes_only`` is off and ``results`` is empty.
    """
    results = list(results)
    if not successes_only:
        if not results:
            raise EvaluationError(t('error.no_attacked_results'))
        return float(np.mean([r.queries_total for r in results]))
    totals = [r.queries_total for r in results if r.success]
    if not totals:
        raise NoSuccesses(t('error.no_successes'))
    return float(np.mean(totals))


def _as_document(value: Union[Document, str]) -> Document:
    return value if isinstance(value, Document) else tokenize(value)


def perturbation_rate(original: Union[Document, str], final: Union[Document, str]) -> float:
    """
    Percentage of token positions whose token differs between the two texts.

    Raises:
        ValidationError: If the token counts differ.

    Examples:
        >>> perturbation_rate("a b c d", "a x c d")
        25.0
    """
    before, after = _as_document(original), _as_document(final)
    if len(before) != len(after):
        raise ValidationError(t('error.token_count_mismatch', before=len(before), after=len(after)))
    changed = sum(1 for a, b in zip(before.tokens, after.tokens) if a != b)
    return changed / len(before) * 100.0


def scored_similarity(
    original: Union[Document, str],
    final: Union[Document, str],
    embedder: Optional[Embedder] = None,
) -> tuple[float, str]:
    """
    Cosine similarity (percent) plus the name of the embedder that produced it.

    Identical texts score 100 without calling the embedder; a zero vector
    scores 0.
    """
    embedder = embedder or LexicalEmbedder()
    a = original.text if isinstance(original, Document) else original
    b = final.text if isinstance(final, Document) else final
    if a == b:
        return 100.0, embedder.name
    vectors, provenance = embedder.embed([a, b])
    norms = np.linalg.norm(vectors, axis=1)
    if norms[0] == 0.0 or norms[1] == 0.0:
        return 0.0, provenance
    cosine = float(np.dot(vectors[0], vectors[1]) / (norms[0] * norms[1]))
    return float(np.clip(cosine, -1.0, 1.0)) * 100.0, provenance


def similarity(
    original: Union[Document, str],
    final: Union[Document, str],
    embedder: Optional[Embedder] = None,
) -> float:
    """
    Cosine similarity between embeddings of the two texts, times 100.

    Uses the lexical token-count embedder unless another is given.

    Examples:
        >>> similarity("a b", "c d")
        0.0
    """
    return scored_similarity(original, final, embedder)[0]
