"""Greedy word-importance ranking by leave-one-out removal."""

# Standard library
from typing import Optional

# Local imports
from oracle import Classifier, QueryLedger
from textmodel import Document, Span, remove_span
from utils import get_logger

logger = get_logger(__name__)


def greedy_rank(
    doc: Document,
    y: int,
    classifier: Classifier,
    ledger: QueryLedger,
    span: Optional[Span] = None,
) -> list[tuple[int, float]]:
    """
    Rank token positions by the target probability left after removing each one.

    One query per token in ``span`` (the whole document by default).

    Args:
        doc: Document being attacked.
        y: Target label.
        classifier: Scoring oracle.
        ledger: Ledger charged in the ``selection`` phase.
        span: Restrict scoring to these positions.

    Returns:
        ``(index, prob)`` pairs, lowest probability (largest drop) first,
        lower index first on ties.

    Raises:
        SpanOutOfRange: If ``span`` does not fit inside ``doc``.
    """
    span = span or doc.full_span
    doc.check_span(span)
    positions = list(span.indices())
    texts = [remove_span(doc, Span(i, i + 1)) for i in positions]
    scored = classifier.classify(texts, ledger, 'selection')
    ranking = sorted(((i, probs[y]) for i, probs in zip(positions, scored)), key=lambda item: (item[1], item[0]))
    logger.debug(f"Greedy ranking over {span}: top position {ranking[0][0]}")
    return ranking
