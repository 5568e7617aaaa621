"""
N-nary span search.

Both selectors start from the lowest-probability frontier node of the tree,
split it into ``n`` subspans, score each removal and descend into the child
with the largest drop. :func:`nnary_select_iter` descends to a single token;
:func:`nnary_select_segment` stops once a span is no longer than the split
threshold.
"""

# Standard library
from typing import Optional

# Local imports
from i18n import t
from oracle import Classifier, QueryLedger
from textmodel import Document, Span, partition, remove_span
from utils import TreeExhausted, get_logger, validate_fraction, validate_positive_integer
from .tree import SearchTree

logger = get_logger(__name__)


def _ensure_root(
    doc: Document,
    y: int,
    tree: SearchTree,
    classifier: Classifier,
    ledger: QueryLedger,
) -> None:
    tree.observe(doc)
    if tree.is_empty:
        prob = classifier.predict(doc.text, ledger, 'root')[y]
        tree.seed_root(doc.full_span, prob)
    else:
        doc.check_span(tree.root.span)


def _split(
    doc: Document,
    y: int,
    n: int,
    tree: SearchTree,
    node_id: int,
    classifier: Classifier,
    ledger: QueryLedger,
) -> int:
    """Split a node, score every subspan removal and return the best child id."""
    spans = partition(tree.node(node_id).span, n)
    scored = classifier.classify([remove_span(doc, s) for s in spans], ledger, 'selection')
    tree.attach_children(node_id, spans, [probs[y] for probs in scored])
    return tree.best_child(node_id)


def _next_frontier(tree: SearchTree) -> int:
    node_id = tree.lowest_frontier()
    if node_id is None:
        raise TreeExhausted(t('error.tree_exhausted'))
    return node_id


def nnary_select_iter(
    doc: Document,
    y: int,
    n: int,
    tree: SearchTree,
    classifier: Classifier,
    ledger: QueryLedger,
) -> tuple[int, SearchTree]:
    """
    Select the next token position by N-nary descent.

    An empty tree gets a root over the whole document scored with one
    ``root`` query. A seeded tree keeps its root span, which may be a single
    sentence. The root is always split, even when it covers one token; any
    other single-token frontier node is returned without further queries.

    Args:
        doc: Current document (the tree notices edits since the last call).
        y: Target label.
        n: Split factor (>= 2).
        tree: Search tree owned by the running attack; mutated in place.
        classifier: Scoring oracle.
        ledger: Ledger charged in the ``root`` and ``selection`` phases.

    Returns:
        Tuple ``(token index, tree)``. The returned position is marked explored.

    Raises:
        TreeExhausted: When no frontier node remains.
    """
    validate_positive_integer(n, 'n', minimum=2)
    _ensure_root(doc, y, tree, classifier, ledger)

    current = _next_frontier(tree)
    while True:
        node = tree.node(current)
        if node.span.length == 1 and not node.is_root:
            tree.mark_explored(current)
            logger.debug(f"N-nary ({n}) selected position {node.span.start}")
            return node.span.start, tree
        current = _split(doc, y, n, tree, current, classifier, ledger)


def nnary_select_segment(
    doc: Document,
    y: int,
    n: int,
    tree: SearchTree,
    tau: float,
    classifier: Classifier,
    ledger: QueryLedger,
    threshold: Optional[float] = None,
) -> tuple[Span, SearchTree]:
    """
    Select the next promising segment by N-nary descent.

    Descent continues while the span is longer than ``tau`` times the
    document length (and longer than one token).

    Args:
        doc: Current document.
        y: Target label.
        n: Split factor (>= 2).
        tree: Search tree owned by the running attack.
        tau: Threshold as a fraction of the document length, in (0, 1].
        classifier: Scoring oracle.
        ledger: Ledger charged in the ``root`` and ``selection`` phases.
        threshold: Explicit threshold in tokens, overriding ``tau``.

    Returns:
        Tuple ``(segment, tree)``. The segment's node is marked explored.

    Raises:
        TreeExhausted: When no frontier node remains.

    Examples:
        With 200 tokens, ``tau=0.10`` and ``n=3`` the first call spends
        1 + 3 * 3 queries and returns an 8-token segment.
    """
    validate_positive_integer(n, 'n', minimum=2)
    tau = validate_fraction(tau, 'tau')
    limit = tau * len(doc) if threshold is None else threshold
    _ensure_root(doc, y, tree, classifier, ledger)

    current = _next_frontier(tree)
    while tree.node(current).span.length > limit and tree.node(current).span.length > 1:
        current = _split(doc, y, n, tree, current, classifier, ledger)

    tree.mark_explored(current)
    segment = tree.node(current).span
    logger.debug(f"Segment selection ({n}, tau={tau}) returned {segment}")
    return segment, tree
