"""
Attack methods.

Every method follows the same loop: pick the next token position, run a
replacement trial there and stop on success, on budget exhaustion or when the
selector has nothing left. Methods differ only in how positions are picked:

    - greedy: leave-one-out ranking of the whole text, computed once
    - nnary / binary / dynamic: N-nary descent to single tokens
    - hybrid / dynamic_hybrid: N-nary descent to short segments, then
      leave-one-out ranking inside each segment
    - sentence_hybrid: sentence ranking, then N-nary descent inside the most
      promising sentence (falling back to the next sentence when exhausted)
"""

# Standard library
from dataclasses import dataclass, field, replace
from typing import Iterator, Optional, Union

# Local imports
from config import ATTACK_METHODS
from i18n import t
from oracle import Classifier, MaskFillProvider, QueryLedger
from replacement import Replacer, SynonymLexicon
from selection import (
    BinTable,
    SearchTree,
    dyn_n,
    greedy_rank,
    nnary_select_iter,
    nnary_select_segment,
)
from textmodel import Document, Span, remove_span, tokenize
from utils import (
    AlreadyMisclassified,
    ConfigurationError,
    SegmentExhausted,
    SelectionError,
    TreeExhausted,
    get_logger,
)
from .config import AttackConfig
from .result import AttackResult

logger = get_logger(__name__)


@dataclass
class AttackContext:
    """
    Oracles and resources shared by attacks.

    Args:
        classifier: Target classifier.
        lexicon: Synonym lexicon (``wordnet`` replacement, lexicon mask-fill stub).
        provider: Mask-fill provider for ``mlm`` replacement.
        bins: Length bins for automatic N; when None the shipped table of the
            configured dataset is used, or the fallback N = 2.
    """

    classifier: Classifier
    lexicon: Optional[SynonymLexicon] = None
    provider: Optional[MaskFillProvider] = None
    bins: Optional[BinTable] = None

    def replacer(self, cfg: AttackConfig) -> Replacer:
        return Replacer(cfg.replace_source, self.lexicon, self.provider, cfg.top_m)

    def bin_table(self, cfg: AttackConfig) -> BinTable:
        if self.bins is not None:
            return self.bins
        if cfg.dataset_id:
            from loaders import builtin_bin_table
            return builtin_bin_table(cfg.dataset_id)
        return BinTable('fallback')


@dataclass
class _RunState:
    """Mutable bookkeeping of one attack in progress."""

    original: Document
    doc: Document
    y: int
    p0: float
    doc_prob: float
    trials_used: int = 0
    modified: set[int] = field(default_factory=set)


def _start(
    doc: Union[Document, str],
    y: int,
    classifier: Classifier,
    ledger: QueryLedger,
) -> _RunState:
    """Score the input once and check that the classifier predicts ``y``."""
    document = tokenize(doc) if isinstance(doc, str) else doc
    probs = classifier.predict(document.text, ledger, 'root')
    if probs.argmax != y:
        logger.info(f"Input already classified as {probs.argmax}, target {y}: not attacked")
        raise AlreadyMisclassified(
            t('error.already_misclassified', predicted=probs.argmax, y=y), predicted=probs.argmax, prob=probs[y]
        )
    return _RunState(original=document, doc=document, y=y, p0=probs[y], doc_prob=probs[y])


def _drive(
    state: _RunState,
    positions: Iterator[int],
    cfg: AttackConfig,
    context: AttackContext,
    ledger: QueryLedger,
    n_used: Optional[int],
) -> AttackResult:
    """
    Run replacement trials on the positions yielded until success, budget or exhaustion.

    The budget ``k`` caps the number of positions where a trial spent at least
    one query. A position with no usable candidate (no lexicon entry, or only
    candidates skipped before scoring) costs nothing and leaves the budget
    untouched, so ``k`` bounds the words modified rather than the positions
    visited.
    """
    replacer = context.replacer(cfg)
    success = False
    exhausted = False

    while cfg.budget_allows(state.trials_used):
        try:
            index = next(positions)
        except StopIteration:
            exhausted = True
            break
        except SelectionError as e:
            logger.debug(f"Selection exhausted: {e}")
            exhausted = True
            break
        if index in state.modified:
            continue

        baseline = state.doc_prob if cfg.rebase else state.p0
        outcome = replacer.trial(state.doc, state.y, baseline, index, context.classifier, ledger)
        if outcome.queries_spent > 0:
            state.trials_used += 1
        if outcome.changed:
            state.doc = outcome.doc
            state.doc_prob = outcome.prob
            state.modified.add(index)
        if outcome.success:
            success = True
            break

    result = AttackResult(
        success=success,
        original_text=state.original.text,
        final_text=state.doc.text,
        y=state.y,
        queries=ledger.snapshot(),
        final_prob=state.doc_prob,
        modified_indices=tuple(sorted(state.modified)),
        method=cfg.method,
        n=n_used,
        tau=cfg.tau,
        k=cfg.k,
        exhausted=exhausted,
    )
    logger.info(
        f"{cfg.label} attack {'succeeded' if success else 'failed'}: "
        f"{result.queries_total} queries, {len(result.modified_indices)} edit(s)"
    )
    return result


# ---------------------------------------------------------------------------
# Position generators
# ---------------------------------------------------------------------------
def _greedy_positions(state: _RunState, classifier: Classifier, ledger: QueryLedger) -> Iterator[int]:
    for index, _ in greedy_rank(state.doc, state.y, classifier, ledger):
        yield index


def _tree_positions(
    state: _RunState,
    n: int,
    classifier: Classifier,
    ledger: QueryLedger,
) -> Iterator[int]:
    tree = SearchTree()
    tree.seed_root(state.doc.full_span, state.p0)
    while True:
        index, _ = nnary_select_iter(state.doc, state.y, n, tree, classifier, ledger)
        yield index


def _segment_positions(
    state: _RunState,
    n: int,
    tau: float,
    classifier: Classifier,
    ledger: QueryLedger,
) -> Iterator[int]:
    tree = SearchTree()
    tree.seed_root(state.doc.full_span, state.p0)
    threshold = tau * len(state.original)
    while True:
        try:
            segment, _ = nnary_select_segment(
                state.doc, state.y, n, tree, tau, classifier, ledger, threshold=threshold
            )
        except TreeExhausted as e:
            raise SegmentExhausted(t('error.segments_exhausted')) from e
        for index, _ in greedy_rank(state.doc, state.y, classifier, ledger, span=segment):
            yield index


def _sentence_n(cfg: AttackConfig, sentence: Span, num_sentences: int, bins: Optional[BinTable]) -> int:
    if cfg.n_mode == 'manual':
        return int(cfg.n)
    if cfg.n_mode == 'sentences':
        return max(2, num_sentences)
    return dyn_n(sentence.length, bins)


def _sentence_positions(
    state: _RunState,
    cfg: AttackConfig,
    bins: Optional[BinTable],
    classifier: Classifier,
    ledger: QueryLedger,
    n_used: list[int],
) -> Iterator[int]:
    sentences = state.doc.sentence_bounds
    scored = classifier.classify([remove_span(state.doc, s) for s in sentences], ledger, 'selection')
    ranked = sorted(zip(sentences, (probs[state.y] for probs in scored)), key=lambda item: (item[1], item[0].start))

    for rank, (sentence, prob) in enumerate(ranked):
        n = _sentence_n(cfg, sentence, len(sentences), bins)
        n_used.append(n)
        logger.debug(f"Sentence {sentence} (rank {rank}, prob {prob:.4f}) searched with N={n}")
        tree = SearchTree()
        tree.seed_root(sentence, prob)
        while True:
            try:
                index, _ = nnary_select_iter(state.doc, state.y, n, tree, classifier, ledger)
            except TreeExhausted:
                break
            yield index
        if cfg.strict_sentence:
            return


# ---------------------------------------------------------------------------
# Public attack methods
# ---------------------------------------------------------------------------
def _require_selection(cfg: AttackConfig, *kinds: str) -> None:
    if ATTACK_METHODS[cfg.method]['selection'] not in kinds:
        raise ConfigurationError(t('error.method_mismatch', method=cfg.method, expected=', '.join(kinds)))


def _resolve_n(doc: Document, cfg: AttackConfig, context: AttackContext) -> int:
    if cfg.n_mode == 'auto':
        return dyn_n(len(doc), context.bin_table(cfg))
    return int(cfg.n)


def attack_greedy(
    doc: Union[Document, str], y: int, cfg: AttackConfig, context: AttackContext
) -> AttackResult:
    """
    Greedy attack: rank every position once by leave-one-out removal, then
    try replacements down the ranking.

    Finding the first position costs ``len(doc) + 1`` queries including the
    initial probability.

    Raises:
        AlreadyMisclassified: If the classifier does not predict ``y``.
    """
    _require_selection(cfg, 'greedy')
    ledger = QueryLedger()
    state = _start(doc, y, context.classifier, ledger)
    return _drive(state, _greedy_positions(state, context.classifier, ledger), cfg, context, ledger, None)


def _attack_tree(
    state: _RunState, cfg: AttackConfig, context: AttackContext, ledger: QueryLedger, n: int
) -> AttackResult:
    positions = _tree_positions(state, n, context.classifier, ledger)
    return _drive(state, positions, cfg, context, ledger, n)


def attack_nnary(
    doc: Union[Document, str], y: int, cfg: AttackConfig, context: AttackContext
) -> AttackResult:
    """
    N-nary attack: select positions by N-nary descent over the whole text.

    Covers Binary (N = 2) and the manual N-nary settings; with ``n_mode``
    ``auto`` N comes from the length bins.

    Raises:
        AlreadyMisclassified: If the classifier does not predict ``y``.
    """
    _require_selection(cfg, 'nnary')
    ledger = QueryLedger()
    state = _start(doc, y, context.classifier, ledger)
    return _attack_tree(state, cfg, context, ledger, _resolve_n(state.doc, cfg, context))


def attack_dynamic(
    doc: Union[Document, str], y: int, cfg: AttackConfig, context: AttackContext
) -> AttackResult:
    """N-nary attack with N looked up from the length bins for the document length."""
    _require_selection(cfg, 'nnary')
    ledger = QueryLedger()
    state = _start(doc, y, context.classifier, ledger)
    n = dyn_n(len(state.doc), context.bin_table(cfg))
    return _attack_tree(state, cfg, context, ledger, n)


def _attack_segments(
    state: _RunState, cfg: AttackConfig, context: AttackContext, ledger: QueryLedger, n: int
) -> AttackResult:
    positions = _segment_positions(state, n, cfg.tau, context.classifier, ledger)
    return _drive(state, positions, cfg, context, ledger, n)


def attack_hybrid(
    doc: Union[Document, str], y: int, cfg: AttackConfig, context: AttackContext
) -> AttackResult:
    """
    Hybrid attack: N-nary descent until a segment is at most ``tau`` of the
    original length, then leave-one-out ranking of the segment's tokens.

    Segments are consumed in selection order; each segment's ranking is walked
    before the next segment is selected. With ``tau = 1`` the whole text is
    one segment and the edit sequence equals the greedy attack's.

    Raises:
        AlreadyMisclassified: If the classifier does not predict ``y``.
    """
    _require_selection(cfg, 'segment')
    ledger = QueryLedger()
    state = _start(doc, y, context.classifier, ledger)
    return _attack_segments(state, cfg, context, ledger, _resolve_n(state.doc, cfg, context))


def attack_dynamic_hybrid(
    doc: Union[Document, str], y: int, cfg: AttackConfig, context: AttackContext
) -> AttackResult:
    """Hybrid attack with N looked up from the length bins."""
    _require_selection(cfg, 'segment')
    ledger = QueryLedger()
    state = _start(doc, y, context.classifier, ledger)
    n = dyn_n(len(state.doc), context.bin_table(cfg))
    return _attack_segments(state, cfg, context, ledger, n)


def attack_sentence_hybrid(
    doc: Union[Document, str], y: int, cfg: AttackConfig, context: AttackContext
) -> AttackResult:
    """
    Sentence-level hybrid attack.

    Each sentence is scored by removal (one query per sentence). N-nary
    descent then runs inside the sentence with the largest drop; N is the
    manual value, the bin value for the sentence length (``auto``) or the
    sentence count (``sentences``). When that sentence is exhausted the next
    one is searched, unless ``strict_sentence`` is set. The result lists the N
    of every searched sentence in ``n_per_sentence``; its ``n`` is the first one.

    Raises:
        AlreadyMisclassified: If the classifier does not predict ``y``.
    """
    _require_selection(cfg, 'sentence')
    ledger = QueryLedger()
    state = _start(doc, y, context.classifier, ledger)
    bins = context.bin_table(cfg) if cfg.n_mode == 'auto' else None
    n_used: list[int] = []
    positions = _sentence_positions(state, cfg, bins, context.classifier, ledger, n_used)
    result = _drive(state, positions, cfg, context, ledger, None)
    if n_used:
        result = replace(result, n=n_used[0], n_per_sentence=tuple(n_used))
    return result


_DISPATCH = {
    'greedy': attack_greedy,
    'nnary': attack_nnary,
    'segment': attack_hybrid,
    'sentence': attack_sentence_hybrid,
}


def run_attack(
    doc: Union[Document, str], y: int, cfg: AttackConfig, context: AttackContext
) -> AttackResult:
    """
    Run the attack method named by ``cfg.method``.

    Raises:
        AlreadyMisclassified: If the classifier does not predict ``y``.
    """
    selection = ATTACK_METHODS[cfg.method]['selection']
    logger.debug(f"Running {cfg.config_id}")
    return _DISPATCH[selection](doc, y, cfg, context)
