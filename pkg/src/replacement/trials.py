"""
Single-position replacement trials.

A trial substitutes candidates at one token position, one query each, in
candidate order. It stops at the first candidate that changes the predicted
label; otherwise it keeps the candidate with the lowest target probability
strictly below the baseline, or leaves the document unchanged.
"""

# Standard library
from dataclasses import dataclass
from typing import Iterable, Optional

# Local imports
from config import DEFAULT_TOP_M, REPLACE_SOURCES
from i18n import t
from oracle import Classifier, MaskFillProvider, QueryLedger, LexiconMaskFill, mask_fill_candidates
from textmodel import Document, adapt_candidate, replace_token
from utils import ConfigurationError, get_logger
from .lexicon import SynonymLexicon

logger = get_logger(__name__)


@dataclass(frozen=True)
class ReplacementOutcome:
    """Result of one replacement trial."""

    success: bool
    doc: Document
    prob: float
    queries_spent: int
    index: int
    word: Optional[str] = None

    @property
    def changed(self) -> bool:
        """True when a candidate was kept in ``doc``."""
        return self.word is not None


def try_candidates(
    doc: Document,
    y: int,
    p0: float,
    index: int,
    candidates: Iterable[str],
    classifier: Classifier,
    ledger: QueryLedger,
) -> ReplacementOutcome:
    """
    Run a replacement trial over ``candidates`` at ``index``.

    Each candidate is shaped after the original token (capitalization and
    attached punctuation). Candidates equal to the current token, repeated
    candidates and candidates containing whitespace are skipped without a
    query.

    Args:
        doc: Current document.
        y: Target label.
        p0: Baseline target probability.
        index: Token position.
        candidates: Replacement words, best first.
        classifier: Scoring oracle.
        ledger: Ledger charged in the ``replacement`` phase.

    Returns:
        The trial outcome.
    """
    doc.check_index(index)
    original = doc.tokens[index]
    best = ReplacementOutcome(False, doc, p0, 0, index)
    tried: set[str] = set()
    spent = 0

    for candidate in candidates:
        word = adapt_candidate(original, candidate)
        if word == original or word in tried or any(ch.isspace() for ch in word):
            continue
        tried.add(word)
        trial_doc = replace_token(doc, index, word)
        probs = classifier.predict(trial_doc.text, ledger, 'replacement')
        spent += 1
        if probs.argmax != y:
            logger.debug(f"Position {index}: '{original}' -> '{word}' flips the label after {spent} trial(s)")
            return ReplacementOutcome(True, trial_doc, probs[y], spent, index, word)
        if probs[y] < best.prob:
            best = ReplacementOutcome(False, trial_doc, probs[y], spent, index, word)

    return ReplacementOutcome(False, best.doc, best.prob, spent, index, best.word)


def wordnet_replace(
    doc: Document,
    y: int,
    p0: float,
    index: int,
    lexicon: SynonymLexicon,
    classifier: Classifier,
    ledger: QueryLedger,
) -> ReplacementOutcome:
    """
    Synonym trial with candidates taken from ``lexicon`` in rank order.

    A token without synonyms returns the unchanged document at ``p0`` with
    zero queries.

    Examples:
        If the first synonym already flips the label the outcome is a
        success after exactly one query.
    """
    return try_candidates(doc, y, p0, index, lexicon.synonyms(doc.tokens[index]), classifier, ledger)


def mlm_replace(
    doc: Document,
    y: int,
    p0: float,
    index: int,
    provider: MaskFillProvider,
    top_m: int,
    classifier: Classifier,
    ledger: QueryLedger,
) -> ReplacementOutcome:
    """Masked-LM trial over the provider's top ``top_m`` candidates."""
    candidates = mask_fill_candidates(doc, index, provider, top_m)
    return try_candidates(doc, y, p0, index, candidates, classifier, ledger)


class Replacer:
    """
    Replacement strategy bound to its candidate source.

    Args:
        source: ``wordnet`` or ``mlm``.
        lexicon: Synonym lexicon (required for ``wordnet``).
        provider: Mask-fill provider for ``mlm``; defaults to the lexicon stub.
        top_m: Candidates requested from the provider.
    """

    def __init__(
        self,
        source: str,
        lexicon: Optional[SynonymLexicon] = None,
        provider: Optional[MaskFillProvider] = None,
        top_m: int = DEFAULT_TOP_M,
    ) -> None:
        if source not in REPLACE_SOURCES:
            raise ConfigurationError(
                t('error.invalid_choice', name='replace', value=source, options=', '.join(REPLACE_SOURCES))
            )
        if source == 'wordnet' and lexicon is None:
            raise ConfigurationError(t('error.lexicon_required'))
        if source == 'mlm' and provider is None:
            if lexicon is None:
                raise ConfigurationError(t('error.provider_required'))
            provider = LexiconMaskFill(lexicon)
        self.source = source
        self.lexicon = lexicon
        self.provider = provider
        self.top_m = top_m

    def trial(
        self,
        doc: Document,
        y: int,
        p0: float,
        index: int,
        classifier: Classifier,
        ledger: QueryLedger,
    ) -> ReplacementOutcome:
        if self.source == 'wordnet':
            return wordnet_replace(doc, y, p0, index, self.lexicon, classifier, ledger)
        return mlm_replace(doc, y, p0, index, self.provider, self.top_m, classifier, ledger)
