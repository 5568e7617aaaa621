"""Construction of oracles from command-line values."""

# Standard library
from typing import Optional

# Local imports
from i18n import t
from loaders import load_classifier_weights
from oracle import (
    Classifier,
    ClassifierSpec,
    Embedder,
    FallbackEmbedder,
    HttpClassifier,
    HttpEmbedder,
    HttpMaskFill,
    LexicalEmbedder,
    LexiconMaskFill,
    MaskFillProvider,
    QueryLedger,
)
from replacement import SynonymLexicon
from utils import ConfigurationError, get_logger

logger = get_logger(__name__)


def build_classifier(
    value: str,
    batch_size: int = 32,
    timeout: Optional[float] = None,
    probe: bool = True,
) -> Classifier:
    """
    Build the target classifier from ``builtin:PATH`` or ``http:URL``.

    A remote classifier is probed with one empty text so an unreachable
    service fails here, before any record is attacked. The probe is charged
    to a throwaway ledger.

    Raises:
        ConfigurationError: On a malformed value or weight file.
        DataLoadError: If the weight file cannot be read.
        RemoteUnavailable: If the probe cannot reach the service.
    """
    spec = ClassifierSpec.parse(value, batch_size=batch_size)
    if spec.kind == 'builtin':
        return load_classifier_weights(spec.path)
    classifier = HttpClassifier(spec.url, batch_size=spec.batch_size, timeout=timeout)
    if probe:
        classifier.classify([''], QueryLedger(), 'root')
        logger.info(f"Remote classifier answered with {classifier.num_labels} labels")
    return classifier


def build_embedder(value: str = 'fallback', timeout: Optional[float] = None) -> Embedder:
    """
    Build the similarity embedder from ``fallback`` or ``http:URL``.

    A remote embedder falls back to the lexical one whenever it is unavailable.
    """
    if value == 'fallback':
        return LexicalEmbedder()
    prefix, sep, url = value.partition(':')
    if prefix != 'http' or not sep or not url:
        raise ConfigurationError(t('error.invalid_choice', name='embedder', value=value, options='fallback, http:URL'))
    return FallbackEmbedder(HttpEmbedder(url, timeout=timeout))


def build_mask_fill(
    value: str = 'lexicon',
    lexicon: Optional[SynonymLexicon] = None,
    timeout: Optional[float] = None,
) -> MaskFillProvider:
    """
    Build the masked-LM candidate provider from ``lexicon`` or ``http:URL``.

    Raises:
        ConfigurationError: On a malformed value, or ``lexicon`` without a lexicon.
    """
    if value == 'lexicon':
        if lexicon is None:
            raise ConfigurationError(t('error.lexicon_required'))
        return LexiconMaskFill(lexicon)
    prefix, sep, url = value.partition(':')
    if prefix != 'http' or not sep or not url:
        raise ConfigurationError(t('error.invalid_choice', name='mask-fill', value=value, options='lexicon, http:URL'))
    return HttpMaskFill(url, timeout=timeout)
