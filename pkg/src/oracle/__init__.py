"""
Oracle module.
Black-box classifier boundary, query metering, mask-fill providers and embedders.
"""

from .classifiers import BagOfWordsClassifier, Classifier, ClassifierSpec, HttpClassifier
from .embedders import Embedder, FallbackEmbedder, HttpEmbedder, LexicalEmbedder
from .http import normalize_endpoint, post_json
from .probs import ClassProbs, LedgerSnapshot, QueryLedger
from .providers import (
    HttpMaskFill,
    LexiconMaskFill,
    MaskFillProvider,
    SynonymSource,
    mask_fill_candidates,
)

__all__ = [
    'BagOfWordsClassifier',
    'Classifier',
    'ClassifierSpec',
    'HttpClassifier',
    'Embedder',
    'FallbackEmbedder',
    'HttpEmbedder',
    'LexicalEmbedder',
    'normalize_endpoint',
    'post_json',
    'ClassProbs',
    'LedgerSnapshot',
    'QueryLedger',
    'HttpMaskFill',
    'LexiconMaskFill',
    'MaskFillProvider',
    'SynonymSource',
    'mask_fill_candidates',
]
