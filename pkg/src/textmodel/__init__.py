"""
Text model module.
Tokenization, sentence spans and pure editing operations shared by all attacks.
"""

from .document import (
    Document,
    Span,
    adapt_candidate,
    normalize_token,
    partition,
    remove_span,
    replace_token,
    sentence_bounds,
    split_affixes,
    tokenize,
)

__all__ = [
    'Document',
    'Span',
    'adapt_candidate',
    'normalize_token',
    'partition',
    'remove_span',
    'replace_token',
    'sentence_bounds',
    'split_affixes',
    'tokenize',
]
