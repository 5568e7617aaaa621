"""
Replacement module.
Synonym and masked-LM substitution trials at a single token position.
"""

from .lexicon import SynonymLexicon
from .trials import ReplacementOutcome, Replacer, mlm_replace, try_candidates, wordnet_replace

__all__ = [
    'SynonymLexicon',
    'ReplacementOutcome',
    'Replacer',
    'mlm_replace',
    'try_candidates',
    'wordnet_replace',
]
