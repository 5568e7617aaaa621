"""
Pytest configuration and shared fixtures.
"""

import sys
from pathlib import Path

import pytest

# Add src to path
src_path = Path(__file__).parent.parent / 'src'
sys.path.insert(0, str(src_path))

from oracle import BagOfWordsClassifier, ClassProbs, Classifier  # noqa: E402
from replacement import SynonymLexicon  # noqa: E402


class CountingClassifier(Classifier):
    """Wraps a classifier and counts every text it scores, ledger or not."""

    def __init__(self, inner: Classifier) -> None:
        self.inner = inner
        self.scored = 0

    @property
    def num_labels(self):
        return self.inner.num_labels

    def _score(self, texts: list[str]) -> list[ClassProbs]:
        self.scored += len(texts)
        return self.inner._score(texts)


@pytest.fixture
def sentiment_classifier() -> BagOfWordsClassifier:
    """Two-label classifier where 'bad' and 'awful' push toward label 1."""
    return BagOfWordsClassifier(
        {'bad': [0.0, 2.0], 'awful': [0.0, 3.0], 'good': [2.0, 0.0]},
        bias=[0.5, 0.0],
    )


@pytest.fixture
def sentiment_lexicon() -> SynonymLexicon:
    """Synonyms whose first entry carries no classifier weight."""
    return SynonymLexicon({
        'bad': ['poor', 'awful'],
        'awful': ['dire', 'bad'],
        'good': ['fine', 'nice'],
    })


@pytest.fixture
def counting() -> type[CountingClassifier]:
    """The counting wrapper class."""
    return CountingClassifier
