"""
Synthetic planted-word corpora.

Documents are filler tokens without classifier weight plus a few planted
tokens that decide the label, so the position an attack must find is known.

    - :func:`planted_corpus`: one strong planted word inside a short sentence
    - :func:`ablation_corpus`: a varying number of weak planted words, all of
      which must be replaced before the prediction flips
"""

# Standard library
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Union

# Third-party packages
import numpy as np
import pandas as pd

# Local imports
from loaders import BIAS_TOKEN, DatasetRecord
from oracle import BagOfWordsClassifier
from replacement import SynonymLexicon
from textmodel import partition, Span
from utils import ValidationError, get_logger, validate_positive_integer

logger = get_logger(__name__)

FILLER_VOCABULARY: tuple[str, ...] = tuple(f"w{i:03d}" for i in range(400))
PLANTED_WORDS: tuple[str, ...] = ('awful', 'dreadful', 'horrid', 'dismal')
NEUTRAL_SYNONYMS: tuple[str, ...] = ('bland', 'plain', 'middling', 'ordinary')


@dataclass(frozen=True)
class PlantedCorpus:
    """Records plus the classifier and lexicon that make them attackable."""

    records: list[DatasetRecord]
    weights: dict[str, list[float]]
    bias: list[float]
    synonyms: dict[str, list[str]]
    planted_counts: list[int] = field(default_factory=list)

    def classifier(self) -> BagOfWordsClassifier:
        return BagOfWordsClassifier(self.weights, bias=self.bias)

    def lexicon(self) -> SynonymLexicon:
        return SynonymLexicon(self.synonyms)

    def save(self, directory: Union[str, Path]) -> dict[str, Path]:
        """
        Write ``dataset.jsonl``, ``lexicon.tsv`` and ``weights.tsv``.

        Returns:
            Mapping with keys ``dataset``, ``lexicon`` and ``weights``.
        """
        base = Path(directory)
        base.mkdir(parents=True, exist_ok=True)
        paths = {
            'dataset': base / 'dataset.jsonl',
            'lexicon': base / 'lexicon.tsv',
            'weights': base / 'weights.tsv',
        }
        with open(paths['dataset'], 'w', encoding='utf-8', newline='\n') as handle:
            for record in self.records:
                handle.write(json.dumps({'text': record.text, 'label': record.label}) + '\n')

        pd.DataFrame(
            [(word, ','.join(ranked)) for word, ranked in self.synonyms.items()],
        ).to_csv(paths['lexicon'], sep='\t', index=False, header=False, lineterminator='\n')

        rows = [[BIAS_TOKEN, *self.bias]] + [[token, *row] for token, row in self.weights.items()]
        pd.DataFrame(rows).to_csv(
            paths['weights'], sep='\t', index=False, header=False, lineterminator='\n'
        )
        logger.info(f"Synthetic corpus of {len(self.records)} records written to {base}")
        return paths


def _fillers(rng: np.random.Generator, count: int) -> list[str]:
    return [FILLER_VOCABULARY[i] for i in rng.integers(0, len(FILLER_VOCABULARY), size=count)]


def _close_sentences(tokens: list[str], spans: list[Span]) -> str:
    for span in spans:
        tokens[span.end - 1] = tokens[span.end - 1] + '.'
    return ' '.join(tokens)


def planted_corpus(
    num_docs: int = 200,
    length: int = 200,
    num_sentences: int = 10,
    planted_sentence_length: int = 3,
    seed: int = 0,
) -> PlantedCorpus:
    """
    Documents of ``length`` tokens with one planted word in a short sentence.

    The planted word pushes the builtin classifier to label 1 (weight +2
    against a bias of 0.1 toward label 0); its first synonym carries no
    weight, so a single replacement at the planted position flips the label.
    The remaining tokens are split into ``num_sentences - 1`` filler sentences.

    Raises:
        ValidationError: If the sentence layout does not fit in ``length``.
    """
    validate_positive_integer(num_docs, 'num_docs')
    validate_positive_integer(num_sentences, 'num_sentences', minimum=2)
    validate_positive_integer(planted_sentence_length, 'planted_sentence_length')
    if length - planted_sentence_length < num_sentences - 1:
        raise ValidationError(f"length {length} cannot hold {num_sentences} sentences")

    rng = np.random.default_rng(seed)
    records: list[DatasetRecord] = []
    for _ in range(num_docs):
        filler_spans = partition(Span(0, length - planted_sentence_length), num_sentences - 1)
        slot = int(rng.integers(0, num_sentences))
        lengths = [s.length for s in filler_spans]
        lengths.insert(slot, planted_sentence_length)

        tokens = _fillers(rng, length)
        spans: list[Span] = []
        start = 0
        for size in lengths:
            spans.append(Span(start, start + size))
            start += size
        planted_span = spans[slot]
        position = planted_span.start + int(rng.integers(0, planted_span.length))
        tokens[position] = PLANTED_WORDS[int(rng.integers(0, len(PLANTED_WORDS)))]
        records.append(DatasetRecord(text=_close_sentences(tokens, spans), label=1))

    return PlantedCorpus(
        records=records,
        weights={word: [0.0, 2.0] for word in PLANTED_WORDS},
        bias=[0.1, 0.0],
        synonyms={word: [NEUTRAL_SYNONYMS[i], PLANTED_WORDS[(i + 1) % len(PLANTED_WORDS)]]
                  for i, word in enumerate(PLANTED_WORDS)},
        planted_counts=[1] * num_docs,
    )


def ablation_corpus(
    num_docs: int = 200,
    length: int = 200,
    max_planted: int = 20,
    seed: int = 0,
) -> PlantedCorpus:
    """
    Documents with between 1 and ``max_planted`` weak planted words.

    Each planted word adds +1 toward label 1 against a bias of -0.5, so the
    label flips only once every planted word is replaced. Both synonyms of a
    planted word are neutral, so each non-final replacement costs two
    queries and the final one costs one.
    """
    validate_positive_integer(num_docs, 'num_docs')
    validate_positive_integer(max_planted, 'max_planted')
    if max_planted > length:
        raise ValidationError(f"cannot plant {max_planted} words in {length} tokens")

    rng = np.random.default_rng(seed)
    records: list[DatasetRecord] = []
    counts: list[int] = []
    for _ in range(num_docs):
        count = int(rng.integers(1, max_planted + 1))
        tokens = _fillers(rng, length)
        for position in rng.choice(length, size=count, replace=False):
            tokens[int(position)] = PLANTED_WORDS[int(rng.integers(0, len(PLANTED_WORDS)))]
        records.append(DatasetRecord(text=_close_sentences(tokens, [Span(0, length)]), label=1))
        counts.append(count)

    return PlantedCorpus(
        records=records,
        weights={word: [0.0, 1.0] for word in PLANTED_WORDS},
        bias=[0.0, -0.5],
        synonyms={word: [NEUTRAL_SYNONYMS[i], NEUTRAL_SYNONYMS[(i + 1) % len(NEUTRAL_SYNONYMS)]]
                  for i, word in enumerate(PLANTED_WORDS)},
        planted_counts=counts,
    )
