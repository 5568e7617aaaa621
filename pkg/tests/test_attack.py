"""
Tests for attack configuration and the attack methods.
"""

import math

import numpy as np
import pytest

from attack import (
    AttackConfig,
    AttackContext,
    AttackResult,
    attack_greedy,
    attack_hybrid,
    attack_nnary,
    attack_sentence_hybrid,
    canonical_method,
    run_attack,
)
from benchmark import ablation_corpus, planted_corpus
from oracle import BagOfWordsClassifier, LedgerSnapshot, LexiconMaskFill, QueryLedger
from replacement import SynonymLexicon
from selection import Bin, BinTable
from utils import AlreadyMisclassified, ConfigurationError, ValidationError


@pytest.fixture(scope='module')
def planted():
    """Twenty single-flip documents of 200 tokens in 10 sentences."""
    return planted_corpus(num_docs=20, seed=1)


def _context(corpus, classifier=None) -> AttackContext:
    return AttackContext(classifier=classifier or corpus.classifier(), lexicon=corpus.lexicon())


def _mean_queries(corpus, cfg: AttackConfig) -> float:
    context = _context(corpus)
    results = [run_attack(r.text, r.label, cfg, context) for r in corpus.records]
    assert all(r.success for r in results)
    return float(np.mean([r.queries_total for r in results]))


class TestAttackConfig:
    """Tests for AttackConfig normalization."""

    def test_config_id(self) -> None:
        """The id lists the settings the method uses."""
        assert AttackConfig('nnary', n=3).config_id == 'method=nnary;n=3;n_mode=manual;k=-1;replace=wordnet;top_m=5'

    def test_aliases(self) -> None:
        """CLI spellings are accepted."""
        assert AttackConfig('sentence-hybrid', n=3).method == 'sentence_hybrid'
        assert canonical_method('Dynamic-Hybrid') == 'dynamic_hybrid'

    def test_unknown_method(self) -> None:
        """Unregistered methods are rejected."""
        with pytest.raises(ConfigurationError):
            AttackConfig('beam')

    def test_binary_fixed_n(self) -> None:
        """Binary always runs with N = 2, whatever n says."""
        cfg = AttackConfig('binary', n=7)
        assert cfg.n == 2
        assert cfg.n_label == '2'

    def test_greedy_ignores_n_and_tau(self) -> None:
        """Ignored dimensions are normalized away."""
        assert AttackConfig('greedy', n=4, tau=0.5) == AttackConfig('greedy')

    @pytest.mark.parametrize("n", [None, 1, True])
    def test_manual_n_required(self, n: object) -> None:
        """Manual methods need n >= 2."""
        with pytest.raises(ConfigurationError):
            AttackConfig('nnary', n=n)

    @pytest.mark.parametrize("k", [0, -2])
    def test_invalid_budget(self, k: int) -> None:
        """k is -1 or positive."""
        with pytest.raises(ConfigurationError):
            AttackConfig('greedy', k=k)

    def test_invalid_tau(self) -> None:
        """tau must be a fraction in (0, 1]."""
        with pytest.raises(ValidationError):
            AttackConfig('hybrid', n=3, tau=1.5)

    def test_sentence_mode_only_for_sentence_hybrid(self) -> None:
        """The sentence-count mode belongs to sentence-hybrid."""
        with pytest.raises(ConfigurationError):
            AttackConfig('nnary', n=3, n_mode='sentences')
        assert AttackConfig('sentence_hybrid', n_mode='sentences').n_label == 'S'

    def test_dynamic_is_auto(self) -> None:
        """Dynamic methods cannot be switched to manual N."""
        with pytest.raises(ConfigurationError):
            AttackConfig('dynamic', n=3, n_mode='manual')
        cfg = AttackConfig('dynamic', dataset_id='imdb')
        assert cfg.n is None and cfg.n_label == 'auto'
        assert 'dataset=imdb' in cfg.config_id

    def test_budget(self) -> None:
        """budget_allows counts trials against k."""
        cfg = AttackConfig('greedy', k=2)
        assert cfg.budget_allows(1) and not cfg.budget_allows(2)
        assert AttackConfig('greedy').budget_allows(10 ** 6)


class TestAttackResult:
    """Tests for AttackResult records."""

    def test_record_round_trip(self) -> None:
        """from_record rebuilds what to_record wrote."""
        result = AttackResult(
            success=True, original_text='a bad film', final_text='a poor film', y=1,
            queries=LedgerSnapshot(5, {'root': 1, 'selection': 3, 'replacement': 1}),
            final_prob=0.3, modified_indices=(1,), method='greedy',
        )
        record = result.to_record()
        record['config_id'] = 'extra keys are ignored'
        assert AttackResult.from_record(record) == result


class TestQueryAccounting:
    """Ledger totals, phase splits and the counting wrapper."""

    def test_greedy_first_pick_costs_length_plus_one(self, planted) -> None:
        """Root plus one query per token before the first trial."""
        record = planted.records[0]
        result = attack_greedy(record.text, 1, AttackConfig('greedy'), _context(planted))
        assert result.success
        assert result.queries.by_phase['root'] + result.queries.by_phase['selection'] == 201
        assert result.queries_total == 202

    @pytest.mark.parametrize("method,n", [
        ('greedy', None),
        ('binary', None),
        ('nnary', 3),
        ('hybrid', 3),
        ('sentence_hybrid', 3),
        ('dynamic', None),
        ('dynamic_hybrid', None),
    ])
    def test_ledger_matches_counting_wrapper(self, planted, counting, method: str, n: int | None) -> None:
        """Every classifier call is charged exactly once."""
        cfg = AttackConfig(method, n=n)
        for record in planted.records[:5]:
            wrapper = counting(planted.classifier())
            result = run_attack(record.text, record.label, cfg, _context(planted, wrapper))
            assert result.queries_total == wrapper.scored
            assert result.queries_total == sum(result.queries.by_phase.values())

    def test_nnary_cost(self, planted) -> None:
        """N-nary (3) on 200 tokens: root, 14 or 15 selection queries, one trial."""
        result = attack_nnary(planted.records[0].text, 1, AttackConfig('nnary', n=3), _context(planted))
        assert result.queries_total in (16, 17)
        assert result.n == 3

    def test_hybrid_cost(self, planted) -> None:
        """Hybrid (3, 0.1): root, 9 descent queries, a short ranking, one trial."""
        result = attack_hybrid(planted.records[0].text, 1, AttackConfig('hybrid', n=3, tau=0.1), _context(planted))
        assert result.success
        assert result.queries_total in (18, 19)

    def test_sentence_hybrid_cost(self, planted) -> None:
        """Sentence-hybrid: root, 10 sentences, 3 tokens, one trial."""
        cfg = AttackConfig('sentence_hybrid', n=3)
        result = attack_sentence_hybrid(planted.records[0].text, 1, cfg, _context(planted))
        assert result.success
        assert result.queries_total == 15

    def test_already_misclassified(self, sentiment_classifier, sentiment_lexicon) -> None:
        """Inputs the classifier gets wrong are rejected after the root query."""
        context = AttackContext(sentiment_classifier, sentiment_lexicon)
        with pytest.raises(AlreadyMisclassified) as exc_info:
            attack_greedy("a good film", 1, AttackConfig('greedy'), context)
        assert exc_info.value.predicted == 0

    def test_method_mismatch(self, sentiment_classifier, sentiment_lexicon) -> None:
        """Calling an attack with another method's config is an error."""
        context = AttackContext(sentiment_classifier, sentiment_lexicon)
        with pytest.raises(ConfigurationError):
            attack_greedy("a bad film", 1, AttackConfig('nnary', n=3), context)


class TestAttackBehaviour:
    """Edit sequences, budgets and N choices."""

    def test_tau_one_equals_greedy(self, planted) -> None:
        """Hybrid with tau = 1 makes the same edits as greedy."""
        context = _context(planted)
        for record in planted.records[:5]:
            greedy = attack_greedy(record.text, 1, AttackConfig('greedy'), context)
            hybrid = attack_hybrid(record.text, 1, AttackConfig('hybrid', n=3, tau=1.0), context)
            assert hybrid.final_text == greedy.final_text
            assert hybrid.modified_indices == greedy.modified_indices
            assert hybrid.queries_total == greedy.queries_total

    def test_budget_stops_attack(self) -> None:
        """k trials are not enough for a document needing more edits."""
        corpus = ablation_corpus(num_docs=30, length=40, max_planted=6, seed=4)
        index = next(i for i, m in enumerate(corpus.planted_counts) if m >= 3)
        record = corpus.records[index]
        result = attack_greedy(record.text, 1, AttackConfig('greedy', k=2), _context(corpus))
        assert not result.success
        assert len(result.modified_indices) == 2
        assert not result.exhausted

    def test_exhaustion_without_success(self, sentiment_classifier) -> None:
        """An attack with nothing to replace ends exhausted."""
        context = AttackContext(sentiment_classifier, SynonymLexicon({}))
        result = attack_nnary("a bad film", 1, AttackConfig('nnary', n=2), context)
        assert not result.success
        assert result.exhausted
        assert result.final_text == 'a bad film'

    def test_mlm_replacement(self, planted) -> None:
        """Masked-LM replacement through the lexicon stub."""
        corpus = planted
        context = AttackContext(corpus.classifier(), provider=LexiconMaskFill(corpus.lexicon()))
        cfg = AttackConfig('greedy', replace_source='mlm', top_m=1)
        assert attack_greedy(corpus.records[0].text, 1, cfg, context).success

    @pytest.mark.parametrize("dataset_id,expected_n", [('imdb', 6), ('agnews', 2)])
    def test_dynamic_uses_bins(self, dataset_id: str, expected_n: int) -> None:
        """A 900-token document gets N from the dataset's bins."""
        words = ['x'] * 900
        words[450] = 'bad'
        clf = BagOfWordsClassifier({'bad': [0.0, 2.0]}, bias=[0.1, 0.0])
        context = AttackContext(clf, SynonymLexicon({'bad': ['poor']}))
        result = run_attack(' '.join(words), 1, AttackConfig('dynamic', dataset_id=dataset_id), context)
        assert result.success
        assert result.n == expected_n

    def test_dynamic_without_bins_falls_back(self, sentiment_classifier, sentiment_lexicon) -> None:
        """No bins and no dataset id means N = 2."""
        context = AttackContext(sentiment_classifier, sentiment_lexicon)
        result = run_attack("a bad film", 1, AttackConfig('dynamic_hybrid'), context)
        assert result.n == 2

    def test_sentence_count_mode(self, planted) -> None:
        """In sentence-count mode N is the number of sentences."""
        cfg = AttackConfig('sentence_hybrid', n_mode='sentences')
        result = attack_sentence_hybrid(planted.records[0].text, 1, cfg, _context(planted))
        assert result.success
        assert result.n == 10

    def test_sentence_fallback(self) -> None:
        """An exhausted sentence hands over to the next one unless strict."""
        clf = BagOfWordsClassifier({'grim': [0.0, 1.0], 'bad': [0.0, 0.8]}, bias=[2.1, 0.0])
        context = AttackContext(clf, SynonymLexicon({'bad': ['poor']}))
        text = "grim grim. bad x."

        relaxed = attack_sentence_hybrid(text, 1, AttackConfig('sentence_hybrid', n=2), context)
        assert relaxed.success
        assert relaxed.final_text == 'grim grim. poor x.'
        assert relaxed.queries_total == 8

        strict = attack_sentence_hybrid(text, 1, AttackConfig('sentence_hybrid', n=2, strict_sentence=True), context)
        assert not strict.success
        assert strict.exhausted

    def test_sentence_hybrid_records_n_per_sentence(self) -> None:
        """Each searched sentence gets its own N; ``n`` is the first one."""
        clf = BagOfWordsClassifier({'grim': [0.0, 1.0], 'bad': [0.0, 0.8]}, bias=[3.5, 0.0])
        bins = BinTable('custom', (Bin(0.0, 2.0, 2), Bin(2.0, math.inf, 3)))
        context = AttackContext(clf, SynonymLexicon({'bad': ['poor']}), bins=bins)
        cfg = AttackConfig('sentence_hybrid', n_mode='auto')
        result = attack_sentence_hybrid("grim grim grim. bad x.", 1, cfg, context)
        assert result.success
        assert result.final_text == 'grim grim grim. poor x.'
        assert result.n_per_sentence == (3, 2)
        assert result.n == 3
        assert AttackResult.from_record(result.to_record()) == result

    def test_single_sentence_n_list(self, planted) -> None:
        """A flip in the first sentence leaves a one-element list."""
        text = planted.records[0].text
        result = attack_sentence_hybrid(text, 1, AttackConfig('sentence_hybrid', n=3), _context(planted))
        assert result.n_per_sentence == (3,)
        nnary = attack_nnary(text, 1, AttackConfig('nnary', n=3), _context(planted))
        assert nnary.n_per_sentence == ()


class TestBudgetAccounting:
    """Only trials that spend queries count against k."""

    def _context(self) -> AttackContext:
        clf = BagOfWordsClassifier({'awful': [0.0, 1.0], 'bad': [0.0, 1.0]}, bias=[1.5, 0.0])
        return AttackContext(clf, SynonymLexicon({'bad': ['poor']}))

    def test_position_without_candidates_is_free(self) -> None:
        """A word with no synonyms is passed over without using the single allowed trial."""
        result = attack_greedy("awful bad film", 1, AttackConfig('greedy', k=1), self._context())
        assert result.success
        assert result.modified_indices == (1,)
        assert result.final_text == 'awful poor film'
        assert result.queries.by_phase == {'root': 1, 'selection': 3, 'replacement': 1}

    def test_scored_trial_uses_budget(self) -> None:
        """A trial that queries but cannot flip ends a k = 1 attack."""
        clf = BagOfWordsClassifier({'awful': [0.0, 1.0], 'bad': [0.0, 1.0]}, bias=[0.5, 0.0])
        context = AttackContext(clf, SynonymLexicon({'awful': ['dire'], 'bad': ['poor']}))
        result = attack_greedy("awful bad film", 1, AttackConfig('greedy', k=1), context)
        assert not result.success
        assert result.modified_indices == (0,)
        assert result.queries.by_phase['replacement'] == 1
        assert not result.exhausted


class TestEfficiency:
    """Query-efficiency ordering on the planted corpus."""

    def test_hybrid_cheaper_than_greedy(self, planted) -> None:
        """Hybrid (3, 0.1) needs fewer queries than greedy."""
        greedy = _mean_queries(planted, AttackConfig('greedy'))
        hybrid = _mean_queries(planted, AttackConfig('hybrid', n=3, tau=0.1))
        assert greedy == 202
        assert hybrid < greedy

    def test_sentence_hybrid_cheaper_than_nnary(self, planted) -> None:
        """Sentence-hybrid (3) needs fewer queries than N-nary (3)."""
        nnary = _mean_queries(planted, AttackConfig('nnary', n=3))
        sentence = _mean_queries(planted, AttackConfig('sentence_hybrid', n=3))
        assert sentence < nnary


_ALL_METHODS = [
    ('greedy', None),
    ('binary', None),
    ('nnary', 3),
    ('hybrid', 3),
    ('sentence_hybrid', 3),
    ('dynamic', None),
    ('dynamic_hybrid', None),
]


class TestResultProperties:
    """Soundness, determinism and the budget cap on multi-edit documents."""

    @pytest.mark.parametrize("method,n", _ALL_METHODS)
    def test_success_is_sound_and_deterministic(self, method: str, n: int | None) -> None:
        """A reported flip holds when the final text is scored again; reruns are identical."""
        corpus = ablation_corpus(num_docs=8, length=40, max_planted=4, seed=6)
        clf = corpus.classifier()
        cfg = AttackConfig(method, n=n)
        for record in corpus.records:
            result = run_attack(record.text, record.label, cfg, _context(corpus))
            if result.success:
                assert clf.predict(result.final_text, QueryLedger(), 'root').argmax != record.label
            else:
                assert clf.predict(result.final_text, QueryLedger(), 'root').argmax == record.label
            assert run_attack(record.text, record.label, cfg, _context(corpus)) == result

    @pytest.mark.parametrize("method,n", _ALL_METHODS)
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_budget_caps_edits(self, method: str, n: int | None, k: int) -> None:
        """No attack edits more than k positions."""
        corpus = ablation_corpus(num_docs=6, length=30, max_planted=5, seed=2)
        cfg = AttackConfig(method, n=n, k=k)
        for record in corpus.records:
            result = run_attack(record.text, record.label, cfg, _context(corpus))
            assert len(result.modified_indices) <= k


class TestBudgetAblation:
    """Larger budgets succeed more often and spend more."""

    def test_success_requires_budget(self) -> None:
        """A document with m planted words flips iff k >= m."""
        corpus = ablation_corpus(num_docs=40, length=60, max_planted=10, seed=3)
        context = _context(corpus)
        rates, costs = [], []
        for k in (3, 5, 15, -1):
            cfg = AttackConfig('greedy', k=k)
            results = [run_attack(r.text, r.label, cfg, context) for r in corpus.records]
            for result, m in zip(results, corpus.planted_counts):
                assert result.success == (k == -1 or m <= k)
                if result.success:
                    assert result.queries_total == 1 + 60 + 2 * (m - 1) + 1
            wins = [r.queries_total for r in results if r.success]
            rates.append(len(wins) / len(results))
            costs.append(float(np.mean(wins)) if wins else 0.0)
        assert rates == sorted(rates)
        assert costs == sorted(costs)
