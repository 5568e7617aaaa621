"""
Tests for dataset, resource and results file loaders.
"""

import json
import math
from pathlib import Path

import pandas as pd
import pytest

from loaders import (
    ResultsWriter,
    builtin_bin_table,
    encode_record,
    load_bin_table,
    load_classifier_weights,
    load_dataset,
    load_lexicon,
    load_run_config,
    load_validation_results,
    read_completed,
    read_results,
    sample_indices,
    sample_records,
    save_summary_csv,
    validate_labels,
    write_bin_table,
)
from loaders.dataset_loader import DatasetRecord
from oracle import QueryLedger
from selection import Bin, BinTable
from utils import (
    ConfigurationError,
    DataLoadError,
    EmptyDataset,
    FileNotFoundError,
    LexiconError,
    ParseError,
    ValidationError,
)


def _write(path: Path, text: str) -> Path:
    path.write_text(text, encoding='utf-8')
    return path


class TestLoadDataset:
    """Tests for load_dataset."""

    def test_reads_in_order(self, tmp_path: Path) -> None:
        """Records come back in file order; blank lines are ignored."""
        path = _write(tmp_path / 'data.jsonl', '{"text": "a good film", "label": 1}\n\n{"text": "bad", "label": 0}\n')
        records = load_dataset(path)
        assert records == [DatasetRecord('a good film', 1), DatasetRecord('bad', 0)]

    @pytest.mark.parametrize("bad_line", [
        'not json',
        '[1, 2]',
        '{"text": "a"}',
        '{"label": 1}',
        '{"text": 3, "label": 1}',
        '{"text": "a", "label": -1}',
        '{"text": "a", "label": true}',
        '{"text": "a", "label": "1"}',
        '{"text": "   ", "label": 0}',
    ])
    def test_parse_error_line(self, tmp_path: Path, bad_line: str) -> None:
        """The first malformed line is reported with its 1-based number, blank lines included."""
        path = _write(tmp_path / 'data.jsonl', '{"text": "ok", "label": 0}\n\n' + bad_line + '\n')
        with pytest.raises(ParseError) as excinfo:
            load_dataset(path)
        assert excinfo.value.line == 3

    def test_empty(self, tmp_path: Path) -> None:
        """A file with no records is an error of its own."""
        path = _write(tmp_path / 'data.jsonl', '\n\n')
        with pytest.raises(EmptyDataset):
            load_dataset(path)

    def test_missing_file(self, tmp_path: Path) -> None:
        """A missing dataset raises FileNotFoundError."""
        with pytest.raises(FileNotFoundError):
            load_dataset(tmp_path / 'absent.jsonl')


class TestSampling:
    """Tests for sample_indices, sample_records and validate_labels."""

    def test_deterministic_and_sorted(self) -> None:
        """The same seed gives the same sorted sample."""
        first = sample_indices(1000, 25, seed=42)
        assert first == sample_indices(1000, 25, seed=42)
        assert first == sorted(first)
        assert len(set(first)) == 25
        assert all(0 <= i < 1000 for i in first)

    def test_sample_larger_than_total(self) -> None:
        """Asking for more than exists returns everything."""
        assert sample_indices(4, 10, seed=1) == [0, 1, 2, 3]
        assert sample_indices(4, 4) == [0, 1, 2, 3]

    def test_invalid_size(self) -> None:
        """A sample must hold at least one record."""
        with pytest.raises(ValidationError):
            sample_indices(10, 0)

    def test_sample_records_pairs(self) -> None:
        """Pairs keep the original index."""
        records = [DatasetRecord(f"t{i}", 0) for i in range(6)]
        pairs = sample_records(records, 3, seed=5)
        assert [index for index, _ in pairs] == sample_indices(6, 3, seed=5)
        assert all(records[index] is record for index, record in pairs)

    def test_validate_labels(self) -> None:
        """Labels beyond the classifier's range are rejected; an unknown range is not checked."""
        records = [DatasetRecord('a', 0), DatasetRecord('b', 2)]
        validate_labels(records, None)
        validate_labels(records, 3)
        with pytest.raises(ValidationError):
            validate_labels(records, 2)


class TestLoadLexicon:
    """Tests for load_lexicon."""

    def test_ranked_synonyms(self, tmp_path: Path) -> None:
        """Header-less lines with comma-separated synonyms keep file order."""
        path = _write(tmp_path / 'lex.tsv', 'good\tfine,great\nbad\tpoor\n')
        lexicon = load_lexicon(path)
        assert lexicon.synonyms('good') == ['fine', 'great']
        assert lexicon.synonyms('bad') == ['poor']
        assert len(lexicon) == 2

    def test_entries_stripped_and_lowercased(self, tmp_path: Path) -> None:
        """Spaces around synonyms and empty entries are dropped; headwords are lowercased."""
        path = _write(tmp_path / 'lex.tsv', 'Good\t fine , nice,,great \n')
        assert load_lexicon(path).synonyms('good') == ['fine', 'nice', 'great']

    def test_cap(self, tmp_path: Path) -> None:
        """max_candidates truncates each ranking."""
        path = _write(tmp_path / 'lex.tsv', 'good\tfine,nice,great\n')
        assert load_lexicon(path, max_candidates=1).synonyms('good') == ['fine']

    @pytest.mark.parametrize("content", ['good\t\nbad\tpoor\n', 'bad\tpoor\ngood\t,\n'])
    def test_rows_without_synonyms_skipped(self, tmp_path: Path, content: str) -> None:
        """Lines without synonyms are dropped with a warning."""
        lexicon = load_lexicon(_write(tmp_path / 'lex.tsv', content))
        assert 'good' not in lexicon
        assert len(lexicon) == 1

    def test_duplicate_headword(self, tmp_path: Path) -> None:
        """A repeated headword names its file line, blank lines included."""
        path = _write(tmp_path / 'lex.tsv', 'good\tfine\nbad\tpoor\n\nGOOD\tnice\n')
        with pytest.raises(LexiconError) as excinfo:
            load_lexicon(path)
        assert '4' in str(excinfo.value)

    @pytest.mark.parametrize("content", ['', 'good\tfine\tgreat\n'])
    def test_unreadable(self, tmp_path: Path, content: str) -> None:
        """Empty files and lines with extra fields are load errors."""
        path = _write(tmp_path / 'lex.tsv', content)
        with pytest.raises(DataLoadError):
            load_lexicon(path)


class TestLoadClassifierWeights:
    """Tests for load_classifier_weights."""

    def test_weights_with_leading_bias(self, tmp_path: Path) -> None:
        """A first ``#bias`` line sets the bias; every other line is a token."""
        path = _write(tmp_path / 'w.tsv', '#bias\t0.0\t0.5\nbad\t0\t2\ngood\t2\t0\n')
        clf = load_classifier_weights(path)
        assert clf.num_labels == 2
        assert clf.predict('good', QueryLedger(), 'root').argmax == 0
        assert clf.predict('film', QueryLedger(), 'root').argmax == 1

    def test_weights_without_bias(self, tmp_path: Path) -> None:
        """Without a bias line the first line is a token and the bias is zero."""
        path = _write(tmp_path / 'w.tsv', 'good\t-1.0\t1.0\nbad\t1.0\t-1.0\n')
        clf = load_classifier_weights(path)
        assert clf.num_labels == 2
        assert clf.predict('good', QueryLedger(), 'root').argmax == 1
        assert clf.predict('bad', QueryLedger(), 'root').argmax == 0
        assert list(clf.predict('', QueryLedger(), 'root').probs) == pytest.approx([0.5, 0.5])

    def test_bias_line_matches_hand_softmax(self, tmp_path: Path) -> None:
        """``#bias 0 0`` plus ``good -1 1`` scores 'good' as softmax([-1, 1])."""
        path = _write(tmp_path / 'w.tsv', '#bias\t0.0\t0.0\ngood\t-1.0\t1.0\nbad\t1.0\t-1.0\n')
        probs = load_classifier_weights(path).predict('good', QueryLedger(), 'root')
        assert probs[1] == pytest.approx(1 / (1 + math.exp(-2)))

    def test_three_labels(self, tmp_path: Path) -> None:
        """Every field after the token is one label."""
        path = _write(tmp_path / 'w.tsv', 'sports\t0\t0\t3\n')
        clf = load_classifier_weights(path)
        assert clf.num_labels == 3
        assert clf.predict('sports', QueryLedger(), 'root').argmax == 2

    def test_too_few_labels(self, tmp_path: Path) -> None:
        """One weight per token is not a classifier."""
        path = _write(tmp_path / 'w.tsv', 'bad\t1\n')
        with pytest.raises(ConfigurationError):
            load_classifier_weights(path)

    @pytest.mark.parametrize("content", ['bad\tx\t2\n', 'bad\t1\t2\ngood\t1\n'])
    def test_non_numeric(self, tmp_path: Path, content: str) -> None:
        """Weights must parse as floats and no field may be missing."""
        path = _write(tmp_path / 'w.tsv', content)
        with pytest.raises(ConfigurationError):
            load_classifier_weights(path)


class TestBinTables:
    """Tests for bin table reading and writing."""

    def test_write_then_load(self, tmp_path: Path) -> None:
        """A written table loads back equal, with the stem as dataset id."""
        table = BinTable('demo', (Bin(0.0, 100.0, 3), Bin(100.0, math.inf, 6)))
        path = write_bin_table(table, tmp_path / 'nested' / 'demo.tsv')
        assert path.read_text(encoding='utf-8').splitlines() == ['lower\tupper\tn', '0\t100\t3', '100\tmax\t6']
        assert load_bin_table(path) == table

    def test_explicit_dataset_id(self, tmp_path: Path) -> None:
        """An explicit id overrides the file stem."""
        path = _write(tmp_path / 'bins.tsv', 'lower\tupper\tn\n0\tmax\t4\n')
        table = load_bin_table(path, dataset_id='yelp')
        assert table.dataset_id == 'yelp'
        assert table.lookup(10_000) == 4

    def test_bad_bound(self, tmp_path: Path) -> None:
        """Unparsable bounds are load errors."""
        path = _write(tmp_path / 'bins.tsv', 'lower\tupper\tn\n0\tlots\t4\n')
        with pytest.raises(DataLoadError):
            load_bin_table(path)

    def test_overlap(self, tmp_path: Path) -> None:
        """Overlapping rows are invalid."""
        path = _write(tmp_path / 'bins.tsv', 'lower\tupper\tn\n0\t100\t3\n50\tmax\t6\n')
        with pytest.raises(ValidationError):
            load_bin_table(path)

    @pytest.mark.parametrize("dataset_id", ['imdb', 'yelp', 'agnews', 'IMDB '])
    def test_builtin(self, dataset_id: str) -> None:
        """Shipped tables are keyed by normalized dataset id."""
        table = builtin_bin_table(dataset_id)
        assert table.dataset_id == dataset_id.strip().lower()
        assert len(table) > 0

    def test_builtin_unknown(self) -> None:
        """Only shipped datasets have builtin tables."""
        with pytest.raises(ValidationError):
            builtin_bin_table('sst2')


class TestValidationAndRunConfig:
    """Tests for load_validation_results and load_run_config."""

    def test_validation_rows(self, tmp_path: Path) -> None:
        """Calibration rows load as a frame."""
        lines = [json.dumps({'length': 10 * i, 'n': 2, 'queries': 5.0}) for i in range(1, 4)]
        frame = load_validation_results(_write(tmp_path / 'v.jsonl', '\n'.join(lines) + '\n'))
        assert list(frame['length']) == [10, 20, 30]

    def test_validation_unparsable(self, tmp_path: Path) -> None:
        """Broken JSON Lines are a load error."""
        with pytest.raises(DataLoadError):
            load_validation_results(_write(tmp_path / 'v.jsonl', '{"length": 1,\n'))

    def test_run_config_keys(self, tmp_path: Path) -> None:
        """Flag spellings with dashes become identifiers."""
        path = _write(tmp_path / 'run.yaml', '--methods: greedy,nnary\ntop-m: 3\nseed: 7\n')
        assert load_run_config(path) == {'methods': 'greedy,nnary', 'top_m': 3, 'seed': 7}

    def test_run_config_empty(self, tmp_path: Path) -> None:
        """An empty file is an empty configuration."""
        assert load_run_config(_write(tmp_path / 'run.yaml', '')) == {}

    @pytest.mark.parametrize("content", ['- a\n- b\n', 'outer:\n  inner: 1\n', 'a: [1\n'])
    def test_run_config_invalid(self, tmp_path: Path, content: str) -> None:
        """Lists, nested mappings and bad YAML are rejected."""
        with pytest.raises(ConfigurationError):
            load_run_config(_write(tmp_path / 'run.yaml', content))


class TestResultsFiles:
    """Tests for the results writer and readers."""

    def test_encode_sorted(self) -> None:
        """Key order never changes the bytes."""
        assert encode_record({'b': 1, 'a': 2}) == encode_record({'a': 2, 'b': 1}) == '{"a": 2, "b": 1}\n'

    def test_write_and_read(self, tmp_path: Path) -> None:
        """Written records read back in order; the writer appends."""
        path = tmp_path / 'out' / 'results.jsonl'
        with ResultsWriter(path) as writer:
            writer.write({'config_id': 'c', 'record_index': 0})
        with ResultsWriter(path) as writer:
            writer.write({'config_id': 'c', 'record_index': 1})
            assert writer.written == 1
        assert [r['record_index'] for r in read_results(path)] == [0, 1]

    def test_writer_outside_with(self, tmp_path: Path) -> None:
        """Writing needs an open file."""
        with pytest.raises(RuntimeError):
            ResultsWriter(tmp_path / 'r.jsonl').write({})

    def test_read_missing(self, tmp_path: Path) -> None:
        """A missing file has no results."""
        assert read_results(tmp_path / 'absent.jsonl') == []
        assert read_completed(tmp_path / 'absent.jsonl') == ([], set())

    def test_read_bad_line(self, tmp_path: Path) -> None:
        """Malformed lines are parse errors with a line number."""
        path = _write(tmp_path / 'r.jsonl', '{"a": 1}\nnope\n')
        with pytest.raises(ParseError) as excinfo:
            read_results(path)
        assert excinfo.value.line == 2

    @pytest.mark.parametrize("tail", ['{"config_id": "c", "record_index": 1}', '{"config_id": "c", "rec\n'])
    def test_completed_truncates_tail(self, tmp_path: Path, tail: str) -> None:
        """An interrupted last line is cut off and not counted."""
        intact = encode_record({'config_id': 'c', 'record_index': 0})
        path = _write(tmp_path / 'r.jsonl', intact + tail)
        records, done = read_completed(path)
        assert done == {('c', 0)}
        assert len(records) == 1
        assert path.read_text(encoding='utf-8') == intact

    def test_completed_corrupt_middle(self, tmp_path: Path) -> None:
        """A bad line before the end is corruption, not an interrupted write."""
        path = _write(tmp_path / 'r.jsonl', 'nope\n' + encode_record({'config_id': 'c', 'record_index': 0}))
        with pytest.raises(DataLoadError):
            read_completed(path)

    def test_summary_csv(self, tmp_path: Path) -> None:
        """Missing values are written as empty cells."""
        frame = pd.DataFrame({'config_id': ['c'], 'asr': [float('nan')]})
        path = save_summary_csv(frame, tmp_path / 'out' / 'summary.csv')
        assert path.read_text(encoding='utf-8') == 'config_id,asr\nc,\n'
