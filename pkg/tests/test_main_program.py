"""
Tests for the querylean command line.
"""

import json
from pathlib import Path

import pytest
import requests

from benchmark import planted_corpus
from loaders import load_bin_table, read_results
from main_program import EXIT_INPUT_ERROR, EXIT_OK, EXIT_ORACLE_FAILURE, main, split_values
from utils import ConfigurationError


@pytest.fixture(autouse=True)
def quiet_logging(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv('LOG_FILE', str(tmp_path / 'querylean.log'))
    monkeypatch.setenv('LOG_CONSOLE', 'false')


@pytest.fixture
def corpus_files(tmp_path: Path) -> dict[str, Path]:
    return planted_corpus(num_docs=6, length=30, num_sentences=3, seed=2).save(tmp_path / 'corpus')


def _base_args(files: dict[str, Path], out: Path) -> list[str]:
    return [
        '--dataset', str(files['dataset']),
        '--lexicon', str(files['lexicon']),
        '--classifier', f"builtin:{files['weights']}",
        '--out', str(out),
        '--workers', '1',
        '--seed', '1',
        '--no-progress',
    ]


class TestBenchmarkMode:
    """Tests for benchmark runs."""

    def test_matrix_run(self, tmp_path: Path, corpus_files: dict[str, Path]) -> None:
        """Two settings over three records write six lines and two summary rows."""
        out = tmp_path / 'run'
        code = main(['--method', 'greedy,nnary', '--n', '3', '--sample', '3'] + _base_args(corpus_files, out))
        assert code == EXIT_OK
        results = read_results(out / 'results.jsonl')
        assert len(results) == 6
        assert {line['method'] for line in results} == {'greedy', 'nnary'}
        assert len((out / 'summary.csv').read_text(encoding='utf-8').splitlines()) == 3

    def test_prints_summary(self, tmp_path: Path, corpus_files: dict[str, Path],
                            capsys: pytest.CaptureFixture) -> None:
        """The rounded summary table goes to standard output."""
        main(['--method', 'greedy', '--sample', '2'] + _base_args(corpus_files, tmp_path / 'run'))
        assert 'greedy' in capsys.readouterr().out

    @pytest.mark.parametrize("argv", [
        ['--method', 'greedy'],
        ['--method', 'greedy', '--dataset', 'missing.jsonl', '--classifier', 'builtin:w.tsv'],
        ['--method', 'nnary', '--dataset', 'x', '--classifier', 'builtin:w.tsv'],
    ])
    def test_input_errors(self, argv: list[str]) -> None:
        """Missing flags, missing files and invalid settings exit with 2."""
        assert main(argv) == EXIT_INPUT_ERROR

    def test_wordnet_without_lexicon(self, tmp_path: Path, corpus_files: dict[str, Path]) -> None:
        """Lexicon replacement needs --lexicon."""
        args = _base_args(corpus_files, tmp_path / 'run')
        position = args.index('--lexicon')
        del args[position:position + 2]
        assert main(['--method', 'greedy'] + args) == EXIT_INPUT_ERROR

    def test_unreachable_classifier(self, tmp_path: Path, corpus_files: dict[str, Path],
                                    monkeypatch: pytest.MonkeyPatch) -> None:
        """A remote classifier that cannot be reached exits with 1 before attacking."""
        def fake_post(endpoint: str, json: dict, timeout: float) -> None:
            raise requests.ConnectionError('refused')

        monkeypatch.setattr(requests, 'post', fake_post)
        out = tmp_path / 'run'
        args = _base_args(corpus_files, out)
        args[args.index('--classifier') + 1] = 'http:localhost:9'
        assert main(['--method', 'greedy'] + args) == EXIT_ORACLE_FAILURE
        assert not (out / 'results.jsonl').exists()

    def test_config_file(self, tmp_path: Path, corpus_files: dict[str, Path]) -> None:
        """Settings come from --config; command-line flags override them."""
        out = tmp_path / 'run'
        config = tmp_path / 'run.yaml'
        config.write_text(
            '\n'.join([
                'method: greedy',
                f"dataset: {json.dumps(str(corpus_files['dataset']))}",
                f"lexicon: {json.dumps(str(corpus_files['lexicon']))}",
                f"classifier: {json.dumps('builtin:' + str(corpus_files['weights']))}",
                f"out: {json.dumps(str(out))}",
                'sample: 5',
                'seed: 3',
                'workers: 1',
                'k: [3, -1]',
            ]) + '\n',
            encoding='utf-8',
        )
        assert main(['--config', str(config), '--sample', '2', '--no-progress']) == EXIT_OK
        results = read_results(out / 'results.jsonl')
        assert len(results) == 4
        assert sorted({line['k'] for line in results}) == [-1, 3]

    def test_config_unknown_key(self, tmp_path: Path) -> None:
        """Unknown configuration keys are input errors."""
        config = tmp_path / 'run.yaml'
        config.write_text('methodz: greedy\n', encoding='utf-8')
        assert main(['--config', str(config)]) == EXIT_INPUT_ERROR


class TestCalibrateMode:
    """Tests for --calibrate."""

    def test_writes_bins(self, tmp_path: Path) -> None:
        """Validation query counts become a bin table in the output directory."""
        validation = tmp_path / 'validation.jsonl'
        rows = []
        for length in range(1, 201):
            rows.append({'length': length, 'n': 2, 'queries': 10.0 if length <= 100 else 50.0})
            rows.append({'length': length, 'n': 4, 'queries': 30.0})
        validation.write_text('\n'.join(json.dumps(row) for row in rows) + '\n', encoding='utf-8')

        out = tmp_path / 'cal'
        code = main(['--calibrate', str(validation), '--num-bins', '2', '--out', str(out)])
        assert code == EXIT_OK
        table = load_bin_table(out / 'bins.tsv')
        assert [b.n for b in table.bins] == [2, 4]

    def test_missing_validation_file(self, tmp_path: Path) -> None:
        """An absent validation file is an input error."""
        assert main(['--calibrate', str(tmp_path / 'absent.jsonl'), '--out', str(tmp_path)]) == EXIT_INPUT_ERROR


class TestSplitValues:
    """Tests for split_values."""

    @pytest.mark.parametrize("value,cast,expected", [
        ('3, 5,15', int, [3, 5, 15]),
        ('greedy', str, ['greedy']),
        ([0.1, 0.2], float, [0.1, 0.2]),
        (7, int, [7]),
        (None, int, [None]),
    ])
    def test_parsing(self, value, cast, expected) -> None:
        """Comma lists, YAML lists and scalars all parse."""
        assert split_values(value, cast, 'x') == expected

    @pytest.mark.parametrize("value", ['a,b', ',', ''])
    def test_invalid(self, value: str) -> None:
        """Unparsable or empty values are configuration errors."""
        with pytest.raises(ConfigurationError):
            split_values(value, int, 'x')
