#!/usr/bin/env python
"""
Main Program - QueryLean benchmark CLI.

Runs a matrix of query-efficient black-box attacks over a dataset sample and
writes ``results.jsonl`` and ``summary.csv``; with ``--calibrate`` it builds a
length-bin table from validation query counts instead.
"""

# Standard library
import argparse
import sys
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

# Add src directory to Python path for proper imports
src_dir = Path(__file__).parent
if str(src_dir) not in sys.path:
    sys.path.insert(0, str(src_dir))

# Local imports
from attack import AttackContext  # noqa: E402
from benchmark import (  # noqa: E402
    RunMatrix,
    build_classifier,
    build_embedder,
    build_mask_fill,
    expand_matrix,
    run_matrix,
)
from config import (  # noqa: E402
    BUILTIN_BIN_DATASETS,
    DEFAULT_K,
    DEFAULT_NUM_BINS,
    DEFAULT_SAMPLE_SIZE,
    DEFAULT_TAU,
    DEFAULT_TOP_M,
    METHOD_ALIASES,
    N_MODES,
    REPLACE_SOURCES,
    __version__,
    ensure_output_directory,
    get_env_from_schema,
    get_output_paths,
    initialize_and_validate_config,
)
from evaluation import calibrate_bins, render_summary_table  # noqa: E402
from i18n import initialize_i18n, t  # noqa: E402
from loaders import (  # noqa: E402
    load_bin_table,
    load_dataset,
    load_lexicon,
    load_run_config,
    load_validation_results,
    write_bin_table,
)
from utils import ConfigurationError, QueryLeanError, get_logger, setup_logging  # noqa: E402

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_ORACLE_FAILURE = 1
EXIT_INPUT_ERROR = 2

# Flag values taken from the run configuration file when not given on the command line
_DEFAULTS: dict[str, Any] = {
    'method': None,
    'n': None,
    'tau': str(DEFAULT_TAU),
    'k': str(DEFAULT_K),
    'replace': 'wordnet',
    'top_m': str(DEFAULT_TOP_M),
    'dataset': None,
    'bins': None,
    'lexicon': None,
    'classifier': None,
    'embedder': 'fallback',
    'sample': DEFAULT_SAMPLE_SIZE,
    'seed': None,
    'out': None,
    'dataset_id': None,
    'n_mode': None,
    'strict_sentence': False,
    'rebase': False,
    'max_candidates': None,
    'mask_fill': 'lexicon',
    'workers': None,
    'calibrate': None,
    'num_bins': DEFAULT_NUM_BINS,
    'batch_size': 32,
}


def build_parser() -> argparse.ArgumentParser:
    """Command-line parser; list-valued flags take comma-separated values."""
    parser = argparse.ArgumentParser(
        prog='querylean',
        description=t('cli.description'),
    )
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    parser.add_argument('--config', metavar='PATH', help=t('cli.help.config'))

    matrix = parser.add_argument_group(t('cli.group.matrix'))
    matrix.add_argument('--method', help=t('cli.help.method', options='|'.join(METHOD_ALIASES)))
    matrix.add_argument('--n', help=t('cli.help.n'))
    matrix.add_argument('--tau', help=t('cli.help.tau', default=DEFAULT_TAU))
    matrix.add_argument('--k', help=t('cli.help.k', default=DEFAULT_K))
    matrix.add_argument('--replace', help=t('cli.help.replace', options='|'.join(REPLACE_SOURCES)))
    matrix.add_argument('--top-m', dest='top_m', help=t('cli.help.top_m', default=DEFAULT_TOP_M))
    matrix.add_argument('--n-mode', dest='n_mode', choices=N_MODES, help=t('cli.help.n_mode'))
    matrix.add_argument('--dataset-id', dest='dataset_id', choices=BUILTIN_BIN_DATASETS, help=t('cli.help.dataset_id'))
    matrix.add_argument('--strict-sentence', dest='strict_sentence', action='store_true', default=None,
                        help=t('cli.help.strict_sentence'))
    matrix.add_argument('--rebase', action='store_true', default=None, help=t('cli.help.rebase'))

    inputs = parser.add_argument_group(t('cli.group.inputs'))
    inputs.add_argument('--dataset', metavar='PATH', help=t('cli.help.dataset'))
    inputs.add_argument('--bins', metavar='PATH', help=t('cli.help.bins'))
    inputs.add_argument('--lexicon', metavar='PATH', help=t('cli.help.lexicon'))
    inputs.add_argument('--max-candidates', dest='max_candidates', type=int, help=t('cli.help.max_candidates'))
    inputs.add_argument('--sample', type=int, help=t('cli.help.sample', default=DEFAULT_SAMPLE_SIZE))
    inputs.add_argument('--seed', type=int, help=t('cli.help.seed'))

    oracles = parser.add_argument_group(t('cli.group.oracles'))
    oracles.add_argument('--classifier', metavar='builtin:PATH|http:URL', help=t('cli.help.classifier'))
    oracles.add_argument('--batch-size', dest='batch_size', type=int, help=t('cli.help.batch_size'))
    oracles.add_argument('--embedder', metavar='fallback|http:URL', help=t('cli.help.embedder'))
    oracles.add_argument('--mask-fill', dest='mask_fill', metavar='lexicon|http:URL', help=t('cli.help.mask_fill'))

    run = parser.add_argument_group(t('cli.group.run'))
    run.add_argument('--out', metavar='DIR', help=t('cli.help.out'))
    run.add_argument('--workers', type=int, help=t('cli.help.workers'))
    run.add_argument('--no-progress', dest='progress', action='store_false', help=t('cli.help.no_progress'))
    run.add_argument('--calibrate', metavar='PATH', help=t('cli.help.calibrate'))
    run.add_argument('--num-bins', dest='num_bins', type=int, help=t('cli.help.num_bins', default=DEFAULT_NUM_BINS))
    return parser


def resolve_options(args: argparse.Namespace) -> dict[str, Any]:
    """
    Merge defaults, the ``--config`` file and command-line flags, in that order.

    Raises:
        ConfigurationError: On unknown keys in the configuration file.
    """
    options = dict(_DEFAULTS)
    if args.config:
        from_file = load_run_config(args.config)
        unknown = sorted(set(from_file) - set(_DEFAULTS))
        if unknown:
            raise ConfigurationError(t('error.config_unknown_keys', keys=', '.join(unknown)))
        options.update(from_file)
    for key in _DEFAULTS:
        value = getattr(args, key, None)
        if value is not None:
            options[key] = value
    options['progress'] = getattr(args, 'progress', True)
    return options


def split_values(value: Any, cast: Callable[[str], Any], name: str) -> list[Any]:
    """
    Parse a list-valued option: comma-separated text, a YAML list or a scalar.

    Examples:
        >>> split_values('3, 5,15', int, 'k')
        [3, 5, 15]
    """
    if value is None:
        return [None]
    items = value if isinstance(value, (list, tuple)) else str(value).split(',')
    parsed = []
    for item in items:
        text = str(item).strip()
        if not text:
            continue
        try:
            parsed.append(cast(text))
        except ValueError as e:
            raise ConfigurationError(t('error.invalid_flag_value', name=name, value=text)) from e
    if not parsed:
        raise ConfigurationError(t('error.invalid_flag_value', name=name, value=value))
    return parsed


def _require(options: dict[str, Any], *keys: str) -> None:
    missing = [f"--{key.replace('_', '-')}" for key in keys if not options.get(key)]
    if missing:
        raise ConfigurationError(t('error.missing_flags', flags=', '.join(missing)))


def run_calibration(options: dict[str, Any]) -> int:
    """``--calibrate`` mode: write ``<out>/bins.tsv`` from validation query counts."""
    frame = load_validation_results(options['calibrate'])
    table = calibrate_bins(
        frame,
        num_bins=int(options['num_bins']),
        dataset_id=options['dataset_id'] or 'calibrated',
    )
    path = write_bin_table(table, get_output_paths(ensure_output_directory(options['out']))['bins'])
    print(t('cli.bins_written', path=str(path), count=len(table)))
    return EXIT_OK


def run_benchmark(options: dict[str, Any]) -> int:
    """Benchmark mode: build the matrix and oracles, then run every configuration."""
    _require(options, 'method', 'dataset', 'classifier')
    configs = expand_matrix(
        split_values(options['method'], str, 'method'),
        ns=split_values(options['n'], int, 'n'),
        taus=split_values(options['tau'], float, 'tau'),
        ks=split_values(options['k'], int, 'k'),
        replace_sources=split_values(options['replace'], str, 'replace'),
        top_ms=split_values(options['top_m'], int, 'top-m'),
        n_mode=options['n_mode'],
        dataset_id=options['dataset_id'],
        strict_sentence=bool(options['strict_sentence']),
        rebase=bool(options['rebase']),
    )
    matrix = RunMatrix(configs, sample_size=int(options['sample']), seed=options['seed'])

    dataset = load_dataset(options['dataset'])
    max_candidates = options['max_candidates']
    if max_candidates is None:
        max_candidates = get_env_from_schema('MAX_CANDIDATES')
    lexicon = load_lexicon(options['lexicon'], max_candidates=max_candidates) if options['lexicon'] else None
    needs_lexicon = any(c.replace_source == 'wordnet' for c in configs) or (
        options['mask_fill'] == 'lexicon' and any(c.replace_source == 'mlm' for c in configs)
    )
    if needs_lexicon and lexicon is None:
        raise ConfigurationError(t('error.lexicon_required'))
    bins = load_bin_table(options['bins']) if options['bins'] else None

    timeout = get_env_from_schema('HTTP_TIMEOUT')
    try:
        classifier = build_classifier(options['classifier'], batch_size=int(options['batch_size']), timeout=timeout)
        embedder = build_embedder(options['embedder'], timeout=timeout)
        provider = None
        if any(c.replace_source == 'mlm' for c in configs):
            provider = build_mask_fill(options['mask_fill'], lexicon, timeout=timeout)
    except QueryLeanError as e:
        logger.critical(t('log.oracle_construction_failed', error=str(e)), exc_info=True)
        print(t('cli.oracle_failed', error=str(e)), file=sys.stderr)
        return EXIT_ORACLE_FAILURE

    context = AttackContext(classifier=classifier, lexicon=lexicon, provider=provider, bins=bins)
    report = run_matrix(
        matrix,
        dataset,
        context,
        ensure_output_directory(options['out']),
        embedder=embedder,
        workers=options['workers'],
        progress=bool(options['progress']),
    )
    table = render_summary_table(report.summaries)
    if table:
        print(table)
    print(t('cli.run_finished', results=str(report.results_path), summary=str(report.summary_path),
            attacked=report.attacked, resumed=report.resumed))
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Main entry point of the ``querylean`` command.

    Returns:
        0 on completion (individual attack failures included), 1 when an
        oracle cannot be constructed, 2 on invalid flags or input files.
    """
    initialize_and_validate_config()
    initialize_i18n()
    setup_logging()
    logger.info(t('log.application_starting'))
    logger.info(t('log.version', version=__version__))

    args = build_parser().parse_args(argv)
    try:
        options = resolve_options(args)
        if options['calibrate']:
            return run_calibration(options)
        return run_benchmark(options)
    except QueryLeanError as e:
        logger.error(t('log.run_aborted', error=str(e)), exc_info=True)
        print(t('cli.error', error=str(e)), file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
