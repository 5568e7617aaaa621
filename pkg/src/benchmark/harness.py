"""
Benchmark harness.

Runs every configuration of a :class:`RunMatrix` over the same record sample,
appends one JSON line per (configuration, record) to ``results.jsonl`` and
rebuilds ``summary.csv`` from that file. Interrupted runs resume: pairs
already present in the results file are not attacked again.
"""

# Standard library
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional, Sequence, Union

# Third-party packages
from tqdm import tqdm

# Local imports
from attack import (
    STATUS_ERROR,
    STATUS_SKIPPED,
    AttackConfig,
    AttackContext,
    AttackResult,
    run_attack,
)
from config import get_env_from_schema, get_output_paths
from evaluation import RunSummary, perturbation_rate, scored_similarity, summaries_to_frame, summarize
from i18n import t
from loaders import (
    DatasetRecord,
    ResultsWriter,
    read_completed,
    read_results,
    sample_records,
    save_summary_csv,
    validate_labels,
)
from oracle import Embedder, LedgerSnapshot, LexicalEmbedder
from utils import AlreadyMisclassified, OracleError, get_logger

from .matrix import RunMatrix

logger = get_logger(__name__)


@dataclass(frozen=True)
class RunReport:
    """Where a run wrote its artifacts and what it summarized."""

    results_path: Path
    summary_path: Path
    summaries: list[RunSummary]
    attacked: int
    resumed: int


def resolve_workers(workers: Optional[int] = None) -> int:
    """Worker count: explicit value, else ``WORKERS``, where 0 means available parallelism."""
    if workers is None:
        workers = get_env_from_schema('WORKERS')
    if not workers or workers < 1:
        workers = os.cpu_count() or 1
    return int(workers)


def _unattacked_result(record: DatasetRecord, cfg: AttackConfig, status: str, queries: LedgerSnapshot,
                       prob: float) -> AttackResult:
    return AttackResult(
        success=False,
        original_text=' '.join(record.text.split()),
        final_text=' '.join(record.text.split()),
        y=record.label,
        queries=queries,
        final_prob=prob,
        modified_indices=(),
        method=cfg.method,
        tau=cfg.tau,
        k=cfg.k,
        status=status,
    )


def attack_record(
    index: int,
    record: DatasetRecord,
    cfg: AttackConfig,
    context: AttackContext,
    embedder: Embedder,
) -> dict[str, Any]:
    """
    Attack one record and return its results line.

    Records the classifier already gets wrong are not attacked and cost the
    single root query. Oracle failures produce an ``error`` line.
    """
    similarity: Optional[float] = None
    perturbation: Optional[float] = None
    provenance: Optional[str] = None
    try:
        result = run_attack(record.text, record.label, cfg, context)
    except AlreadyMisclassified as e:
        result = _unattacked_result(
            record, cfg, STATUS_SKIPPED, LedgerSnapshot(total=1, by_phase={'root': 1}),
            math.nan if e.prob is None else float(e.prob),
        )
    except OracleError as e:
        logger.error(t('log.record_failed', index=index, config=cfg.config_id, error=str(e)), exc_info=True)
        result = _unattacked_result(record, cfg, STATUS_ERROR, LedgerSnapshot(total=0, by_phase={}), math.nan)
    else:
        perturbation = perturbation_rate(result.original_text, result.final_text)
        if result.success:
            similarity, provenance = scored_similarity(result.original_text, result.final_text, embedder)

    line = result.to_record()
    line.update({
        'config_id': cfg.config_id,
        'record_index': index,
        'n_setting': cfg.n_label,
        'replace': cfg.replace_source,
        'top_m': cfg.top_m,
        'similarity': similarity,
        'perturbation': perturbation,
        'embedder': provenance,
    })
    return line


def run_matrix(
    matrix: RunMatrix,
    dataset: Sequence[DatasetRecord],
    context: AttackContext,
    out_dir: Union[str, Path],
    embedder: Optional[Embedder] = None,
    workers: Optional[int] = None,
    progress: bool = False,
) -> RunReport:
    """
    Run every configuration over the sampled records and write the reports.

    Records of one configuration are attacked by a pool of ``workers``
    threads; lines are written in record order, so results files are
    identical across runs with the same seed.

    Args:
        matrix: Configurations, sample size and seed.
        dataset: All dataset records (sampled here).
        context: Target classifier and replacement resources.
        out_dir: Directory receiving ``results.jsonl`` and ``summary.csv``.
        embedder: Similarity embedder (lexical fallback when None).
        workers: Pool size; None reads ``WORKERS``.
        progress: Show a progress bar per configuration.

    Returns:
        The :class:`RunReport`.

    Raises:
        ValidationError: If a dataset label exceeds the classifier's label count.
    """
    embedder = embedder or LexicalEmbedder()
    paths = get_output_paths(out_dir)
    validate_labels(dataset, context.classifier.num_labels)
    sample = sample_records(dataset, matrix.sample_size, matrix.seed)
    pool_size = resolve_workers(workers)

    _, done = read_completed(paths['results'])
    attacked = 0
    with ResultsWriter(paths['results']) as writer:
        for cfg in matrix.configs:
            pending = [(i, rec) for i, rec in sample if (cfg.config_id, i) not in done]
            logger.info(t('log.config_started', config=cfg.config_id, pending=len(pending), total=len(sample)))
            if not pending:
                continue
            with ThreadPoolExecutor(max_workers=pool_size) as pool:
                lines = pool.map(lambda pair: attack_record(pair[0], pair[1], cfg, context, embedder), pending)
                for line in tqdm(lines, total=len(pending), desc=cfg.label, disable=not progress):
                    writer.write(line)
                    attacked += 1

    summaries = summarize(read_results(paths['results']))
    save_summary_csv(summaries_to_frame(summaries), paths['summary'])
    return RunReport(
        results_path=paths['results'],
        summary_path=paths['summary'],
        summaries=summaries,
        attacked=attacked,
        resumed=len(done),
    )
