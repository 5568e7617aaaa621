"""
Per-configuration summaries of benchmark results.

A summary is a pure function of the result records: re-running it on the
same ``results.jsonl`` always produces the same rows.
"""

# Standard library
import math
from dataclasses import asdict, dataclass
from typing import Any, Iterable, Mapping, Optional

# Third-party packages
import numpy as np
import pandas as pd

# Local imports
from attack import STATUS_ATTACKED, STATUS_ERROR, AttackResult
from evaluation.metrics import asr, avg_queries
from utils import NoSuccesses, get_logger

logger = get_logger(__name__)

SUMMARY_COLUMNS = [
    'method',
    'n',
    'tau',
    'k',
    'original_accuracy',
    'attack_accuracy',
    'asr',
    'avg_queries',
    'avg_queries_success',
    'avg_similarity',
    'avg_perturbation',
    'num_records',
    'num_attacked',
    'num_successes',
    'num_errors',
    'embedder',
    'config_id',
]


@dataclass(frozen=True)
class RunSummary:
    """Aggregated metrics for one attack configuration."""

    config_id: str
    method: str
    n: str
    tau: Optional[float]
    k: int
    original_accuracy: float
    attack_accuracy: float
    asr: float
    avg_queries: float
    avg_queries_success: float
    avg_similarity: float
    avg_perturbation: float
    num_records: int
    num_attacked: int
    num_successes: int
    num_errors: int
    embedder: str

    def to_row(self) -> dict[str, Any]:
        row = asdict(self)
        return {column: row[column] for column in SUMMARY_COLUMNS}


def _mean_or_nan(values: Iterable[Optional[float]]) -> float:
    present = [float(v) for v in values if v is not None]
    return float(np.mean(present)) if present else math.nan


def _summarize_group(config_id: str, records: list[Mapping[str, Any]]) -> RunSummary:
    first = records[0]
    errors = [r for r in records if r.get('status') == STATUS_ERROR]
    counted = [r for r in records if r.get('status') != STATUS_ERROR]
    total = len(counted)
    attacked = [r for r in counted if r.get('status', STATUS_ATTACKED) == STATUS_ATTACKED]
    successes = [r for r in attacked if r['success']]

    original_acc = len(attacked) / total * 100.0 if total else math.nan
    attack_acc = (len(attacked) - len(successes)) / total * 100.0 if total else math.nan
    rate = asr(original_acc, attack_acc) if original_acc > 0 else math.nan
    attacked_results = [AttackResult.from_record(r) for r in attacked]
    queries_all = math.nan
    if attacked_results:
        queries_all = avg_queries(attacked_results, successes_only=False)
    try:
        queries = avg_queries(attacked_results)
    except NoSuccesses:
        queries = math.nan

    embedders = sorted({str(r['embedder']) for r in successes if r.get('embedder')})
    n_setting = first.get('n_setting')
    return RunSummary(
        config_id=config_id,
        method=str(first['method']),
        n='' if n_setting is None else str(n_setting),
        tau=first.get('tau'),
        k=int(first.get('k', -1)),
        original_accuracy=original_acc,
        attack_accuracy=attack_acc,
        asr=rate,
        avg_queries=queries_all,
        avg_queries_success=queries,
        avg_similarity=_mean_or_nan(r.get('similarity') for r in successes),
        avg_perturbation=_mean_or_nan(r.get('perturbation') for r in successes),
        num_records=total,
        num_attacked=len(attacked),
        num_successes=len(successes),
        num_errors=len(errors),
        embedder='+'.join(embedders),
    )


def summarize(records: Iterable[Mapping[str, Any]]) -> list[RunSummary]:
    """
    Group result records by ``config_id`` and aggregate each group.

    Groups keep the order in which their first record appears.
    ``avg_queries`` covers every attacked record, successful or not, and is NaN
    when nothing was attacked. The success averages of queries, similarity and
    perturbation are NaN when a configuration has no success.
    """
    groups: dict[str, list[Mapping[str, Any]]] = {}
    for record in records:
        groups.setdefault(str(record['config_id']), []).append(record)
    summaries = [
        _summarize_group(config_id, sorted(group, key=lambda r: int(r.get('record_index', 0))))
        for config_id, group in groups.items()
    ]
    logger.info(f"Summarized {len(summaries)} configuration(s)")
    return summaries


def summaries_to_frame(summaries: Iterable[RunSummary]) -> pd.DataFrame:
    """Full-precision summary table with :data:`SUMMARY_COLUMNS`."""
    return pd.DataFrame([s.to_row() for s in summaries], columns=SUMMARY_COLUMNS)


def render_summary_table(summaries: Iterable[RunSummary], decimals: int = 0) -> str:
    """Console rendering of the headline columns, rounded for display."""
    frame = summaries_to_frame(summaries)
    if frame.empty:
        return ''
    shown = frame[
        [
            'method', 'n', 'original_accuracy', 'attack_accuracy', 'asr',
            'avg_queries', 'avg_queries_success', 'avg_similarity', 'avg_perturbation',
        ]
    ].copy()
    numeric = shown.select_dtypes(include='number').columns
    shown[numeric] = shown[numeric].round(decimals)
    return shown.to_string(index=False, na_rep='-')
