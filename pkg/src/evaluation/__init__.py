"""
Evaluation module.
Attack metrics, length-bin calibration and per-configuration summaries.
"""

from .calibration import calibrate_bins
from .metrics import asr, avg_queries, perturbation_rate, scored_similarity, similarity
from .summary import SUMMARY_COLUMNS, RunSummary, render_summary_table, summaries_to_frame, summarize

__all__ = [
    'calibrate_bins',
    'asr',
    'avg_queries',
    'perturbation_rate',
    'scored_similarity',
    'similarity',
    'SUMMARY_COLUMNS',
    'RunSummary',
    'render_summary_table',
    'summaries_to_frame',
    'summarize',
]
