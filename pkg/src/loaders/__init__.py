"""
Loaders module.
Datasets, attack resources (lexicon, weights, bins, run config) and result files.
"""

from .dataset_loader import DatasetRecord, load_dataset, sample_indices, sample_records, validate_labels
from .resource_loader import (
    BIAS_TOKEN,
    builtin_bin_table,
    load_bin_table,
    load_classifier_weights,
    load_lexicon,
    load_run_config,
    load_validation_results,
    write_bin_table,
)
from .saving_utils import ResultsWriter, encode_record, read_completed, read_results, save_summary_csv

__all__ = [
    'DatasetRecord',
    'load_dataset',
    'sample_indices',
    'sample_records',
    'validate_labels',
    'BIAS_TOKEN',
    'builtin_bin_table',
    'load_bin_table',
    'load_classifier_weights',
    'load_lexicon',
    'load_run_config',
    'load_validation_results',
    'write_bin_table',
    'ResultsWriter',
    'encode_record',
    'read_completed',
    'read_results',
    'save_summary_csv',
]
