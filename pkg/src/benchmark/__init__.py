"""
Benchmark module.
Run matrices, oracle construction, the benchmark harness and synthetic corpora.
"""

from .factories import build_classifier, build_embedder, build_mask_fill
from .harness import RunReport, attack_record, resolve_workers, run_matrix
from .matrix import RunMatrix, expand_matrix
from .synthetic import PlantedCorpus, ablation_corpus, planted_corpus

__all__ = [
    'build_classifier',
    'build_embedder',
    'build_mask_fill',
    'RunReport',
    'attack_record',
    'resolve_workers',
    'run_matrix',
    'RunMatrix',
    'expand_matrix',
    'PlantedCorpus',
    'ablation_corpus',
    'planted_corpus',
]
