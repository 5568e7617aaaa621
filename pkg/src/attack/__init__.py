"""
Attack module.
Combines selection and replacement into the seven attack methods.
"""

from .config import AttackConfig, canonical_method
from .engine import (
    AttackContext,
    attack_dynamic,
    attack_dynamic_hybrid,
    attack_greedy,
    attack_hybrid,
    attack_nnary,
    attack_sentence_hybrid,
    run_attack,
)
from .result import STATUS_ATTACKED, STATUS_ERROR, STATUS_SKIPPED, AttackResult

__all__ = [
    'AttackConfig',
    'canonical_method',
    'AttackContext',
    'attack_dynamic',
    'attack_dynamic_hybrid',
    'attack_greedy',
    'attack_hybrid',
    'attack_nnary',
    'attack_sentence_hybrid',
    'run_attack',
    'STATUS_ATTACKED',
    'STATUS_ERROR',
    'STATUS_SKIPPED',
    'AttackResult',
]
