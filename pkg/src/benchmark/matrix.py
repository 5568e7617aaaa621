"""Run matrix: the attack settings of one benchmark run."""

# Standard library
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional, Sequence

# Local imports
from attack import AttackConfig, canonical_method
from config import ATTACK_METHODS, DEFAULT_K, DEFAULT_SAMPLE_SIZE, DEFAULT_TAU, DEFAULT_TOP_M
from utils import get_logger, validate_positive_integer

logger = get_logger(__name__)


@dataclass(frozen=True)
class RunMatrix:
    """
    Attack settings plus the sampling shared by all of them.

    Every setting is run on the same seed-determined sample of records.
    """

    configs: tuple[AttackConfig, ...]
    sample_size: int = DEFAULT_SAMPLE_SIZE
    seed: Optional[int] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, 'configs', tuple(self.configs))
        validate_positive_integer(self.sample_size, 'sample')

    def __len__(self) -> int:
        return len(self.configs)


def _n_mode_for(method: str, n_mode: Optional[str]) -> Optional[str]:
    """Apply an ``--n-mode`` override only where the method accepts one."""
    if n_mode is None or ATTACK_METHODS[method]['n_mode'] != 'manual':
        return None
    if n_mode == 'sentences' and method != 'sentence_hybrid':
        return None
    return n_mode


def expand_matrix(
    methods: Iterable[str],
    ns: Sequence[Optional[int]] = (None,),
    taus: Sequence[Optional[float]] = (DEFAULT_TAU,),
    ks: Sequence[int] = (DEFAULT_K,),
    replace_sources: Sequence[str] = ('wordnet',),
    top_ms: Sequence[int] = (DEFAULT_TOP_M,),
    n_mode: Optional[str] = None,
    dataset_id: Optional[str] = None,
    strict_sentence: bool = False,
    rebase: bool = False,
) -> tuple[AttackConfig, ...]:
    """
    Cartesian product of the given values as attack settings.

    Values a method ignores (N for greedy, tau outside the hybrids, top-m for
    lexicon replacement) collapse, so duplicate settings appear once, in first
    occurrence order.

    Raises:
        ConfigurationError: If a combination is invalid, e.g. N-nary without N.

    Examples:
        >>> [c.config_id for c in expand_matrix(['greedy'], ns=[2, 3])]
        ['method=greedy;k=-1;replace=wordnet;top_m=5']
    """
    configs: dict[str, AttackConfig] = {}
    for method_name, n, tau, k, source, top_m in product(
        methods, ns, taus, ks, replace_sources, top_ms
    ):
        method = canonical_method(method_name)
        cfg = AttackConfig(
            method=method,
            n=n if ATTACK_METHODS[method]['uses_n'] else None,
            n_mode=_n_mode_for(method, n_mode),
            tau=tau,
            k=k,
            replace_source=source,
            top_m=top_m,
            dataset_id=dataset_id,
            strict_sentence=strict_sentence,
            rebase=rebase,
        )
        configs.setdefault(cfg.config_id, cfg)
    logger.info(f"Run matrix expanded to {len(configs)} configuration(s)")
    return tuple(configs.values())
