"""Attack configuration."""

# Standard library
from dataclasses import asdict, dataclass
from typing import Any, Optional

# Local imports
from config import (
    ATTACK_METHODS,
    AVAILABLE_METHODS,
    DEFAULT_K,
    DEFAULT_TAU,
    DEFAULT_TOP_M,
    METHOD_ALIASES,
    N_MODES,
    REPLACE_SOURCES,
)
from i18n import t
from utils import ConfigurationError, get_logger, validate_fraction

logger = get_logger(__name__)


def canonical_method(name: str) -> str:
    """Map a CLI spelling (``sentence-hybrid``) to the registry id (``sentence_hybrid``)."""
    key = name.strip().lower()
    key = METHOD_ALIASES.get(key, key)
    if key not in ATTACK_METHODS:
        raise ConfigurationError(
            t('error.invalid_choice', name='method', value=name, options=', '.join(METHOD_ALIASES))
        )
    return key


@dataclass(frozen=True)
class AttackConfig:
    """
    One attack setting of the run matrix.

    ``n_mode`` defaults to the method's registry policy: ``manual`` needs
    ``n >= 2``, ``auto`` picks N from the length bins and ``sentences``
    (sentence-hybrid only) uses the sentence count. Binary always runs with
    N = 2; greedy ignores N. Dimensions a method ignores are normalized to
    None so equal settings compare equal.

    Examples:
        >>> AttackConfig('nnary', n=3).config_id
        'method=nnary;n=3;n_mode=manual;k=-1;replace=wordnet;top_m=5'
    """

    method: str
    n: Optional[int] = None
    n_mode: Optional[str] = None
    tau: Optional[float] = DEFAULT_TAU
    k: int = DEFAULT_K
    replace_source: str = 'wordnet'
    top_m: int = DEFAULT_TOP_M
    dataset_id: Optional[str] = None
    strict_sentence: bool = False
    rebase: bool = False

    def __post_init__(self) -> None:
        method = canonical_method(self.method)
        spec = ATTACK_METHODS[method]
        object.__setattr__(self, 'method', method)

        n_mode = self._resolve_n_mode(method, spec)
        object.__setattr__(self, 'n_mode', n_mode)

        n = self.n
        if n_mode == 'fixed':
            n = int(spec['fixed_n'])
        elif n_mode == 'manual':
            if n is None or isinstance(n, bool) or int(n) < 2:
                raise ConfigurationError(t('error.manual_n_required', method=method, n=n))
            n = int(n)
        else:
            n = None
        object.__setattr__(self, 'n', n)

        if spec['uses_tau']:
            tau = validate_fraction(DEFAULT_TAU if self.tau is None else self.tau, 'tau')
        else:
            tau = None
        object.__setattr__(self, 'tau', tau)

        if isinstance(self.k, bool) or int(self.k) < -1 or int(self.k) == 0:
            raise ConfigurationError(t('error.invalid_budget', k=self.k))
        object.__setattr__(self, 'k', int(self.k))

        if self.replace_source not in REPLACE_SOURCES:
            raise ConfigurationError(
                t('error.invalid_choice', name='replace', value=self.replace_source,
                  options=', '.join(REPLACE_SOURCES))
            )
        if self.replace_source == 'mlm':
            if int(self.top_m) < 1:
                raise ConfigurationError(
                    t('error.integer_below_minimum', name='top_m', value=self.top_m, minimum=1)
                )
        else:
            object.__setattr__(self, 'top_m', DEFAULT_TOP_M)

        if method != 'sentence_hybrid':
            object.__setattr__(self, 'strict_sentence', False)
        if n_mode != 'auto':
            object.__setattr__(self, 'dataset_id', None)

    def _resolve_n_mode(self, method: str, spec: dict[str, Any]) -> str:
        registry_mode = spec['n_mode']
        if self.n_mode is None or registry_mode in ('none', 'fixed'):
            return registry_mode
        mode = self.n_mode.strip().lower()
        if mode not in N_MODES:
            raise ConfigurationError(
                t('error.invalid_choice', name='n_mode', value=self.n_mode, options=', '.join(N_MODES))
            )
        if mode == 'sentences' and method != 'sentence_hybrid':
            raise ConfigurationError(t('error.sentences_mode_only', method=method))
        if registry_mode == 'auto' and mode != 'auto':
            raise ConfigurationError(t('error.auto_mode_only', method=method))
        return mode

    @property
    def label(self) -> str:
        return str(ATTACK_METHODS[self.method]['label'])

    @property
    def n_label(self) -> str:
        """N as shown in summaries: the number, ``auto``, ``S`` or empty."""
        if self.n is not None:
            return str(self.n)
        if self.n_mode == 'auto':
            return 'auto'
        if self.n_mode == 'sentences':
            return 'S'
        return ''

    @property
    def config_id(self) -> str:
        """Stable identifier of the setting, used to resume interrupted runs."""
        parts = [f"method={self.method}"]
        if self.n is not None:
            parts.append(f"n={self.n}")
        if self.n_mode not in ('none', 'fixed'):
            parts.append(f"n_mode={self.n_mode}")
        if self.tau is not None:
            parts.append(f"tau={self.tau!r}")
        parts.append(f"k={self.k}")
        parts.append(f"replace={self.replace_source}")
        parts.append(f"top_m={self.top_m}")
        if self.dataset_id:
            parts.append(f"dataset={self.dataset_id}")
        if self.strict_sentence:
            parts.append("strict_sentence")
        if self.rebase:
            parts.append("rebase")
        return ';'.join(parts)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def budget_allows(self, used: int) -> bool:
        """True while fewer than ``k`` scored trials were spent (always for k = -1)."""
        return self.k == -1 or used < self.k
