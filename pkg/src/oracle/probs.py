"""Per-label probability vectors and the query ledger."""

# Standard library
import threading
from dataclasses import dataclass, field
from typing import Sequence

# Third-party packages
import numpy as np

# Local imports
from config import QUERY_PHASES
from i18n import t
from utils import ValidationError, get_logger, validate_probability_vector

logger = get_logger(__name__)


@dataclass(frozen=True)
class ClassProbs:
    """
    Probabilities returned by one classifier query, one value per label.

    Examples:
        >>> p = ClassProbs.from_values([0.2, 0.8])
        >>> p.argmax, p[1]
        (1, 0.8)
    """

    probs: tuple[float, ...]

    @classmethod
    def from_values(cls, values: Sequence[float], num_labels: int | None = None) -> 'ClassProbs':
        """
        Build a validated vector.

        Raises:
            MalformedResponse: On wrong length or a sum off by more than 1e-6.
        """
        expected = len(values) if num_labels is None else num_labels
        return cls(validate_probability_vector(values, expected))

    @property
    def argmax(self) -> int:
        """Predicted label; the lowest index wins ties."""
        return int(np.argmax(self.probs))

    def __getitem__(self, label: int) -> float:
        return self.probs[label]

    def __len__(self) -> int:
        return len(self.probs)


@dataclass(frozen=True)
class LedgerSnapshot:
    """Immutable copy of a ledger's counters."""

    total: int
    by_phase: dict[str, int] = field(default_factory=dict)


class QueryLedger:
    """
    Thread-safe count of classifier queries, split by attack phase.

    Phases are ``root`` (initial probability), ``selection`` and
    ``replacement``. The total is always the sum of the phase counters.
    """

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._by_phase: dict[str, int] = {phase: 0 for phase in QUERY_PHASES}

    def charge(self, phase: str, count: int = 1) -> None:
        """
        Record ``count`` queries against ``phase``.

        Raises:
            ValidationError: On an unknown phase or a negative count.
        """
        if phase not in self._by_phase:
            raise ValidationError(t('error.unknown_phase', phase=phase, phases=', '.join(QUERY_PHASES)))
        if count < 0:
            raise ValidationError(t('error.integer_below_minimum', name='count', value=count, minimum=0))
        with self._lock:
            self._by_phase[phase] += count
        logger.debug(f"Charged {count} {phase} queries")

    @property
    def total(self) -> int:
        with self._lock:
            return sum(self._by_phase.values())

    @property
    def by_phase(self) -> dict[str, int]:
        with self._lock:
            return dict(self._by_phase)

    def snapshot(self) -> LedgerSnapshot:
        with self._lock:
            counts = dict(self._by_phase)
        return LedgerSnapshot(total=sum(counts.values()), by_phase=counts)

    def __repr__(self) -> str:
        return f"QueryLedger(total={self.total}, by_phase={self.by_phase})"
