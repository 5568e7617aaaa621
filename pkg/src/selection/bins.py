"""
Length bins mapping document length to the split factor N.

A bin matches a length ``L`` when ``lower < L <= upper``; an open-ended last
bin has ``upper = inf`` (written ``max`` in bin files). Lengths outside every
bin use the fallback N.
"""

# Standard library
import math
from dataclasses import dataclass
from typing import Iterable

# Local imports
from config import FALLBACK_N
from i18n import t
from utils import ValidationError, get_logger

logger = get_logger(__name__)

OPEN_UPPER_TOKEN = 'max'


def parse_bound(value: str | float | int) -> float:
    """Parse a bin bound; ``'max'`` means no upper limit."""
    if isinstance(value, str):
        text = value.strip().lower()
        if text == OPEN_UPPER_TOKEN:
            return math.inf
        return float(text)
    return float(value)


def format_bound(value: float) -> str:
    """Format a bin bound for a bin file (integers without a decimal point)."""
    if math.isinf(value):
        return OPEN_UPPER_TOKEN
    if float(value).is_integer():
        return str(int(value))
    return repr(float(value))


@dataclass(frozen=True)
class Bin:
    """Length interval ``(lower, upper]`` with its split factor."""

    lower: float
    upper: float
    n: int

    def __post_init__(self) -> None:
        if self.lower < 0 or not self.lower < self.upper:
            raise ValidationError(t('error.invalid_bin', lower=self.lower, upper=self.upper))
        if self.n < 2:
            raise ValidationError(t('error.integer_below_minimum', name='n', value=self.n, minimum=2))

    def contains(self, length: int) -> bool:
        return self.lower < length <= self.upper


@dataclass(frozen=True)
class BinTable:
    """
    Ordered, non-overlapping length bins for one dataset.

    Examples:
        >>> table = BinTable('demo', (Bin(0, 100, 3), Bin(100, math.inf, 6)))
        >>> table.lookup(100), table.lookup(101)
        (3, 6)
    """

    dataset_id: str
    bins: tuple[Bin, ...] = ()
    fallback: int = FALLBACK_N

    def __post_init__(self) -> None:
        object.__setattr__(self, 'bins', tuple(self.bins))
        for previous, following in zip(self.bins, self.bins[1:]):
            if following.lower < previous.upper:
                raise ValidationError(
                    t('error.bins_overlap', first=f"({format_bound(previous.lower)}, {format_bound(previous.upper)}]",
                      second=f"({format_bound(following.lower)}, {format_bound(following.upper)}]")
                )

    @classmethod
    def from_rows(cls, dataset_id: str, rows: Iterable[tuple[float, float, int]]) -> 'BinTable':
        return cls(dataset_id, tuple(Bin(float(lo), float(hi), int(n)) for lo, hi, n in rows))

    def lookup(self, length: int) -> int:
        for bin_ in self.bins:
            if bin_.contains(length):
                return bin_.n
        return self.fallback

    def __len__(self) -> int:
        return len(self.bins)


def dyn_n(length: int, bins: BinTable) -> int:
    """
    Choose the split factor for a document of ``length`` tokens.

    The first bin with ``lower < length <= upper`` wins; otherwise the table's
    fallback (2).

    Raises:
        ValidationError: If ``length`` < 1.
    """
    if length < 1:
        raise ValidationError(t('error.integer_below_minimum', name='length', value=length, minimum=1))
    n = bins.lookup(length)
    logger.debug(f"Dynamic N for length {length} on '{bins.dataset_id}': {n}")
    return n
