"""Attack outcome records."""

# Standard library
from dataclasses import dataclass
from typing import Any, Mapping, Optional

# Local imports
from oracle import LedgerSnapshot

# Record status: "skipped" when the classifier already misclassified the input,
# "error" when an oracle failed mid-attack
STATUS_SKIPPED = 'skipped'
STATUS_ATTACKED = 'attacked'
STATUS_ERROR = 'error'


@dataclass(frozen=True)
class AttackResult:
    """
    Outcome of one attack: success flag, texts, queries and edited positions.

    ``n`` is the split factor actually used on this document (None for
    greedy), which differs from the configured value for dynamic methods.
    Sentence-hybrid may search several sentences with different N values:
    ``n_per_sentence`` lists them in search order and ``n`` is only the N of
    the first sentence searched. Other methods leave ``n_per_sentence`` empty.
    """

    success: bool
    original_text: str
    final_text: str
    y: int
    queries: LedgerSnapshot
    final_prob: float
    modified_indices: tuple[int, ...]
    method: str
    n: Optional[int] = None
    tau: Optional[float] = None
    k: int = -1
    status: str = STATUS_ATTACKED
    exhausted: bool = False
    n_per_sentence: tuple[int, ...] = ()

    @property
    def queries_total(self) -> int:
        return self.queries.total

    @property
    def original_correct(self) -> bool:
        return self.status == STATUS_ATTACKED

    def to_record(self) -> dict[str, Any]:
        """Flat JSON-ready mapping with stable field names."""
        return {
            'success': self.success,
            'queries_total': self.queries.total,
            'queries_by_phase': dict(self.queries.by_phase),
            'modified_indices': list(self.modified_indices),
            'final_text': self.final_text,
            'original_text': self.original_text,
            'y': self.y,
            'method': self.method,
            'n': self.n,
            'n_per_sentence': list(self.n_per_sentence),
            'tau': self.tau,
            'k': self.k,
            'status': self.status,
            'original_correct': self.original_correct,
            'final_prob': self.final_prob,
        }

    @classmethod
    def from_record(cls, record: Mapping[str, Any]) -> 'AttackResult':
        """Rebuild a result from :meth:`to_record` output (extra keys ignored)."""
        by_phase = {str(k): int(v) for k, v in dict(record.get('queries_by_phase') or {}).items()}
        return cls(
            success=bool(record['success']),
            original_text=str(record.get('original_text', '')),
            final_text=str(record.get('final_text', '')),
            y=int(record['y']),
            queries=LedgerSnapshot(total=int(record['queries_total']), by_phase=by_phase),
            final_prob=float(record.get('final_prob', float('nan'))),
            modified_indices=tuple(int(i) for i in record.get('modified_indices', [])),
            method=str(record['method']),
            n=record.get('n'),
            tau=record.get('tau'),
            k=int(record.get('k', -1)),
            status=str(record.get('status', STATUS_ATTACKED)),
            n_per_sentence=tuple(int(n) for n in record.get('n_per_sentence') or ()),
        )
