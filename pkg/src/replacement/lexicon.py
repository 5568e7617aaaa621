"""Ranked synonym lexicon."""

# Standard library
from typing import Mapping, Optional, Sequence

# Local imports
from textmodel import normalize_token
from utils import get_logger

logger = get_logger(__name__)


class SynonymLexicon:
    """
    Map from headword to synonyms ordered by similarity (most similar first).

    Headwords are stored lowercased. Lookups try the lowercased token first
    and then its punctuation-stripped form, so ``"Good."`` finds ``good``.
    Synonyms equal to their headword and repeated synonyms are dropped;
    headwords left without synonyms are not stored.

    Args:
        entries: Headword to ranked synonyms.
        max_candidates: Optional cap on returned synonyms (None = unlimited).

    Examples:
        >>> lex = SynonymLexicon({'good': ['fine', 'great', 'good']})
        >>> lex.synonyms('Good.')
        ['fine', 'great']
    """

    def __init__(
        self,
        entries: Mapping[str, Sequence[str]],
        max_candidates: Optional[int] = None,
    ) -> None:
        self.max_candidates = max_candidates if max_candidates and max_candidates > 0 else None
        self._entries: dict[str, tuple[str, ...]] = {}
        dropped = 0
        for headword, synonyms in entries.items():
            key = headword.strip().lower()
            seen = {key}
            ranked: list[str] = []
            for synonym in synonyms:
                word = synonym.strip()
                if not word or word.lower() in seen:
                    dropped += 1
                    continue
                seen.add(word.lower())
                ranked.append(word)
            if ranked:
                self._entries[key] = tuple(ranked)
        if dropped:
            logger.debug(f"Lexicon dropped {dropped} self-referencing, blank or repeated synonym(s)")

    def synonyms(self, word: str) -> list[str]:
        """Ranked synonyms of ``word`` (empty when unknown)."""
        key = word.strip().lower()
        found = self._entries.get(key)
        if found is None:
            found = self._entries.get(normalize_token(word), ())
        if self.max_candidates is not None:
            found = found[:self.max_candidates]
        return list(found)

    def with_cap(self, max_candidates: Optional[int]) -> 'SynonymLexicon':
        """Copy of this lexicon with a different candidate cap."""
        capped = SynonymLexicon({}, max_candidates)
        capped._entries = self._entries
        return capped

    def __contains__(self, word: object) -> bool:
        return isinstance(word, str) and bool(self.synonyms(word))

    def __len__(self) -> int:
        return len(self._entries)

    @property
    def headwords(self) -> list[str]:
        return sorted(self._entries)
