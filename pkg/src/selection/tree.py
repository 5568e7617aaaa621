"""
Search tree over token spans.

Nodes live in an arena indexed by integer id; the root is node 0. A node is on
the frontier while it is neither explored nor split. Probabilities are stamped
with the document version they were scored against; replacing a token bumps
the version but keeps existing scores, and children scored later see the new
document.
"""

# Standard library
from dataclasses import dataclass, field
from typing import Optional, Sequence

# Local imports
from i18n import t
from textmodel import Document, Span
from utils import SelectionError, get_logger

logger = get_logger(__name__)

ROOT_ID = 0


@dataclass
class TreeNode:
    """One scored span of the search tree."""

    span: Span
    prob: float
    version: int
    parent: Optional[int] = None
    children: list[int] = field(default_factory=list)
    explored: bool = False

    @property
    def is_split(self) -> bool:
        return bool(self.children)

    @property
    def is_root(self) -> bool:
        return self.parent is None


class SearchTree:
    """
    Scored span hierarchy driving N-nary descent.

    Examples:
        >>> tree = SearchTree()
        >>> tree.seed_root(Span(0, 4), 0.9)
        0
        >>> tree.lowest_frontier()
        0
    """

    def __init__(self) -> None:
        self._nodes: list[TreeNode] = []
        self._version = 0
        self._tokens: Optional[tuple[str, ...]] = None

    def __len__(self) -> int:
        return len(self._nodes)

    @property
    def is_empty(self) -> bool:
        return not self._nodes

    @property
    def version(self) -> int:
        return self._version

    @property
    def root(self) -> TreeNode:
        if self.is_empty:
            raise SelectionError(t('error.tree_not_seeded'))
        return self._nodes[ROOT_ID]

    def node(self, node_id: int) -> TreeNode:
        return self._nodes[node_id]

    def observe(self, doc: Document) -> None:
        """Bump the version when ``doc`` differs from the last document seen."""
        if self._tokens is not None and doc.tokens != self._tokens:
            self._version += 1
            logger.debug(f"Search tree now at document version {self._version}")
        self._tokens = doc.tokens

    def seed_root(self, span: Span, prob: float) -> int:
        """
        Create the root node with an already known probability.

        Raises:
            SelectionError: If the tree already has a root.
        """
        if not self.is_empty:
            raise SelectionError(t('error.tree_already_seeded'))
        self._nodes.append(TreeNode(span=span, prob=prob, version=self._version))
        return ROOT_ID

    def attach_children(self, parent_id: int, spans: Sequence[Span], probs: Sequence[float]) -> list[int]:
        """Attach scored children to an unsplit node and return their ids."""
        parent = self._nodes[parent_id]
        if parent.is_split:
            raise SelectionError(t('error.node_already_split', span=str(parent.span)))
        ids: list[int] = []
        for span, prob in zip(spans, probs):
            self._nodes.append(TreeNode(span=span, prob=prob, version=self._version, parent=parent_id))
            ids.append(len(self._nodes) - 1)
        parent.children = ids
        return ids

    def frontier(self) -> list[int]:
        """Ids of nodes that are neither explored nor split."""
        return [i for i, node in enumerate(self._nodes) if not node.explored and not node.is_split]

    def lowest_frontier(self) -> Optional[int]:
        """Frontier node with the lowest probability, leftmost on ties; None when exhausted."""
        candidates = self.frontier()
        if not candidates:
            return None
        return min(candidates, key=lambda i: (self._nodes[i].prob, self._nodes[i].span.start))

    def best_child(self, node_id: int) -> int:
        """Child with the lowest probability (largest drop), leftmost on ties."""
        children = self._nodes[node_id].children
        return min(children, key=lambda i: (self._nodes[i].prob, self._nodes[i].span.start))

    def mark_explored(self, node_id: int) -> None:
        """Mark a node explored, then every ancestor whose children are all explored."""
        current: Optional[int] = node_id
        while current is not None:
            node = self._nodes[current]
            if node.is_split and not all(self._nodes[c].explored for c in node.children):
                break
            node.explored = True
            current = node.parent

    @property
    def exhausted(self) -> bool:
        return not self.is_empty and self.root.explored
