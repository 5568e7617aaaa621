"""
Selection module.
Greedy ranking, the N-nary span search tree and length-based choice of N.
"""

from .bins import Bin, BinTable, dyn_n, format_bound, parse_bound
from .greedy import greedy_rank
from .nnary import nnary_select_iter, nnary_select_segment
from .tree import SearchTree, TreeNode

__all__ = [
    'Bin',
    'BinTable',
    'dyn_n',
    'format_bound',
    'parse_bound',
    'greedy_rank',
    'nnary_select_iter',
    'nnary_select_segment',
    'SearchTree',
    'TreeNode',
]
