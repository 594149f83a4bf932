"""In-place depth-first and breadth-first search on adjacency arrays.

Graphs live in one word array ``[n | T[1..n] | L | adjacency arrays]``.  The
traversals rewrite that array while they run, using only a constant number of
extra words, and leave it bit-for-bit as they found it.
"""
from .bfs import bfs_all_components, bfs_run
from .dfs import DfsHooks, EventRecorder, dfs_run, dfs_run_explore, find_start, is_white, restore_after_dfs
from .graph import EdgeList, build, degree, generate, load_graph, store_graph, validate
from .oracle import oracle_bfs, oracle_bfs_all, oracle_dfs
from .packing import ChoiceDictionary, pack, read_packed, unpack
from .ram import AccessStats, RegisterFile, WordArray, run_budgeted, snapshot
from .representations import (
    Rep,
    ValueBands,
    restore_sorted_standard,
    swap_representation,
    to_begin_pointer,
    unswap_representation,
)

__all__ = [
    "AccessStats", "ChoiceDictionary", "DfsHooks", "EdgeList", "EventRecorder", "Rep", "RegisterFile",
    "ValueBands", "WordArray", "bfs_all_components", "bfs_run", "build", "degree", "dfs_run",
    "dfs_run_explore", "find_start", "generate", "is_white", "load_graph", "oracle_bfs", "oracle_bfs_all",
    "oracle_dfs", "pack", "read_packed", "restore_after_dfs", "restore_sorted_standard", "run_budgeted",
    "snapshot", "store_graph", "swap_representation", "to_begin_pointer", "unpack", "unswap_representation",
    "validate",
]
