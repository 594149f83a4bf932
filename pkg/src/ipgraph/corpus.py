"""Randomized graph corpus and the per-case oracle/restore check used by ``verify``."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bfs import bfs_run
from .dfs import dfs_run, dfs_run_explore
from .graph import EdgeList, build, generate
from .oracle import oracle_bfs, oracle_dfs
from .ram import snapshot

CORPUS_MODELS = ("gnm", "path", "cycle", "star", "deg1-chains", "isolated-mix")
ALGOS = ("dfs", "dfs-explore", "bfs")


@dataclass(frozen=True)
class Case:
    seed: int
    model: str
    n: int
    m: int
    directed: bool
    start: int

    def edges(self) -> EdgeList:
        return generate(self.model, self.n, self.m, self.seed, self.directed)

    def __str__(self) -> str:
        return (f"seed={self.seed} model={self.model} n={self.n} m={self.m} "
                f"directed={int(self.directed)} start={self.start}")


def _max_edges(model: str, n: int, directed: bool) -> int:
    if model == "isolated-mix":
        act = max(2, n // 2) if n >= 2 else 1
        if act == 1:
            return 0
        return act * (n - 1) if directed else act * (act - 1) // 2
    return n * (n - 1) if directed else n * (n - 1) // 2


def random_case(seed: int, max_n: int = 4096, models=CORPUS_MODELS) -> Case:
    """Draw model, direction, n (log-uniform in 1..max_n), m and a start vertex from ``seed``."""
    rng = np.random.default_rng(seed)
    model = str(rng.choice(models))
    directed = bool(rng.integers(2))
    n = int(min(max_n, max(1, round(math.exp(rng.uniform(0, math.log(max_n)))))))
    if model == "cycle":
        n = max(n, 3)
    m = 0
    if model in ("gnm", "isolated-mix"):
        m = min(int(rng.uniform(0, 4) * n), _max_edges(model, n, directed))
    start = int(rng.integers(1, n + 1))
    return Case(seed, model, n, m, directed, start)


@dataclass
class CaseResult:
    case: Case
    restore_failures: list[str] = field(default_factory=list)
    oracle_failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.restore_failures and not self.oracle_failures


def check_case(case: Case, algos=ALGOS) -> CaseResult:
    return check_graph(case.edges(), case.start, algos, case)


def check_graph(e: EdgeList, start: int, algos=ALGOS, case: Case | None = None) -> CaseResult:
    """Run each algorithm on ``build(e)``; compare with the oracles and the pre-run snapshot."""
    if case is None:
        case = Case(-1, "given", e.n, len(e.edges), e.directed, start)
    a = build(e)
    before = snapshot(a)
    res = CaseResult(case)
    for algo in algos:
        if algo == "dfs":
            same = dfs_run(a, start) == oracle_dfs(e, start)
        elif algo == "dfs-explore":
            same = dfs_run_explore(a, start) == oracle_dfs(e, start, with_edge_events=True)
        elif algo == "bfs":
            same = sorted(bfs_run(a, start)) == sorted(oracle_bfs(e, start))
        else:
            raise ValueError(f"unknown algorithm {algo!r}")
        if snapshot(a) != before:
            res.restore_failures.append(algo)
            a = build(e)
        if not same:
            res.oracle_failures.append(algo)
    return res
