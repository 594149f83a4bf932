"""Graphs in the sorted standard representation.

Layout of the word array ``A`` for an ``n``-vertex graph with total adjacency
length ``L`` (``L = m`` directed, ``L = 2m`` undirected)::

    A[0] = n | A[1..n] = T (adjacency start indices) | A[n+1] = L | A[n+2 .. n+L+1] = adjacency

Vertex names are ``1..n``.  Arrays are stored in vertex order and each one is
strictly ascending.  A degree-zero vertex ``v < n`` has ``T[v] == T[v+1]``; a
degree-zero last vertex has ``T[n] == n + L + 2``.

Building, generating and (de)serialising happen outside the in-place
contract and use ordinary Python/numpy memory.
"""
from __future__ import annotations

import struct
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .ram import WordArray

MAGIC = b"IPG1"
FORMAT_VERSION = 1
_HEADER = struct.Struct("<4sBBBBQ")

MODELS = ("gnm", "path", "cycle", "star", "binary-tree", "deg1-chains", "isolated-mix")


class GraphError(ValueError):
    pass


class ValidationError(GraphError):
    pass


class ParameterError(GraphError):
    pass


class FormatError(GraphError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class GraphHeader:
    n: int
    m: int
    L: int
    directed: bool
    w: int

    @property
    def N(self) -> int:
        return self.n + self.L + 2

    @property
    def end(self) -> int:
        """``n + L + 2``: one past the last adjacency cell."""
        return self.n + self.L + 2


def required_width(n: int, L: int) -> int:
    """Smallest bit width leaving the two slack bits the DFS value bands need."""
    return max(1, (3 * n + 2 * L + 4 - 1).bit_length())


def default_width(n: int, L: int) -> int:
    """``required_width`` rounded up to a whole number of bytes (at least 8)."""
    w = required_width(n, L)
    return max(8, -(-w // 8) * 8)


def header(a: WordArray, directed: bool = False) -> GraphHeader:
    n = a.words[0]
    L = a.words[n + 1]
    return GraphHeader(n, L if directed else L // 2, L, directed, a.width)


@dataclass
class EdgeList:
    n: int
    directed: bool = False
    edges: list[tuple[int, int]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.edges)

    def check(self) -> None:
        seen: set[tuple[int, int]] = set()
        for u, v in self.edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValidationError(f"edge ({u}, {v}) has an endpoint outside 1..{self.n}")
            if u == v:
                raise ValidationError(f"self-loop ({u}, {v})")
            key = (u, v) if self.directed else (min(u, v), max(u, v))
            if key in seen:
                raise ValidationError(f"duplicate edge ({u}, {v})")
            seen.add(key)

    def adjacency(self) -> list[list[int]]:
        """Ascending neighbour lists, index 0 unused."""
        adj: list[list[int]] = [[] for _ in range(self.n + 1)]
        for u, v in self.edges:
            adj[u].append(v)
            if not self.directed:
                adj[v].append(u)
        for lst in adj:
            lst.sort()
        return adj

    def edge_set(self) -> set[tuple[int, int]]:
        if self.directed:
            return set(self.edges)
        return {(min(u, v), max(u, v)) for u, v in self.edges}


def build(e: EdgeList, w: int | None = None, *, check: bool = True) -> WordArray:
    """Lay out ``e`` in the sorted standard representation."""
    if e.n < 1:
        raise ValidationError("a graph needs at least one vertex")
    if check:
        e.check()
    if e.edges:
        pairs = np.asarray(e.edges, dtype=np.int64).reshape(-1, 2)
    else:
        pairs = np.zeros((0, 2), dtype=np.int64)
    if e.directed:
        src, dst = pairs[:, 0], pairs[:, 1]
    else:
        src = np.concatenate([pairs[:, 0], pairs[:, 1]])
        dst = np.concatenate([pairs[:, 1], pairs[:, 0]])
    n, L = e.n, len(src)
    if w is None:
        w = default_width(n, L)
    need = required_width(n, L)
    if w < need:
        raise ValidationError(f"width {w} too small: n={n}, L={L} needs w >= {need}")
    if w > 64:
        raise ValidationError(f"width {w} exceeds 64")
    order = np.lexsort((dst, src))
    dst = dst[order]
    deg = np.bincount(src, minlength=n + 1)[1:]
    starts = (n + 2) + np.concatenate([[0], np.cumsum(deg)[:-1]])
    words = np.empty(n + L + 2, dtype=np.int64)
    words[0] = n
    words[1 : n + 1] = starts
    words[n + 1] = L
    words[n + 2 :] = dst
    return WordArray(words.tolist(), w)


def degree(a: WordArray, v: int) -> int:
    n = a.words[0]
    if not 1 <= v <= n:
        raise IndexError(f"vertex {v} outside 1..{n}")
    L = a.words[n + 1]
    nxt = a.words[v + 1] if v < n else n + L + 2
    return nxt - a.words[v]


@dataclass
class Violation:
    index: int
    message: str

    def __str__(self) -> str:
        return f"A[{self.index}]: {self.message}"


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "pass"
        return "\n".join(str(x) for x in self.violations)


def validate(a: WordArray, directed: bool | None = None) -> ValidationReport:
    """Check every sorted-standard invariant; symmetry only when ``directed is False``."""
    rep = ValidationReport()
    bad = rep.violations.append
    A = a.words
    N = len(A)
    if N < 3:
        bad(Violation(0, f"array of length {N} is too short"))
        return rep
    n = A[0]
    if n < 1 or n + 2 > N:
        bad(Violation(0, f"vertex count {n} inconsistent with length {N}"))
        return rep
    L = A[n + 1]
    if N != n + L + 2:
        bad(Violation(n + 1, f"adjacency length {L} gives N={n + L + 2}, array has {N}"))
        return rep
    end = n + L + 2
    if A[1] != n + 2:
        bad(Violation(1, f"T[1]={A[1]} must be {n + 2}"))
    for v in range(1, n + 1):
        if not n + 2 <= A[v] <= end:
            bad(Violation(v, f"T[{v}]={A[v]} outside [{n + 2}, {end}]"))
        if v > 1 and A[v] < A[v - 1]:
            bad(Violation(v, f"T not non-decreasing: T[{v}]={A[v]} < T[{v - 1}]={A[v - 1]}"))
    if rep.violations:
        return rep
    for v in range(1, n + 1):
        lo, hi = A[v], (A[v + 1] if v < n else end)
        for i in range(lo, hi):
            x = A[i]
            if not 1 <= x <= n:
                bad(Violation(i, f"entry {x} is not a vertex name"))
            elif x == v:
                bad(Violation(i, f"self-loop at vertex {v}"))
            if i > lo and A[i] <= A[i - 1]:
                bad(Violation(i, f"adjacency of {v} not strictly ascending ({A[i - 1]}, {A[i]})"))
    if directed is False and not rep.violations:
        arcs = set()
        for v in range(1, n + 1):
            for i in range(A[v], A[v + 1] if v < n else end):
                arcs.add((v, A[i]))
        for v in range(1, n + 1):
            for i in range(A[v], A[v + 1] if v < n else end):
                if (A[i], v) not in arcs:
                    bad(Violation(i, f"undirected edge {{{v},{A[i]}}} missing at vertex {A[i]}"))
    return rep


def edges_from_array(a: WordArray, directed: bool = False) -> EdgeList:
    """Recover the edge list from a sorted standard array (oracle adapter)."""
    A = a.words
    n, L = A[0], A[A[0] + 1]
    end = n + L + 2
    edges = []
    for v in range(1, n + 1):
        for i in range(A[v], A[v + 1] if v < n else end):
            if directed or v < A[i]:
                edges.append((v, A[i]))
    return EdgeList(n, directed, edges)


# -- generators ---------------------------------------------------------------


def _gnm_pairs(rng: np.random.Generator, n: int, m: int, directed: bool) -> np.ndarray:
    total = n * (n - 1) if directed else n * (n - 1) // 2
    if m > total:
        raise ParameterError(f"gnm: m={m} exceeds the {total} possible edges on n={n}")
    if m == 0:
        return np.zeros((0, 2), dtype=np.int64)
    if m > total // 2:
        # dense: enumerate and sample
        if directed:
            u, v = np.nonzero(~np.eye(n, dtype=bool))
        else:
            u, v = np.triu_indices(n, 1)
        pick = rng.choice(len(u), size=m, replace=False)
        return np.stack([u[pick] + 1, v[pick] + 1], axis=1)
    keys = np.zeros(0, dtype=np.int64)
    while len(keys) < m:
        need = m - len(keys)
        k = int(need * 1.2) + 16
        u = rng.integers(0, n, size=k)
        v = rng.integers(0, n, size=k)
        ok = u != v
        u, v = u[ok], v[ok]
        if not directed:
            u, v = np.minimum(u, v), np.maximum(u, v)
        new = u * n + v
        _, first = np.unique(new, return_index=True)
        new = new[np.sort(first)]
        new = new[~np.isin(new, keys)]
        keys = np.concatenate([keys, new[:need]])
    return np.stack([keys // n + 1, keys % n + 1], axis=1)


def generate(
    model: str,
    n: int,
    m: int = 0,
    seed: int = 0,
    directed: bool = False,
) -> EdgeList:
    """Deterministic test-corpus generator.

    ``m`` is the edge count for ``gnm`` and ``isolated-mix``; the structured
    models fix their own edge count and ignore it.
    """
    if model not in MODELS:
        raise ParameterError(f"unknown model {model!r}; choose from {', '.join(MODELS)}")
    if n < 1:
        raise ParameterError("n must be >= 1")
    if m < 0:
        raise ParameterError("m must be >= 0")
    rng = np.random.default_rng(seed)
    edges: list[tuple[int, int]]
    if model == "gnm":
        edges = [tuple(p) for p in _gnm_pairs(rng, n, m, directed).tolist()]
    elif model == "path":
        edges = [(i, i + 1) for i in range(1, n)]
    elif model == "cycle":
        if n < 3:
            raise ParameterError("cycle needs n >= 3")
        edges = [(i, i + 1) for i in range(1, n)] + [(n, 1)]
    elif model == "star":
        edges = [(1, i) for i in range(2, n + 1)]
    elif model == "binary-tree":
        edges = [(i // 2, i) for i in range(2, n + 1)]
    elif model == "deg1-chains":
        edges = _deg1_chains(rng, n, directed)
    else:  # isolated-mix
        edges = _isolated_mix(rng, n, m, directed)
    perm = None
    if model != "gnm" and model not in ("path", "cycle", "star", "binary-tree"):
        perm = rng.permutation(n) + 1
    if perm is not None:
        edges = [(int(perm[u - 1]), int(perm[v - 1])) for u, v in edges]
    edges = [(int(u), int(v)) for u, v in edges]
    return EdgeList(n, directed, edges)


def _deg1_chains(rng: np.random.Generator, n: int, directed: bool) -> list[tuple[int, int]]:
    # Hubs, chains of (out-)degree-one vertices between hubs, and a few sinks.
    if n < 3:
        return [(1, 2)] if n == 2 else []
    hubs = max(2, n // 5)
    sinks = max(1, n // 12) if directed else 0
    chain_vs = list(range(hubs + 1, n - sinks + 1))
    sink_vs = list(range(n - sinks + 1, n + 1))
    out: set[tuple[int, int]] = set()

    def add(u: int, v: int) -> None:
        if u != v and (directed or (v, u) not in out):
            out.add((u, v))

    i = 0
    while i < len(chain_vs):
        k = int(rng.integers(1, 7))
        chain = chain_vs[i : i + k]
        i += k
        head = int(rng.integers(1, hubs + 1))
        add(head, chain[0])
        for a, b in zip(chain, chain[1:]):
            add(a, b)
        r = rng.random()
        if r < 0.6:
            tail = int(rng.integers(1, hubs + 1))
        elif r < 0.8 and sink_vs:
            tail = int(rng.choice(sink_vs))
        else:
            tail = 0
        if tail:
            add(chain[-1], tail)
    for h in range(1, hubs + 1):
        for _ in range(2):
            add(h, int(rng.integers(1, n + 1)))
    return sorted(out)


def _isolated_mix(rng: np.random.Generator, n: int, m: int, directed: bool) -> list[tuple[int, int]]:
    active = max(2, n // 2) if n >= 2 else 1
    if active == 1:
        if m:
            raise ParameterError("isolated-mix: no edges possible on one vertex")
        return []
    if directed:
        # sources are the active half; targets may be any vertex (sinks have out-degree 0)
        total = active * (n - 1)
        if m > total:
            raise ParameterError(f"isolated-mix: m={m} exceeds {total}")
        out: set[tuple[int, int]] = set()
        while len(out) < m:
            u = int(rng.integers(1, active + 1))
            v = int(rng.integers(1, n + 1))
            if u != v:
                out.add((u, v))
        return sorted(out)
    pairs = _gnm_pairs(rng, active, m, False)
    return [tuple(p) for p in pairs.tolist()]


def ensure_min_out_degree(e: EdgeList, k: int, seed: int = 0) -> EdgeList:
    """Add random edges until every vertex has (out-)degree at least ``k``."""
    if e.n <= k:
        raise ParameterError(f"min degree {k} impossible on {e.n} vertices")
    rng = np.random.default_rng(seed)
    adj = [set() for _ in range(e.n + 1)]
    for u, v in e.edges:
        adj[u].add(v)
        if not e.directed:
            adj[v].add(u)
    edges = list(e.edges)
    for u in range(1, e.n + 1):
        while len(adj[u]) < k:
            v = int(rng.integers(1, e.n + 1))
            if v == u or v in adj[u]:
                continue
            adj[u].add(v)
            if not e.directed:
                adj[v].add(u)
            edges.append((u, v))
    return EdgeList(e.n, e.directed, edges)


# -- file formats -------------------------------------------------------------


def store_graph(a: WordArray, directed: bool = False) -> bytes:
    w = a.width
    nbytes = (w + 7) // 8
    head = _HEADER.pack(MAGIC, FORMAT_VERSION, w, 1 if directed else 0, 0, len(a))
    return head + b"".join(x.to_bytes(nbytes, "little") for x in a.words)


def load_graph(data: bytes) -> tuple[WordArray, bool]:
    """Parse a binary graph file; returns ``(array, directed)``."""
    if len(data) < _HEADER.size:
        raise FormatError("truncated header", len(data))
    magic, version, w, flags, _reserved, N = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise FormatError(f"bad magic {magic!r}", 0)
    if version != FORMAT_VERSION:
        raise FormatError(f"unsupported version {version}", 4)
    if not 8 <= w <= 64:
        raise FormatError(f"width {w} outside 8..64", 5)
    nbytes = (w + 7) // 8
    need = _HEADER.size + N * nbytes
    if len(data) < need:
        raise FormatError(f"truncated: {N} words need {need} bytes, have {len(data)}", len(data))
    if len(data) > need:
        raise FormatError("trailing bytes after last word", need)
    body = memoryview(data)[_HEADER.size :]
    words = [int.from_bytes(body[i * nbytes : (i + 1) * nbytes], "little") for i in range(N)]
    limit = 1 << w
    for i, x in enumerate(words):
        if x >= limit:
            raise FormatError(f"word {i} value {x} exceeds width {w}", _HEADER.size + i * nbytes)
    return WordArray(words, w), bool(flags & 1)


def format_edge_list(e: EdgeList) -> str:
    lines = [f"{e.n} {len(e.edges)} {1 if e.directed else 0}"]
    lines += [f"{u} {v}" for u, v in e.edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> EdgeList:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 3:
        raise ParameterError("first line must be 'n m directed(0|1)'")
    n, m, d = (int(x) for x in rows[0])
    if d not in (0, 1):
        raise ParameterError(f"directed flag must be 0 or 1, got {d}")
    edges = []
    for k, r in enumerate(rows[1:], start=2):
        if len(r) != 2:
            raise ParameterError(f"line {k}: expected 'u v'")
        edges.append((int(r[0]), int(r[1])))
    if len(edges) != m:
        raise ParameterError(f"header says m={m} but {len(edges)} edges follow")
    return EdgeList(n, bool(d), edges)


def from_adjacency(adj: Sequence[Iterable[int]], directed: bool = True) -> EdgeList:
    """Edge list from 1-based neighbour lists (``adj[0]`` ignored)."""
    n = len(adj) - 1
    edges = []
    for u in range(1, n + 1):
        for v in adj[u]:
            if directed or u < v:
                edges.append((u, v))
    return EdgeList(n, directed, edges)
