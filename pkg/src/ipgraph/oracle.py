"""Folklore DFS and BFS with unrestricted memory.

These consume :class:`~ipgraph.graph.EdgeList` values rather than the word
array so that a bug in the array layout cannot hide a traversal bug.
Neighbours are always scanned in ascending order.
"""
from __future__ import annotations

from collections import deque
from typing import Sequence

from .graph import EdgeList

WHITE, GRAY, BLACK = 0, 1, 2


def _check_start(e: EdgeList, vs: int | None) -> None:
    if vs is not None and not 1 <= vs <= e.n:
        raise IndexError(f"start vertex {vs} outside 1..{e.n}")


def oracle_dfs(e: EdgeList, vs: int | None = None, with_edge_events: bool = False) -> list[tuple]:
    """Explicit-stack DFS.  ``vs=None`` restarts from every white vertex in order."""
    _check_start(e, vs)
    adj = e.adjacency()
    color = [WHITE] * (e.n + 1)
    out: list[tuple] = []
    roots = [vs] if vs is not None else range(1, e.n + 1)
    for r in roots:
        if color[r] != WHITE:
            continue
        color[r] = GRAY
        out.append(("pre", r))
        stack = [(r, 0)]
        while stack:
            u, i = stack[-1]
            nbrs = adj[u]
            if i == len(nbrs):
                stack.pop()
                color[u] = BLACK
                out.append(("post", u))
                if stack and with_edge_events:
                    out.append(("postexp", stack[-1][0], u))
                continue
            v = nbrs[i]
            stack[-1] = (u, i + 1)
            if with_edge_events:
                out.append(("preexp", u, v))
            if color[v] == WHITE:
                color[v] = GRAY
                out.append(("pre", v))
                stack.append((v, 0))
            elif with_edge_events:
                out.append(("postexp", u, v))
    return out


def oracle_bfs(e: EdgeList, vs: int) -> list[tuple[int, int]]:
    """Queue BFS from ``vs``; returns ``(vertex, distance)`` in discovery order."""
    _check_start(e, vs)
    adj = e.adjacency()
    dist = [-1] * (e.n + 1)
    dist[vs] = 0
    order = [(vs, 0)]
    queue = deque([vs])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                order.append((v, dist[v]))
                queue.append(v)
    return order


def oracle_bfs_all(e: EdgeList) -> list[tuple[int, int, int]]:
    """BFS from every still-unseen vertex in order; seen vertices are never re-entered."""
    adj = e.adjacency()
    dist = [-1] * (e.n + 1)
    out = []
    for r in range(1, e.n + 1):
        if dist[r] >= 0:
            continue
        dist[r] = 0
        out.append((r, 0, r))
        queue = deque([r])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    out.append((v, dist[v], r))
                    queue.append(v)
    return out


def oracle_packed_read(original: Sequence[int], i: int) -> int:
    """Direct-copy read used to check packed tables; ``i`` is 1-based."""
    if not 1 <= i <= len(original):
        raise IndexError(f"index {i} outside 1..{len(original)}")
    return original[i - 1]


def check_event_stream(events: Sequence[tuple]) -> None:
    """Assert balanced Pre/Post nesting with one Pre and one Post per vertex."""
    stack: list[int] = []
    seen: set[int] = set()
    for ev in events:
        if ev[0] == "pre":
            assert ev[1] not in seen, f"vertex {ev[1]} preprocessed twice"
            seen.add(ev[1])
            stack.append(ev[1])
        elif ev[0] == "post":
            assert stack and stack[-1] == ev[1], f"unbalanced post({ev[1]})"
            stack.pop()
    assert not stack, f"vertices never postprocessed: {stack}"
