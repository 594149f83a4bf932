"""Instrumented DFS observers used by the conformance tests.

Both checkers are passed as ``observer=`` to :func:`ipgraph.dfs.dfs_run`.
:class:`StrictInvariantChecker` must also be the run's hooks, since it tracks
the DFS path from the Pre/Post events.  They read ``a.words`` directly so the
access counters are not disturbed.
"""
from __future__ import annotations

from .dfs import EventRecorder
from .ram import WordArray
from .representations import ValueBands


class InvariantViolation(AssertionError):
    pass


class StrictInvariantChecker(EventRecorder):
    """Checks the three strict-mode cell invariants at follow/backtrack boundaries.

    1. ``v`` is white exactly when it is not the active start and ``1 <= A[T[v]] <= n``.
    2. a vertex on the current path (other than the start) has ``T[v] = p`` where
       ``p`` is the parent's slot that originally named ``v``, and ``A[p] >= n``.
       The first neighbour is the exception: it is followed from the second
       slot, because a vertex is never left through its first cell.
    3. a finished vertex has ``T[v] = q`` with ``1 <= A[q-1] <= n``; more precisely
       ``q - 1`` is the array start of its first neighbour (done-mark = displaced + 1).
    """

    def __init__(self, original: WordArray):
        super().__init__()
        self.orig = list(original.words)
        self.path: list[int] = []
        self.seen: set[int] = set()
        self.checks = 0

    def preprocess(self, v: int) -> None:
        super().preprocess(v)
        self.seen.add(v)
        self.path.append(v)

    def postprocess(self, v: int) -> None:
        super().postprocess(v)
        if not self.path or self.path[-1] != v:
            raise InvariantViolation(f"post({v}) does not close the innermost open vertex")
        self.path.pop()

    def _slot(self, parent: int, v: int) -> int:
        o = self.orig
        n = o[0]
        lo = o[parent]
        hi = o[parent + 1] if parent < n else n + o[n + 1] + 2
        for j in range(lo, hi):
            if o[j] == v:
                return j + 1 if j == lo else j
        raise InvariantViolation(f"{v} is not a neighbour of {parent}")

    def __call__(self, event: str, a: WordArray, vs: int) -> None:
        if event.split(":")[0] not in ("follow", "backtrack", "finish"):
            return
        self.checks += 1
        A = a.words
        o = self.orig
        n = A[0]
        on_path = set(self.path)
        for v in range(1, n + 1):
            t = A[v]
            looks_white = v != vs and 1 <= A[t] <= n
            if looks_white != (v not in self.seen):
                raise InvariantViolation(f"[{event}] invariant 1 fails for {v}: T[v]={t}, A[T[v]]={A[t]}")
        for i in range(1, len(self.path)):
            v, parent = self.path[i], self.path[i - 1]
            p = A[v]
            want = self._slot(parent, v)
            if p != want or A[p] < n:
                raise InvariantViolation(
                    f"[{event}] invariant 2 fails for {v}: T[v]={p}, expected slot {want}, A[p]={A[p]}")
        for v in self.seen - on_path:
            q = A[v]
            first = o[o[v]]
            if not 1 <= A[q - 1] <= n or q - 1 != o[first] or A[q - 1] != first:
                raise InvariantViolation(
                    f"[{event}] invariant 3 fails for {v}: T[v]={q}, expected start of {first} (+1) = {o[first] + 1}")


class BandClosureChecker:
    """Asserts that every T and adjacency cell lies in one of the value bands."""

    def __init__(self) -> None:
        self.checks = 0

    def __call__(self, event: str, a: WordArray, vs: int) -> None:
        self.checks += 1
        A = a.words
        n, L = A[0], A[A[0] + 1]
        bands = ValueBands(n, L)
        end = bands.end
        off = bands.done_offset
        for i in list(range(1, n + 1)) + list(range(n + 2, end)):
            x = A[i]
            ok = (1 <= x <= n or n + 2 <= x <= end + n
                  or n + 2 + off <= x < end + off or end + off < x <= end + n + off)
            if not ok:
                raise InvariantViolation(f"[{event}] A[{i}] = {x} is outside every band")
