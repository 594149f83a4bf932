"""Linear-time in-place DFS on the swapped begin-pointer representation.

The traversal keeps no stack.  Visiting ``v`` from slot ``p`` of its parent
stores ``p`` in ``T[v]`` (a reverse pointer) and parks ``v``'s displaced first
adjacency value in ``A[p]``.  Backtracking swaps them back and marks ``v``
finished.  A vertex is never left through the first cell of its array: the
first two values are exchanged on entry and exchanged back after the first
neighbour has been handled.

Two cell encodings are supported:

``banded`` (default)
    finished vertices store ``first + (n + L + 1)``, a gray degree-zero vertex
    stores ``n + L + 2`` and references to degree-zero vertices (or to an
    already finished chain head) live in the deg0ref band.  Every graph is
    handled.

``strict``
    finished vertices store ``first + 1``, exactly the classic scheme.  Only
    valid when every vertex has (out-)degree at least two.

Chains of degree-one vertices are linked through vertex names in ``T``; the
first value of the degree->=2 vertex that ends a chain is parked in the slot
of the vertex that started it.
"""
from __future__ import annotations

from typing import Callable

from .graph import required_width
from .ram import RegisterFile, WordArray
from .representations import (
    BANDED,
    MODES,
    STRICT,
    CorruptionError,
    Rep,
    _swap,
    detect,
    restore_sorted_standard,
    to_begin_pointer,
)

# p, s, q, v, t, x, val, y, succ, pbar, stash, cur, act, fl, vs, n, L, end, off, pc,
# plus last and fresh for the explore variant's parent lookup
DFS_REGISTERS = 22

_REG = -1  # first-value cell is the stash register (degree-one start vertex)

_ENTER, _NEXT, _SCAN, _BACKTRACK, _UNWIND, _CHAIN, _FINISH = range(7)

Observer = Callable[[str, WordArray, int], None]


class DfsError(Exception):
    pass


class StrictModeError(DfsError):
    """Strict mode was asked to run outside its validity domain."""


class DfsHooks:
    """User callbacks; override what you need.  Hooks must not touch the array."""

    def preprocess(self, v: int) -> None:
        pass

    def postprocess(self, v: int) -> None:
        pass

    def preexplore(self, u: int, v: int) -> None:
        pass

    def postexplore(self, u: int, v: int) -> None:
        pass


class EventRecorder(DfsHooks):
    def __init__(self) -> None:
        self.events: list[tuple] = []

    def preprocess(self, v: int) -> None:
        self.events.append(("pre", v))

    def postprocess(self, v: int) -> None:
        self.events.append(("post", v))

    def preexplore(self, u: int, v: int) -> None:
        self.events.append(("preexp", u, v))

    def postexplore(self, u: int, v: int) -> None:
        self.events.append(("postexp", u, v))


def format_events(events) -> str:
    return "".join(" ".join(map(str, ev)) + "\n" for ev in events)


def find_start(a: WordArray, vs: int) -> int:
    """Array start of ``vs`` in a swapped begin-pointer array, or 0 if ``deg(vs) == 0``."""
    rd = a.read
    n = rd(0)
    if not 1 <= vs <= n:
        raise IndexError(f"start vertex {vs} outside 1..{n}")
    if rd(vs) == vs:
        return 0
    end = n + rd(n + 1) + 2
    for i in range(n + 2, end):
        if rd(i) == vs:
            return i
    raise CorruptionError(vs, vs, "no array start holds the vertex name")


def is_white(a: WordArray, v: int, active_start: int = 0, mode: str = BANDED) -> bool:
    rd = a.read
    if v == active_start:
        return False
    n = rd(0)
    t = rd(v)
    if mode == STRICT:
        return 1 <= rd(t) <= n
    end = n + rd(n + 1) + 2
    if t == v:
        return True
    if n + 2 <= t < end:
        return rd(t) <= n
    return end < t <= end + n


def min_out_degree(a: WordArray) -> int:
    A = a.words
    n, L = A[0], A[A[0] + 1]
    end = n + L + 2
    return min((A[v + 1] if v < n else end) - A[v] for v in range(1, n + 1))


def _traverse(a, start, hooks, strict, explore, observer) -> None:
    rd, wr = a.read, a.write
    n = rd(0)
    L = rd(n + 1)
    end = n + L + 2
    if start is not None:
        s = find_start(a, start)
        _component(a, start, s, n, L, hooks, strict, explore, observer)
        return
    pc = n + 1
    for v in range(1, n + 1):
        t = rd(v)
        if t == v:
            _component(a, v, 0, n, L, hooks, strict, explore, observer)
            continue
        if t == end:
            continue  # degree zero, already visited
        pc += 1
        while rd(pc) > n:
            pc += 1
        if strict:
            white = rd(t) <= n
        elif n + 2 <= t < end:
            white = rd(t) <= n
        else:
            white = end < t <= end + n
        if white:
            _component(a, v, pc, n, L, hooks, strict, explore, observer)


def _component(a, vs, s, n, L, hooks, strict, explore, observer) -> None:
    """Explore everything reachable from ``vs`` (array start ``s``, 0 for degree zero)."""
    rd, wr = a.read, a.write
    end = n + L + 2
    off = 1 if strict else n + L + 1
    pre, post = hooks.preprocess, hooks.postprocess
    pre_exp, post_exp = hooks.preexplore, hooks.postexplore

    if s == 0:
        pre(vs)
        post(vs)
        wr(vs, end)
        return

    def first_loc(u: int) -> int:
        # cell currently holding the first adjacency value of gray vertex u
        if u == vs:
            return u
        t = rd(u)
        while t <= n:
            if t == vs:
                return _REG
            t = rd(t)
        return t

    def key(x: int) -> int:
        return rd(x) if x < end else x - end

    last = 0  # vertex most recently left through a follow or a chain start
    fresh = False  # no backtrack happened since then

    def parent_of(slot: int) -> int:
        # the first backtrack after a follow returns to the vertex followed from
        nonlocal fresh
        if fresh:
            fresh = False
            return last
        r = slot - 1
        while rd(r) > n:
            r -= 1
        return rd(r)

    stash = 0
    cur = vs
    y = succ = pbar = qs = 0
    p = 0
    pre(vs)
    if s + 1 == end or rd(s + 1) <= n:
        # degree-one start: its single value stays in T[vs]; first values found
        # at the end of its chain go to the stash register
        y, qs, pbar = vs, rd(vs), _REG
        act = _CHAIN
    else:
        act = _ENTER

    while True:
        if act == _SCAN:
            val = rd(p)
            if val < end:
                v = rd(val)
                if explore:
                    pre_exp(cur, v)
                t = rd(v)
                if v == vs:
                    white = False
                elif strict:
                    white = rd(t) <= n
                elif n + 2 <= t < end:
                    white = rd(t) <= n
                else:
                    white = end < t <= end + n
                if not white:
                    if explore:
                        post_exp(cur, v)
                    p += 1
                    act = _NEXT
                    continue
                if not strict and (val + 1 == end or rd(val + 1) <= n):
                    # white degree-one vertex: start a chain from slot p
                    wr(v, p)
                    pre(v)
                    last, fresh = cur, True
                    y, qs, pbar = v, t, p
                    act = _CHAIN
                    continue
                if observer:
                    observer("follow:before", a, vs)
                wr(p, t)
                wr(v, p)
                pre(v)
                last, fresh = cur, True
                if observer:
                    observer("follow:after", a, vs)
                cur = v
                s = val
                act = _ENTER
                continue
            if strict or val == end or val > end + n:
                raise CorruptionError(p, val, "adjacency entry outside every value band")
            x = val - end
            if explore:
                pre_exp(cur, x)
            if rd(x) == x:
                pre(x)
                post(x)
                wr(x, end)
                if observer:
                    observer("visit0", a, vs)
            if explore:
                post_exp(cur, x)
            p += 1
            act = _NEXT

        elif act == _NEXT:
            u = rd(p - 2)
            if u <= n:
                # two cells after the start of u: undo the entry exchange once
                s = p - 2
                fl = first_loc(u)
                fv = stash if fl == _REG else rd(fl)
                sv = rd(s + 1)
                if (fv > sv) if strict else (key(fv) > key(sv)):
                    if fl == _REG:
                        stash = sv
                    else:
                        wr(fl, sv)
                    wr(s + 1, fv)
                    p = s + 1
                    act = _SCAN
                    continue
            if p >= end or rd(p) <= n:
                q = p - 1
                while rd(q) > n:
                    q -= 1
                p = q
                act = _BACKTRACK
            else:
                act = _SCAN

        elif act == _ENTER:
            # first entry: exchange first and second value, scan from the second cell
            fl = first_loc(cur)
            fv = stash if fl == _REG else rd(fl)
            sv = rd(s + 1)
            if fl == _REG:
                stash = sv
            else:
                wr(fl, sv)
            wr(s + 1, fv)
            p = s + 1
            act = _SCAN

        elif act == _BACKTRACK:
            q = p
            v = rd(q)
            if v == vs:
                act = _FINISH
                continue
            t = rd(v)
            if t > n:
                if observer:
                    observer("backtrack:before", a, vs)
                x = rd(t)
                wr(v, x + off)
                wr(t, q)
                post(v)
                if observer:
                    observer("backtrack:after", a, vs)
                if explore:
                    cur = parent_of(t)
                    post_exp(cur, v)
                p = t + 1
                act = _NEXT
            else:
                # reached through a degree-one chain
                fl = first_loc(v)
                x = stash if fl == _REG else rd(fl)
                wr(v, x + off)
                post(v)
                y, succ = t, v
                act = _UNWIND

        elif act == _CHAIN:
            # y: gray degree-one vertex whose single value is qs
            if qs > end:
                x = qs - end
                if explore:
                    pre_exp(y, x)
                if rd(x) == x:
                    pre(x)
                    post(x)
                    wr(x, end)
                succ = x
                act = _UNWIND
                continue
            v = rd(qs)
            if explore:
                pre_exp(y, v)
            t = rd(v)
            if v == vs:
                white = False
            elif n + 2 <= t < end:
                white = rd(t) <= n
            else:
                white = t == v or end < t <= end + n
            if not white:
                succ = v
                act = _UNWIND
                continue
            wr(v, y)
            pre(v)
            if qs + 1 == end or rd(qs + 1) <= n:
                y, qs = v, t
                continue
            # degree >= 2: its first value goes to the chain's departure slot
            if pbar == _REG:
                stash = t
            else:
                wr(pbar, t)
            cur = v
            s = qs
            act = _ENTER

        elif act == _UNWIND:
            # finish chain members back to the vertex the chain left from
            while True:
                if explore:
                    post_exp(y, succ)
                if y == vs:
                    act = _FINISH
                    break
                t = rd(y)
                wr(y, succ)
                post(y)
                if observer:
                    observer("unwind", a, vs)
                if t > n:
                    wr(t, y + end)
                    if explore:
                        cur = parent_of(t)
                        post_exp(cur, y)
                    p = t + 1
                    act = _NEXT
                    break
                succ, y = y, t

        else:  # _FINISH
            t = rd(vs)
            wr(vs, t + off)
            post(vs)
            if observer:
                observer("finish", a, vs)
            return


def restore_after_dfs(a: WordArray, mode: str = BANDED, regs: RegisterFile | None = None) -> None:
    """Undo done-marks and degree-zero sentinels, then rebuild the sorted standard array."""
    regs = regs or RegisterFile()
    rd, wr = a.read, a.write
    with regs.claim(6):
        n = rd(0)
        L = rd(n + 1)
        end = n + L + 2
        if mode == STRICT:
            for v in range(1, n + 1):
                t = rd(v)
                if rd(t) > n:
                    wr(v, t - 1)
        else:
            off = n + L + 1
            for v in range(1, n + 1):
                t = rd(v)
                if t == end:
                    wr(v, v)
                elif t > end + n:
                    wr(v, t - off)
    restore_sorted_standard(a, regs, swapped=True)


def _prepare(a: WordArray, start: int | None, mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    rep = detect(a)
    if rep is not Rep.SORTED_STANDARD:
        raise DfsError(f"dfs expects the sorted standard representation, found {rep.value}")
    n = a.words[0]
    L = a.words[n + 1]
    if a.width < required_width(n, L):
        raise DfsError(f"width {a.width} lacks the two slack bits: need {required_width(n, L)}")
    if start is not None and not 1 <= start <= n:
        raise IndexError(f"start vertex {start} outside 1..{n}")
    if mode == STRICT and min_out_degree(a) < 2:
        raise StrictModeError("strict mode requires every vertex to have (out-)degree >= 2")


def _run(a, start, hooks, mode, explore, regs, observer):
    _prepare(a, start, mode)
    regs = regs or RegisterFile()
    recorder = None
    if hooks is None:
        hooks = recorder = EventRecorder()
    to_begin_pointer(a, mode, regs)
    _swap(a, regs)
    with regs.claim(DFS_REGISTERS):
        _traverse(a, start, hooks, mode == STRICT, explore, observer)
    restore_after_dfs(a, mode, regs)
    return recorder.events if recorder is not None else None


def dfs_run(
    a: WordArray,
    start: int | None = None,
    hooks: DfsHooks | None = None,
    *,
    mode: str = BANDED,
    regs: RegisterFile | None = None,
    observer: Observer | None = None,
):
    """In-place DFS over a sorted standard array; the array is restored afterwards.

    With ``start=None`` every component is explored, roots taken in ascending
    order.  Without ``hooks`` the ``("pre", v)`` / ``("post", v)`` events are
    returned as a list; with hooks they are delivered to the hooks and
    ``None`` is returned.
    """
    return _run(a, start, hooks, mode, False, regs, observer)


def dfs_run_explore(
    a: WordArray,
    start: int | None = None,
    hooks: DfsHooks | None = None,
    *,
    mode: str = BANDED,
    regs: RegisterFile | None = None,
    observer: Observer | None = None,
):
    """Like :func:`dfs_run` but also reports ``preexp``/``postexp`` edge events.

    The parent of a finished vertex is recovered by scanning back to the
    start of the parent's array, so the worst case is O(n(n + m)).
    """
    return _run(a, start, hooks, mode, True, regs, observer)
