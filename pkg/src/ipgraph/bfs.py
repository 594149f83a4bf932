"""In-place BFS in rounds over the sorted standard representation.

The table ``T`` is packed for the duration of the run (see
:mod:`ipgraph.packing`) and a four-color choice dictionary lives in the freed
bits.  Round ``z`` repeatedly takes a vertex of the frontier color, reports
``(v, z)``, gives its white neighbours the other frontier color and turns it
black.  The two frontier colors swap between rounds; the search ends after a
round that discovered nothing.  Unpacking the table restores the input.
"""
from __future__ import annotations

from typing import Callable

from .graph import required_width
from .packing import BLACK, DARK, LIGHT, WHITE, ChoiceDictionary, PackedTable, pack_or_fallback, read_packed, unpack
from .ram import RegisterFile, WordArray
from .representations import Rep, detect

# v, u, j, lo, hi, z, frontier, next color, discovered flag, n, L, end, root,
# plus one cursor per color
BFS_REGISTERS = 17

Sink = Callable[..., None]


class BfsError(Exception):
    pass


def _bounds(t: PackedTable, v: int, n: int, end: int) -> tuple[int, int]:
    lo = read_packed(t, v)
    hi = read_packed(t, v + 1) if v < n else end
    return lo, hi


def _rounds(a: WordArray, t: PackedTable, d: ChoiceDictionary, vs: int, emit) -> None:
    rd = a.read
    n = t.n
    end = n + rd(n + 1) + 2
    d.set_color(vs, LIGHT)
    z = 0
    cur, nxt = LIGHT, DARK
    while True:
        d.reset_cursor(cur)
        found = False
        v = d.choice(cur)
        while v:
            emit(v, z)
            lo, hi = _bounds(t, v, n, end)
            for j in range(lo, hi):
                u = rd(j)
                if d.color(u) == WHITE:
                    d.set_color(u, nxt)
                    found = True
            d.set_color(v, BLACK)
            v = d.choice(cur)
        if not found:
            return
        z += 1
        cur, nxt = nxt, cur


def _prepare(a: WordArray, vs: int | None) -> int:
    rep = detect(a)
    if rep is not Rep.SORTED_STANDARD:
        raise BfsError(f"bfs expects the sorted standard representation, found {rep.value}")
    n = a.words[0]
    if a.width < required_width(n, a.words[n + 1]):
        raise BfsError(f"width {a.width} is below the required {required_width(n, a.words[n + 1])}")
    if vs is not None and not 1 <= vs <= n:
        raise IndexError(f"start vertex {vs} outside 1..{n}")
    return n


def _run(a, vs, sink, regs, all_components):
    n = _prepare(a, vs)
    regs = regs or RegisterFile()
    out = None
    if sink is None:
        out = []
        sink = lambda *rec: out.append(rec)  # noqa: E731
    t = pack_or_fallback(a, regs, ChoiceDictionary.size_bits(n, a.width))
    try:
        with regs.claim(BFS_REGISTERS + (t.footer_words if t.packed else 0)):
            d = ChoiceDictionary(t.free_region(), t.free_start, n)
            if not all_components:
                _rounds(a, t, d, vs, sink)
            else:
                d.reset_cursor(WHITE)
                r = d.choice(WHITE)
                while r:
                    _rounds(a, t, d, r, lambda v, z: sink(v, z, r))
                    r = d.choice(WHITE)
    finally:
        unpack(t, regs)
    return out


def bfs_run(a: WordArray, vs: int, sink: Sink | None = None, *, regs: RegisterFile | None = None):
    """BFS from ``vs``; the array is restored afterwards.

    Records ``(v, dist)`` go to ``sink(v, dist)`` or, without a sink, are
    returned as a list.  Within a round vertices come in ascending order.
    """
    return _run(a, vs, sink, regs, False)


def bfs_all_components(a: WordArray, sink: Sink | None = None, *, regs: RegisterFile | None = None):
    """BFS from every vertex not reached before, in ascending order; records are ``(v, dist, root)``."""
    return _run(a, None, sink, regs, True)
