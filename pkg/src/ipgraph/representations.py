"""In-place, linear-time conversions between the adjacency-array representations.

* sorted standard: adjacency cells hold vertex names.
* begin-pointer: adjacency cells hold the start index of the named vertex's
  array; a degree-zero vertex ``x`` has ``T[x] = x``.
* swapped begin-pointer: additionally, the first cell of every non-empty
  array holds the owner's name and the value it displaced sits in ``T``.

References to a degree-zero vertex ``x`` cannot be pointers.  In ``banded``
mode they are stored as ``x + (n + L + 2)`` (the *deg0ref* band); in
``strict`` mode the plain name is kept.  All routines only use O(1) words
besides the array.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .ram import RegisterFile, WordArray

BANDED = "banded"
STRICT = "strict"
MODES = (BANDED, STRICT)

# registers held by each transformation (loop index, two scratch values, n, L, end)
_TRANSFORM_REGS = 6


class RepresentationError(Exception):
    pass


class CorruptionError(RepresentationError):
    def __init__(self, index: int, value: int, what: str = ""):
        msg = f"corrupt cell A[{index}] = {value}"
        super().__init__(f"{msg}: {what}" if what else msg)
        self.index = index
        self.value = value


class Rep(enum.Enum):
    SORTED_STANDARD = "sorted-standard"
    BEGIN_POINTER = "begin-pointer"
    SWAPPED_BEGIN_POINTER = "swapped-begin-pointer"
    SHIFTED = "shifted"


@dataclass(frozen=True)
class ValueBands:
    """Disjoint value ranges that a T or adjacency cell may hold during a traversal."""

    n: int
    L: int

    @property
    def end(self) -> int:
        return self.n + self.L + 2

    @property
    def done_offset(self) -> int:
        return self.n + self.L + 1

    @property
    def names(self) -> range:
        return range(1, self.n + 1)

    @property
    def positions(self) -> range:
        return range(self.n + 2, self.n + self.L + 2)

    @property
    def sentinel(self) -> int:
        return self.end

    @property
    def deg0ref(self) -> range:
        return range(self.end + 1, self.end + self.n + 1)

    @property
    def done_pos(self) -> range:
        off = self.done_offset
        return range(self.n + 2 + off, self.n + self.L + 2 + off)

    @property
    def done_d0(self) -> range:
        off = self.done_offset
        return range(self.end + 1 + off, self.end + self.n + 1 + off)

    @property
    def max_value(self) -> int:
        return 3 * self.n + 2 * self.L + 3

    def bands(self) -> dict[str, range]:
        return {
            "names": self.names,
            "positions": self.positions,
            "sentinel": range(self.sentinel, self.sentinel + 1),
            "deg0ref": self.deg0ref,
            "donePos": self.done_pos,
            "doneD0": self.done_d0,
        }

    def classify(self, x: int) -> str | None:
        for name, r in self.bands().items():
            if x in r:
                return name
        return None


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def detect(a: WordArray) -> Rep:
    """Identify the representation from O(1) cells (no full validation)."""
    A = a.words
    n = A[0]
    L = A[n + 1]
    t1 = A[1]
    if L == 0:
        return Rep.SORTED_STANDARD if t1 == n + 2 else Rep.BEGIN_POINTER
    c = A[n + 2]
    if t1 == n + 2:
        if c > n or A[c] == c:
            return Rep.BEGIN_POINTER
        return Rep.SORTED_STANDARD
    if 1 <= c <= n and A[c] != c:
        return Rep.SWAPPED_BEGIN_POINTER
    return Rep.BEGIN_POINTER


def _expect(a: WordArray, *reps: Rep) -> None:
    got = detect(a)
    if got not in reps:
        want = " or ".join(r.value for r in reps)
        raise RepresentationError(f"expected {want} representation, found {got.value}")


def to_begin_pointer(a: WordArray, mode: str = BANDED, regs: RegisterFile | None = None) -> None:
    """Replace every adjacency name by the start of that vertex's array."""
    _check_mode(mode)
    _expect(a, Rep.SORTED_STANDARD)
    regs = regs or RegisterFile()
    rd, wr = a.read, a.write
    with regs.claim(_TRANSFORM_REGS):
        n = rd(0)
        L = rd(n + 1)
        end = n + L + 2
        for i in range(n + 2, end):
            x = rd(i)
            t = rd(x)
            nxt = rd(x + 1) if x < n else end
            if t != nxt:
                wr(i, t)
            elif mode == BANDED:
                wr(i, x + end)
        for v in range(1, n + 1):
            nxt = rd(v + 1) if v < n else end
            if rd(v) == nxt:
                wr(v, v)


def swap_representation(a: WordArray, regs: RegisterFile | None = None) -> None:
    """Move each vertex's first adjacency value into ``T`` and its name into the first cell."""
    _expect(a, Rep.BEGIN_POINTER)
    _swap(a, regs or RegisterFile())


def _swap(a: WordArray, regs: RegisterFile) -> None:
    rd, wr = a.read, a.write
    with regs.claim(_TRANSFORM_REGS):
        n = rd(0)
        for v in range(1, n + 1):
            p = rd(v)
            if p != v:
                wr(v, rd(p))
                wr(p, v)


def unswap_representation(a: WordArray, regs: RegisterFile | None = None) -> None:
    """Inverse of :func:`swap_representation`."""
    if a.words[a.words[0] + 1] == 0:
        return  # without edges both forms coincide
    _expect(a, Rep.SWAPPED_BEGIN_POINTER)
    rd, wr = a.read, a.write
    with (regs or RegisterFile()).claim(_TRANSFORM_REGS):
        n = rd(0)
        end = n + rd(n + 1) + 2
        for i in range(n + 2, end):
            x = rd(i)
            if 1 <= x <= n:
                t = rd(x)
                if t != x:
                    wr(i, t)
                    wr(x, i)


def restore_sorted_standard(a: WordArray, regs: RegisterFile | None = None, *, swapped: bool | None = None) -> None:
    """Return a (swapped) begin-pointer array to the sorted standard representation.

    Accepted cell contents beyond the plain representations: ``T`` entries
    that already hold a vertex name (the name of the first neighbour),
    adjacency entries in the deg0ref band (``x + n + L + 2`` naming ``x``)
    and, in strict arrays, plain names referring to degree-zero vertices.
    """
    regs = regs or RegisterFile()
    if swapped is None:
        rep = detect(a)
        if rep is Rep.SORTED_STANDARD:
            raise RepresentationError("array is already in sorted standard representation")
        swapped = rep is Rep.SWAPPED_BEGIN_POINTER
    if not swapped:
        _swap(a, regs)
    rd, wr = a.read, a.write
    with regs.claim(_TRANSFORM_REGS):
        n = rd(0)
        L = rd(n + 1)
        end = n + L + 2
        top = end + n  # last deg0ref value
        # T entries -> first-neighbour names (degree-zero vertices keep T[v] = v)
        for v in range(1, n + 1):
            t = rd(v)
            if t <= n:
                if t < 1:
                    raise CorruptionError(v, t, "T entry is zero")
            elif t < end:
                x = rd(t)
                if not 1 <= x <= n:
                    raise CorruptionError(v, t, f"T points at A[{t}] = {x}, not an array start")
                wr(v, x)
            elif end < t <= top:
                wr(v, t - end)
            else:
                raise CorruptionError(v, t, "T entry outside every value band")
        # non-start adjacency cells -> deg0ref-band names; starts keep the owner's name
        for i in range(n + 2, end):
            x = rd(i)
            if x <= n:
                if x < 1:
                    raise CorruptionError(i, x)
                if rd(x) == x:
                    wr(i, x + end)
            elif x < end:
                y = rd(x)
                if not 1 <= y <= n:
                    raise CorruptionError(i, x, f"points at A[{x}] = {y}, not an array start")
                wr(i, y + end)
            elif not end < x <= top:
                raise CorruptionError(i, x, "adjacency entry outside every value band")
        # unswap and decode in one left-to-right pass
        for i in range(n + 2, end):
            x = rd(i)
            if x <= n:
                wr(i, rd(x))
                wr(x, i)
            else:
                wr(i, x - end)
        # degree-zero vertices take the next array start; backward pass
        nxt = end
        for v in range(n, 0, -1):
            t = rd(v)
            if t <= n:
                wr(v, nxt)
            else:
                nxt = t
