"""Bit-packing of a sorted table to free space in place, and a choice dictionary in the freed bits.

A non-decreasing table of ``n`` words with ``w`` bits each is cut into
``2**c'`` regions by the top ``c' = c + 1`` bits of its values.  Only the low
``w - c'`` bits of every entry are stored, back to back from bit 0 of the
table; the region boundaries go into a footer of ``2**c'`` entries at the end
of the table.  An entry is one word, or ``k`` words when ``n + 1`` does not fit
into ``w`` bits.  What lies between the packed fields and the footer is free:

    | packed fields | free bits | footer |
    0          n(w-c')  (n-2^c'k)w      nw

Bits are little-endian inside each word and word ``k`` of the table covers
bits ``[k*w, (k+1)*w)``.  The freed area has room for at least ``c * n``
bits whenever ``n >= 2**(c+1) * k * w``; smaller tables are left untouched and the
caller gets the free bits from a scratch buffer instead (see
:func:`pack_or_fallback`).
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from typing import Optional

from .ram import RegisterFile, WordArray
from .representations import CorruptionError

DEFAULT_C = 3

WHITE, LIGHT, DARK, BLACK = 0, 1, 2, 3
COLOR_NAMES = ("white", "light-gray", "dark-gray", "black")

_PACK_REGS = 6  # loop index, value, bit position, word, two temporaries


class PackingUnavailable(Exception):
    """The table is too small for in-place packing; use a scratch buffer."""

    def __init__(self, n: int, w: int, c: int):
        super().__init__(f"packing needs n >= 2^(c+1)*w = {(1 << (c + 1)) * w}, got n={n} (w={w}, c={c})")
        self.n, self.w, self.c = n, w, c


def entry_words(n: int, w: int) -> int:
    """Words per footer entry: enough for the index ``n + 1``."""
    return -(-(n + 1).bit_length() // w)


def min_table_size(w: int, c: int = DEFAULT_C) -> int:
    """Smallest packable table when indices fit in one word."""
    return (1 << (c + 1)) * w


def packable(n: int, w: int, c: int = DEFAULT_C) -> bool:
    return n >= min_table_size(w, c) * entry_words(n, w)


def freed_bits(n: int, w: int, c: int = DEFAULT_C) -> int:
    """Size of the free area left by :func:`pack`."""
    cp = c + 1
    return cp * n - (1 << cp) * entry_words(n, w) * w


class BitRegion:
    """Counted bit-level access to ``words`` consecutive words of a WordArray."""

    __slots__ = ("a", "base", "w", "nbits")

    def __init__(self, a: WordArray, base: int, nwords: int):
        self.a = a
        self.base = base
        self.w = a.width
        self.nbits = nwords * a.width

    def get(self, pos: int, k: int) -> int:
        # k <= w, so a field touches at most two words
        if pos < 0 or pos + k > self.nbits:
            raise IndexError(f"bit range [{pos}, {pos + k}) outside region of {self.nbits} bits")
        w = self.w
        j, off = divmod(pos, w)
        x = self.a.read(self.base + j) >> off
        if off + k > w:
            x |= self.a.read(self.base + j + 1) << (w - off)
        return x & ((1 << k) - 1)

    def set(self, pos: int, k: int, val: int) -> None:
        if pos < 0 or pos + k > self.nbits:
            raise IndexError(f"bit range [{pos}, {pos + k}) outside region of {self.nbits} bits")
        w = self.w
        full = (1 << w) - 1
        j, off = divmod(pos, w)
        lo = min(k, w - off)
        m = ((1 << lo) - 1) << off
        i = self.base + j
        old = self.a.read(i)
        self.a.write(i, (old & ~m & full) | ((val << off) & m))
        if lo < k:
            m2 = (1 << (k - lo)) - 1
            old = self.a.read(i + 1)
            self.a.write(i + 1, (old & ~m2 & full) | ((val >> lo) & m2))

    def clear(self, pos: int, k: int) -> None:
        """Zero ``k`` bits starting at ``pos`` (any length)."""
        w = self.w
        while k > 0:
            step = min(k, w - pos % w)
            self.set(pos, step, 0)
            pos += step
            k -= step


@dataclass
class PackedTable:
    """Handle for a packed table.  ``starts`` mirrors the footer and lives in registers."""

    a: WordArray
    offset: int
    n: int
    c: int
    starts: tuple = ()
    scratch: Optional[WordArray] = None
    packed: bool = True
    _bits: BitRegion = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self._bits = BitRegion(self.a, self.offset, self.n)

    @property
    def w(self) -> int:
        return self.a.width

    @property
    def c_prime(self) -> int:
        return self.c + 1

    @property
    def field_width(self) -> int:
        return self.w - self.c_prime

    @property
    def footer_words(self) -> int:
        return (1 << self.c_prime) * entry_words(self.n, self.w)

    @property
    def free_start(self) -> int:
        """First free bit, relative to the region (or scratch) base."""
        return self.n * self.field_width if self.packed else 0

    @property
    def free_bits(self) -> int:
        if not self.packed:
            return len(self.scratch) * self.scratch.width
        return (self.n - self.footer_words) * self.w - self.free_start

    def free_region(self) -> BitRegion:
        if self.packed:
            return self._bits
        return BitRegion(self.scratch, 0, len(self.scratch))

    def read(self, i: int) -> int:
        return read_packed(self, i)


def pack(a: WordArray, c: int = DEFAULT_C, offset: int = 1, n: int | None = None,
         regs: RegisterFile | None = None) -> PackedTable:
    """Pack the non-decreasing table ``a[offset : offset + n]`` in place.

    ``n`` defaults to ``a[0]`` (the vertex count of a graph array).  Raises
    :class:`PackingUnavailable` when ``n < 2**(c+1) * w``.
    """
    regs = regs or RegisterFile()
    rd = a.read
    if n is None:
        n = rd(0)
    w = a.width
    cp = c + 1
    if c < 1 or cp >= w:
        raise ValueError(f"need 1 <= c < w - 1, got c={c}, w={w}")
    if not packable(n, w, c):
        raise PackingUnavailable(n, w, c)
    nf = 1 << cp
    k = entry_words(n, w)
    full = (1 << w) - 1
    fw = w - cp
    fmask = (1 << fw) - 1
    bits = BitRegion(a, offset, n)
    with regs.claim(_PACK_REGS + nf * k):
        starts = [n + 1] * nf
        starts[0] = 1
        t = 1  # next prefix whose start is still unknown
        prev = 0
        for i in range(1, n + 1):
            x = rd(offset + i - 1)
            if x < prev:
                raise ValueError(f"table is not non-decreasing at index {i}")
            prev = x
            top = x >> fw
            while t <= top:
                starts[t] = i
                t += 1
            bits.set((i - 1) * fw, fw, x & fmask)
        lo = n * fw
        bits.clear(lo, (n - nf * k) * w - lo)
        base = offset + n - nf * k
        for t in range(nf):
            x = cp if t == 0 else starts[t]
            for j in range(k):
                a.write(base + t * k + j, (x >> (j * w)) & full)
    return PackedTable(a, offset, n, c, tuple(starts))


def pack_or_fallback(a: WordArray, regs: RegisterFile, need_bits: int, c: int = DEFAULT_C,
                     offset: int = 1, n: int | None = None) -> PackedTable:
    """Pack when possible; otherwise leave the table alone and hand out scratch bits.

    The scratch buffer is claimed from ``regs`` and given back by
    :func:`unpack`.  Its size is bounded by a
    constant for a fixed ``w`` since it is only used when ``n < 2**(c+1)*w``.
    """
    if n is None:
        n = a.read(0)
    try:
        return pack(a, c, offset, n, regs)
    except PackingUnavailable:
        nwords = max(1, -(-need_bits // a.width))
        regs.acquire(nwords)
        return PackedTable(a, offset, n, c, packed=False, scratch=WordArray.zeros(nwords, a.width))


def read_packed(t: PackedTable, i: int) -> int:
    """Original value of entry ``i`` (1-based) in O(1) word accesses."""
    if not 1 <= i <= t.n:
        raise IndexError(f"packed read index {i} outside 1..{t.n}")
    if not t.packed:
        return t.a.read(t.offset + i - 1)
    fw = t.field_width
    top = bisect_right(t.starts, i) - 1
    return (top << fw) | t._bits.get((i - 1) * fw, fw)


def read_footer(t: PackedTable) -> tuple:
    """Load and validate the footer from the array."""
    a = t.a
    w = t.w
    k = entry_words(t.n, w)
    base = t.offset + t.n - t.footer_words

    def entry(e: int) -> int:
        return sum(a.read(base + e * k + j) << (j * w) for j in range(k))

    cp = entry(0)
    if cp != t.c_prime:
        raise CorruptionError(base, cp, f"footer should hold c' = {t.c_prime}")
    starts = [1]
    for e in range(1, 1 << t.c_prime):
        s = entry(e)
        if not starts[-1] <= s <= t.n + 1:
            raise CorruptionError(base + e * k, s, "footer region starts must be non-decreasing within 1..n+1")
        starts.append(s)
    return tuple(starts)


def unpack(t: PackedTable, regs: RegisterFile | None = None) -> None:
    """Write every original value back, last entry first."""
    if not t.packed:
        if t.scratch is not None and regs is not None:
            regs.release(len(t.scratch))
        t.scratch = None
        return
    regs = regs or RegisterFile()
    with regs.claim(_PACK_REGS + t.footer_words):
        starts = read_footer(t)
        fw = t.field_width
        bits = t._bits
        wr = t.a.write
        top = len(starts) - 1
        for i in range(t.n, 0, -1):
            while starts[top] > i:
                top -= 1
            wr(t.offset + i - 1, (top << fw) | bits.get((i - 1) * fw, fw))


class ChoiceDictionary:
    """Four colors over ``1..n`` with 2 bits per element, living in a bit region.

    Layout from ``base``: ``n`` two-bit color fields, then one summary bit per
    block of ``w/2`` elements for light-gray, then the same for dark-gray.  A
    summary bit is set exactly when its block holds an element of that color.
    ``choice`` keeps a cursor per color and returns the smallest element of
    the color at or after the cursor, wrapping around once.
    """

    def __init__(self, bits: BitRegion, base: int, n: int, clear: bool = True):
        self.bits = bits
        self.base = base
        self.n = n
        self.w = bits.w
        self.B = self.w // 2
        self.nblocks = -(-n // self.B)
        self.sum_base = {LIGHT: base + 2 * n, DARK: base + 2 * n + self.nblocks}
        self.cursor = [1, 1, 1, 1]
        if base + self.size_bits(n, self.w) > bits.nbits:
            raise ValueError("bit region too small for the choice dictionary")
        if clear:
            bits.clear(base, self.size_bits(n, self.w))
        # q replicated into every 2-bit field of a block
        self._rep = [q * int("01" * self.B, 2) for q in range(4)]
        self._even = int("01" * self.B, 2)

    @staticmethod
    def size_bits(n: int, w: int) -> int:
        return 2 * n + 2 * -(-n // (w // 2))

    def color(self, v: int) -> int:
        if not 1 <= v <= self.n:
            raise IndexError(f"vertex {v} outside 1..{self.n}")
        return self.bits.get(self.base + 2 * (v - 1), 2)

    def _block(self, b: int) -> tuple[int, int]:
        # (bits of block b, number of fields in it)
        k = min(self.B, self.n - b * self.B)
        return self.bits.get(self.base + 2 * b * self.B, 2 * k), k

    def _matches(self, x: int, k: int, q: int) -> int:
        # one bit (at the even position) per field of x equal to q
        y = x ^ self._rep[q]
        return ~(y | (y >> 1)) & self._even & ((1 << (2 * k)) - 1)

    def set_color(self, v: int, q: int) -> None:
        if not 0 <= q <= 3:
            raise ValueError(f"color {q} outside 0..3")
        old = self.color(v)
        if old == q:
            return
        self.bits.set(self.base + 2 * (v - 1), 2, q)
        b = (v - 1) // self.B
        if old in self.sum_base:
            x, k = self._block(b)
            if not self._matches(x, k, old):
                self.bits.set(self.sum_base[old] + b, 1, 0)
        if q in self.sum_base:
            self.bits.set(self.sum_base[q] + b, 1, 1)

    def reset_cursor(self, q: int, v: int = 1) -> None:
        self.cursor[q] = v

    def _first_in_block(self, b: int, q: int, lo: int) -> int:
        # smallest element >= lo of color q inside block b, or 0
        x, k = self._block(b)
        z = self._matches(x, k, q)
        first = lo - 1 - b * self.B
        if first > 0:
            z &= ~((1 << (2 * first)) - 1)
        if not z:
            return 0
        return b * self.B + ((z & -z).bit_length() - 1) // 2 + 1

    def _next_block(self, q: int, b: int, stop: int) -> int:
        # first block in [b, stop) whose summary bit for q is set, or -1
        base = self.sum_base[q]
        w = self.w
        while b < stop:
            k = min(w, stop - b)
            s = self.bits.get(base + b, k)
            if s:
                return b + (s & -s).bit_length() - 1
            b += k
        return -1

    def _scan(self, q: int, lo: int, hi: int) -> int:
        # smallest element in [lo, hi] with color q, or 0
        if lo > hi:
            return 0
        b = (lo - 1) // self.B
        last = (hi - 1) // self.B
        while b <= last:
            if q in self.sum_base:
                b = self._next_block(q, b, last + 1)
                if b < 0:
                    return 0
            v = self._first_in_block(b, q, max(lo, b * self.B + 1))
            if v:
                return v if v <= hi else 0
            b += 1
        return 0

    def choice(self, q: int) -> int:
        """An element colored ``q``, or 0 if there is none."""
        c = self.cursor[q]
        v = self._scan(q, c, self.n) or self._scan(q, 1, c - 1)
        if v:
            self.cursor[q] = v
        return v
