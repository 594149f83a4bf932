"""Instrumented word-RAM memory and the register budget every in-place routine runs under.

All graph algorithms in this package operate on a single :class:`WordArray`.
Reads and writes go through :meth:`WordArray.read` / :meth:`WordArray.write`,
which count accesses.  Algorithm-local state is accounted cooperatively in a
:class:`RegisterFile`: a routine claims the number of words it keeps live and
the file records the peak.  Claiming more than the budget fails the run.
"""
from __future__ import annotations

import hashlib
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, TypeVar

DEFAULT_BUDGET = 64

T = TypeVar("T")


class RamError(Exception):
    """Base class for errors raised by the word-RAM harness."""


class BoundsError(RamError, IndexError):
    pass


class WordOverflowError(RamError, ValueError):
    """A value does not fit into a word of the array's width."""


class BudgetExceeded(RamError):
    def __init__(self, peak: int, budget: int):
        super().__init__(f"register budget exceeded: peak {peak} words > budget {budget}")
        self.peak = peak
        self.budget = budget


@dataclass(frozen=True)
class AccessStats:
    reads: int = 0
    writes: int = 0
    peak_registers: int = 0

    @property
    def accesses(self) -> int:
        return self.reads + self.writes


@dataclass(frozen=True)
class Digest:
    checksum: str

    def __str__(self) -> str:
        return self.checksum


class WordArray:
    """A fixed-length sequence of unsigned ``width``-bit words.

    ``reads`` and ``writes`` count every access made through :meth:`read` and
    :meth:`write`.  Tooling that sits outside the in-place contract (builders,
    validators, snapshots) uses :attr:`words` directly and is not counted.
    """

    __slots__ = ("width", "words", "reads", "writes", "_n", "_max")

    def __init__(self, words: Iterable[int], width: int = 64):
        if not 8 <= width <= 64:
            raise ValueError(f"word width must be in [8, 64], got {width}")
        self.width = width
        self.words = [int(x) for x in words]
        self._n = len(self.words)
        self._max = (1 << width) - 1
        for i, x in enumerate(self.words):
            if x < 0 or x > self._max:
                raise WordOverflowError(f"value {x} at index {i} does not fit in {width} bits")
        self.reads = 0
        self.writes = 0

    @classmethod
    def zeros(cls, n: int, width: int = 64) -> "WordArray":
        return cls([0] * n, width)

    def __len__(self) -> int:
        return self._n

    def __repr__(self) -> str:
        head = self.words[:12]
        more = ", ..." if self._n > 12 else ""
        return f"WordArray(w={self.width}, N={self._n}, [{', '.join(map(str, head))}{more}])"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WordArray):
            return NotImplemented
        return self.width == other.width and self.words == other.words

    __hash__ = None  # type: ignore[assignment]

    @property
    def max_value(self) -> int:
        return self._max

    def read(self, i: int) -> int:
        self.reads += 1
        if 0 <= i < self._n:
            return self.words[i]
        raise BoundsError(f"read index {i} out of bounds for N={self._n}")

    def write(self, i: int, v: int) -> None:
        self.writes += 1
        if not 0 <= i < self._n:
            raise BoundsError(f"write index {i} out of bounds for N={self._n}")
        if v < 0 or v > self._max:
            raise WordOverflowError(f"value {v} does not fit in {self.width} bits (index {i})")
        self.words[i] = v

    def copy(self) -> "WordArray":
        return WordArray(self.words, self.width)

    def reset_stats(self) -> None:
        self.reads = 0
        self.writes = 0

    def stats(self) -> AccessStats:
        return AccessStats(self.reads, self.writes)


def snapshot(a: WordArray) -> Digest:
    """Fingerprint of ``(width, words)``; equal digests are the restore test."""
    h = hashlib.blake2b(digest_size=16)
    h.update(a.width.to_bytes(1, "little"))
    h.update(len(a).to_bytes(8, "little"))
    nbytes = (a.width + 7) // 8
    h.update(b"".join(x.to_bytes(nbytes, "little") for x in a.words))
    return Digest(h.hexdigest())


class RegisterFile:
    """Cooperative accounting of algorithm-local words.

    Routines wrap their body in ``with regs.claim(k):`` where ``k`` is the
    number of words they keep live.  Nested claims add up.  Scratch buffers
    obtained from :meth:`scratch` count their full length.
    """

    def __init__(self, budget: int = DEFAULT_BUDGET):
        if budget < 1:
            raise ValueError("budget must be >= 1")
        self.budget = budget
        self.live = 0
        self.peak = 0

    def _take(self, k: int) -> None:
        self.live += k
        if self.live > self.peak:
            self.peak = self.live
        if self.live > self.budget:
            peak = self.live
            self.live -= k
            raise BudgetExceeded(peak, self.budget)

    def acquire(self, k: int) -> None:
        """Claim ``k`` words until a matching :meth:`release`."""
        self._take(k)

    def release(self, k: int) -> None:
        if k > self.live:
            raise RamError(f"releasing {k} words but only {self.live} are live")
        self.live -= k

    @contextmanager
    def claim(self, k: int) -> Iterator[None]:
        self._take(k)
        try:
            yield
        finally:
            self.live -= k

    @contextmanager
    def scratch(self, nwords: int, width: int = 64) -> Iterator[WordArray]:
        self._take(nwords)
        try:
            yield WordArray.zeros(nwords, width)
        finally:
            self.live -= nwords


def run_budgeted(
    budget: int,
    computation: Callable[[RegisterFile], T],
    array: WordArray | None = None,
) -> tuple[T, AccessStats]:
    """Run ``computation(regs)`` under a register budget.

    When ``array`` is given the returned stats carry the reads and writes the
    computation made on it.
    """
    regs = RegisterFile(budget)
    r0 = w0 = 0
    if array is not None:
        r0, w0 = array.reads, array.writes
    result = computation(regs)
    reads = writes = 0
    if array is not None:
        reads, writes = array.reads - r0, array.writes - w0
    return result, AccessStats(reads, writes, regs.peak)
