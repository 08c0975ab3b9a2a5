"""Permutation value type and elementary predicates.

Positions and values are 1-based in every public function; the underlying
tuple is indexed from 0 like any other tuple.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_PLOT_SIZE = 40


class Permutation(tuple):
    """A permutation of {1, ..., n} in one-line notation.

    Behaves as an immutable tuple of ints, so equality and hashing are
    those of the value sequence.
    """

    __slots__ = ()

    def __new__(cls, values: Iterable[int]) -> "Permutation":
        t = tuple.__new__(cls, (int(v) for v in values))
        n = len(t)
        if n == 0:
            raise ValueError("a permutation must have at least one entry")
        if set(t) != set(range(1, n + 1)):
            raise ValueError(f"{tuple(t)} is not a permutation of 1..{n}")
        return t

    @classmethod
    def _trusted(cls, values: Iterable[int]) -> "Permutation":
        # Caller guarantees validity; skips the O(n) check on hot paths.
        return tuple.__new__(cls, values)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse "3142", "3,1,4,2", "3 1 4 2" or "[3,1,4,2]"."""
        s = text.strip().strip("[]()").strip()
        if not s:
            raise ValueError("empty permutation text")
        if re.fullmatch(r"\d+", s):
            if len(s) > 9:
                raise ValueError(
                    f"compact form {s!r} is ambiguous for n > 9; use commas")
            return cls(int(c) for c in s)
        parts = [x for x in re.split(r"[,\s]+", s) if x]
        if not all(re.fullmatch(r"\d+", x) for x in parts):
            raise ValueError(f"cannot parse permutation {text!r}")
        return cls(int(x) for x in parts)

    @property
    def n(self) -> int:
        return len(self)

    def at(self, i: int) -> int:
        """Value at 1-based position ``i``."""
        if not 1 <= i <= len(self):
            raise IndexError(f"position {i} out of range 1..{len(self)}")
        return tuple.__getitem__(self, i - 1)

    def position_of(self, v: int) -> int:
        """1-based position holding value ``v``."""
        if not 1 <= v <= len(self):
            raise ValueError(f"value {v} out of range 1..{len(self)}")
        return self.index(v) + 1

    def bracket(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"

    def compact(self) -> str | None:
        if len(self) > 9:
            return None
        return "".join(map(str, self))

    def display(self) -> str:
        """Bracket form, followed by the compact form when n <= 9."""
        c = self.compact()
        return self.bracket() if c is None else f"{self.bracket()} {c}"

    def sort_key(self) -> tuple:
        return (len(self), tuple(self))

    def __repr__(self) -> str:
        return f"Permutation({list(self)})"

    def __str__(self) -> str:
        return self.bracket()


def as_perm(p) -> Permutation:
    """Coerce a Permutation, a sequence of ints, or permutation text."""
    if isinstance(p, Permutation):
        return p
    if isinstance(p, str):
        return Permutation.parse(p)
    return Permutation(p)


@dataclass(frozen=True, order=True)
class BlockSpan:
    """A block at positions start .. start+length-1 (1-based)."""

    start: int
    length: int

    @property
    def stop(self) -> int:
        """Last position covered (inclusive)."""
        return self.start + self.length - 1

    def entries(self, p: Sequence[int]) -> tuple:
        return tuple(p[self.start - 1:self.stop])

    def contains_span(self, other: "BlockSpan") -> bool:
        return self.start <= other.start and other.stop <= self.stop


def standardize(seq: Sequence[int]) -> Permutation:
    """Replace each entry by its rank among the entries."""
    seq = list(seq)
    if not seq:
        raise ValueError("cannot standardize an empty sequence")
    if len(set(seq)) != len(seq):
        raise ValueError(f"entries of {seq} are not distinct")
    rank = {v: r for r, v in enumerate(sorted(seq), 1)}
    return Permutation._trusted(rank[v] for v in seq)


def inverse(p: Sequence[int]) -> Permutation:
    q = [0] * len(p)
    for i, v in enumerate(p, 1):
        q[v - 1] = i
    return Permutation._trusted(q)


def reverse(p: Sequence[int]) -> Permutation:
    return Permutation._trusted(reversed(tuple(p)))


def manhattan_distance(p: Sequence[int], i: int, j: int) -> int:
    """L1 distance between the plotted points of positions i and j."""
    n = len(p)
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"positions ({i}, {j}) out of range 1..{n}")
    return abs(i - j) + abs(p[i - 1] - p[j - 1])


def breadth(p: Sequence[int]) -> int:
    n = len(p)
    if n < 2:
        raise ValueError("breadth is undefined for n = 1")
    return min(manhattan_distance(p, i, j)
               for i in range(1, n) for j in range(i + 1, n + 1))


def is_king(p: Sequence[int]) -> bool:
    """No two adjacent positions hold adjacent values."""
    return all(abs(a - b) != 1 for a, b in zip(p, p[1:]))


def is_k_prolific(p: Sequence[int], k: int) -> bool:
    return breadth(p) >= k + 2


def _iter_blocks(p: Sequence[int], length: int | None = None):
    n = len(p)
    for s in range(n):
        lo = hi = p[s]
        for e in range(s, n):
            v = p[e]
            if v < lo:
                lo = v
            elif v > hi:
                hi = v
            size = e - s + 1
            if length is not None and size > length:
                break
            if hi - lo == e - s and (length is None or size == length):
                yield BlockSpan(s + 1, size)


def blocks(p: Sequence[int]) -> set[BlockSpan]:
    """All blocks of p, trivial ones included."""
    return set(_iter_blocks(p))


def k_blocks(p: Sequence[int], k: int) -> set[BlockSpan]:
    return set(_iter_blocks(p, k))


def _is_block(p: Sequence[int], start: int, length: int) -> bool:
    seg = p[start - 1:start - 1 + length]
    return max(seg) - min(seg) == length - 1


def strict_k_blocks(p: Sequence[int], k: int) -> set[BlockSpan]:
    """k-blocks that sit inside no (k+1)-block."""
    n = len(p)
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range 1..{n}")
    out = set()
    for b in _iter_blocks(p, k):
        left = b.start > 1 and _is_block(p, b.start - 1, k + 1)
        right = b.stop < n and _is_block(p, b.start, k + 1)
        if not (left or right):
            out.add(b)
    return out


def is_simple(p: Sequence[int]) -> bool:
    n = len(p)
    return all(b.length in (1, n) for b in _iter_blocks(p))


def ascii_plot(p: Sequence[int], marker: str = "o", blank: str = ".") -> str:
    """Grid of the plot, value n in the top row, position 1 in the left column."""
    n = len(p)
    if n > MAX_PLOT_SIZE:
        raise ValueError(f"n={n} is too large to plot (max {MAX_PLOT_SIZE})")
    rows = []
    for v in range(n, 0, -1):
        rows.append(" ".join(marker if p[i] == v else blank for i in range(n)))
    return "\n".join(rows)
