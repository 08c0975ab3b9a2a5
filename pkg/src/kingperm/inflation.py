"""Inflation of a skeleton by components and quad-block decompositions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .patterns import avoids
from .perm_core import Permutation, as_perm, standardize

P2413 = Permutation((2, 4, 1, 3))
P3142 = Permutation((3, 1, 4, 2))
QUADS = (P2413, P3142)
ONE = Permutation((1,))


@dataclass(frozen=True)
class InflationDecomposition:
    skeleton: Permutation
    components: tuple[Permutation, ...]

    @property
    def offsets(self) -> tuple[int, ...]:
        """Value offset of each component: sizes of the components whose
        skeleton value is smaller."""
        sizes = [len(c) for c in self.components]
        by_value = sorted(range(len(sizes)), key=lambda i: self.skeleton[i])
        offs = [0] * len(sizes)
        acc = 0
        for i in by_value:
            offs[i] = acc
            acc += sizes[i]
        return tuple(offs)

    def build(self) -> Permutation:
        return inflate(self.skeleton, self.components)

    def to_json(self) -> dict:
        return {
            "skeleton": list(self.skeleton),
            "components": [list(c) for c in self.components],
            "offsets": list(self.offsets),
        }


def inflate(skeleton: Sequence[int], components: Sequence[Sequence[int]]) -> Permutation:
    """Replace entry i of the skeleton by a block shaped like component i.

    The block for skeleton value v uses the values just above the total size
    of the components attached to skeleton values below v.
    """
    skeleton = as_perm(skeleton)
    comps = [as_perm(c) for c in components]
    if len(comps) != len(skeleton):
        raise ValueError(
            f"skeleton of size {len(skeleton)} needs {len(skeleton)} components, got {len(comps)}")
    offs = InflationDecomposition(skeleton, tuple(comps)).offsets
    out = []
    for c, s in zip(comps, offs):
        out.extend(s + v for v in c)
    return Permutation._trusted(out)


def _window_is_quad(p: Sequence[int], start: int) -> bool:
    # start is 0-based; window of four positions must be a block shaped as
    # 2413 or 3142
    seg = p[start:start + 4]
    if max(seg) - min(seg) != 3:
        return False
    return tuple(standardize(seg)) in QUADS


def quadblock_decompose(p: Sequence[int]) -> InflationDecomposition | None:
    """Split p into consecutive 4-blocks shaped 2413/3142, if possible."""
    n = len(p)
    if n % 4:
        return None
    for s in range(0, n, 4):
        if not _window_is_quad(p, s):
            return None
    reps = [min(p[s:s + 4]) for s in range(0, n, 4)]
    comps = tuple(standardize(p[s:s + 4]) for s in range(0, n, 4))
    return InflationDecomposition(standardize(reps), comps)


def point_quad_decompositions(p: Sequence[int]) -> Iterator[InflationDecomposition]:
    """All partitions of p into singletons and 2413/3142-shaped 4-blocks.

    Yields decompositions with the most 4-blocks first.
    """
    n = len(p)
    found: list[list[int]] = []  # lists of 0-based window starts

    def rec(pos: int, starts: list[int]):
        if pos == n:
            found.append(list(starts))
            return
        if pos + 4 <= n and _window_is_quad(p, pos):
            starts.append(pos)
            rec(pos + 4, starts)
            starts.pop()
        rec(pos + 1, starts)

    rec(0, [])
    found.sort(key=lambda s: (-len(s), s))
    for starts in found:
        spans = []
        pos = 0
        quad = set(starts)
        while pos < n:
            width = 4 if pos in quad else 1
            spans.append((pos, width))
            pos += width
        reps = [p[s] for s, _ in spans]
        comps = tuple(standardize(p[s:s + w]) for s, w in spans)
        yield InflationDecomposition(standardize(reps), comps)


def is_separable(p: Sequence[int]) -> bool:
    return avoids(p, P3142) and avoids(p, P2413)
