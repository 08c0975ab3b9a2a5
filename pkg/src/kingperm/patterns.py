"""Pattern containment and sub-pattern extraction."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .perm_core import Permutation, standardize


@dataclass(frozen=True)
class PatternOccurrence:
    positions: tuple[int, ...]  # 1-based, strictly increasing
    pattern: Permutation


def _value_windows(pat: Sequence[int]) -> list[tuple[int, int]]:
    # For each pattern index k, the indices (among 0..k-1) of the nearest
    # smaller and nearest larger pattern values; -1 when there is none.
    out = []
    for k, v in enumerate(pat):
        lo_idx = hi_idx = -1
        lo_val, hi_val = 0, len(pat) + 1
        for j in range(k):
            w = pat[j]
            if lo_val < w < v:
                lo_val, lo_idx = w, j
            elif v < w < hi_val:
                hi_val, hi_idx = w, j
        out.append((lo_idx, hi_idx))
    return out


def _embeddings(host: Sequence[int], pat: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Yield 0-based position tuples, lexicographically, matching ``pat``."""
    n, k = len(host), len(pat)
    if k > n:
        return
    windows = _value_windows(pat)
    chosen = [0] * k  # host positions
    big = n + 1

    def rec(depth: int, start: int):
        if depth == k:
            yield tuple(chosen)
            return
        lo_idx, hi_idx = windows[depth]
        lo = host[chosen[lo_idx]] if lo_idx >= 0 else 0
        hi = host[chosen[hi_idx]] if hi_idx >= 0 else big
        # leave room for the remaining pattern entries
        for pos in range(start, n - (k - depth) + 1):
            v = host[pos]
            if lo < v < hi:
                chosen[depth] = pos
                yield from rec(depth + 1, pos + 1)

    yield from rec(0, 0)


def contains(host: Sequence[int], pat: Sequence[int]) -> bool:
    """True iff some subsequence of ``host`` is order-isomorphic to ``pat``."""
    if len(pat) > len(host):
        return False
    if len(pat) == len(host):
        return tuple(pat) == tuple(host)
    for _ in _embeddings(host, pat):
        return True
    return False


def contains_naive(host: Sequence[int], pat: Sequence[int]) -> bool:
    """Reference implementation: standardize every k-subsequence."""
    pat = tuple(pat)
    return any(tuple(standardize(sub)) == pat
               for sub in combinations(host, len(pat)))


def avoids(host: Sequence[int], pat: Sequence[int]) -> bool:
    return not contains(host, pat)


def occurrences(host: Sequence[int], pat: Sequence[int]) -> list[PatternOccurrence]:
    pattern = Permutation(pat)
    return [PatternOccurrence(tuple(i + 1 for i in pos), pattern)
            for pos in _embeddings(host, pat)]


def _mask_pattern(p: Sequence[int], mask: int) -> tuple[int, ...]:
    # Standardize the entries of p at the positions set in mask. Values are
    # mapped to bits so each rank is a popcount of the lower chosen values.
    vals = [p[i] for i in range(len(p)) if mask >> i & 1]
    vmask = 0
    for v in vals:
        vmask |= 1 << v
    return tuple((vmask & ((1 << v) - 1)).bit_count() + 1 for v in vals)


def subpattern_masks(p: Sequence[int]) -> dict[int, tuple[int, ...]]:
    """Map every nonempty position mask of p to the pattern it spells."""
    n = len(p)
    return {m: _mask_pattern(p, m) for m in range(1, 1 << n)}


def distinct_subpatterns(host: Sequence[int], k: int) -> set[Permutation]:
    n = len(host)
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range 1..{n}")
    seen = set()
    for idx in combinations(range(n), k):
        mask = 0
        for i in idx:
            mask |= 1 << i
        seen.add(_mask_pattern(host, mask))
    return {Permutation._trusted(t) for t in seen}


def all_subpatterns(host: Sequence[int]) -> set[Permutation]:
    """Every pattern contained in ``host``, of every size, host included."""
    return {Permutation._trusted(t)
            for t in set(subpattern_masks(host).values())}
