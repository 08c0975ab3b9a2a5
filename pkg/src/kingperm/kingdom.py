"""Enumeration of king permutations, princes, and prince-less kings."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, Sequence

from .deletion import delete_value
from .inflation import QUADS, inflate
from .perm_core import Permutation, is_king

# |K_n| for n = 1..9 (OEIS A002464)
KNOWN_COUNTS = {1: 1, 2: 0, 3: 0, 4: 2, 5: 14, 6: 90, 7: 646, 8: 5242, 9: 47622}


@dataclass(frozen=True)
class KingCensus:
    n: int
    count: int
    kings: tuple[Permutation, ...] | None = None


def _extend(prefix: list[int], used: list[bool], n: int) -> Iterator[tuple]:
    if len(prefix) == n:
        yield tuple(prefix)
        return
    last = prefix[-1] if prefix else -10
    for v in range(1, n + 1):
        if used[v] or abs(v - last) == 1:
            continue
        used[v] = True
        prefix.append(v)
        yield from _extend(prefix, used, n)
        prefix.pop()
        used[v] = False


def generate_kings(n: int) -> Iterator[Permutation]:
    """Yield K_n in lexicographic order."""
    if n < 1:
        raise ValueError("n must be at least 1")
    for t in _extend([], [False] * (n + 1), n):
        yield Permutation._trusted(t)


def _count_from(first: int, n: int) -> int:
    used = [False] * (n + 2)
    used[first] = True
    count = 0

    def rec(depth: int, last: int):
        nonlocal count
        if depth == n:
            count += 1
            return
        for v in range(1, n + 1):
            if not used[v] and v != last - 1 and v != last + 1:
                used[v] = True
                rec(depth + 1, v)
                used[v] = False

    rec(1, first)
    return count


def count_kings(n: int, jobs: int = 1) -> int:
    """|K_n| by counting backtracking leaves; ``jobs`` > 1 splits by first value."""
    if n < 1:
        raise ValueError("n must be at least 1")
    firsts = range(1, n + 1)
    if jobs > 1 and n > 6:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return sum(ex.map(_count_from, firsts, [n] * n))
    return sum(_count_from(f, n) for f in firsts)


def count_kings_dp(n: int) -> int:
    """Independent count over (used-set, last value) states."""
    if n < 1:
        raise ValueError("n must be at least 1")
    full = (1 << n) - 1
    layer = {(1 << v, v): 1 for v in range(n)}
    for _ in range(n - 1):
        nxt: dict[tuple[int, int], int] = {}
        for (used, last), c in layer.items():
            for v in range(n):
                if not used >> v & 1 and abs(v - last) != 1:
                    key = (used | 1 << v, v)
                    nxt[key] = nxt.get(key, 0) + c
        layer = nxt
    return sum(c for (used, _), c in layer.items() if used == full)


def census(n: int, materialize: bool = False) -> KingCensus:
    if materialize:
        kings = tuple(generate_kings(n))
        return KingCensus(n, len(kings), kings)
    return KingCensus(n, count_kings(n))


def _require_king(p: Sequence[int]) -> None:
    if not is_king(p):
        raise ValueError(f"{list(p)} is not a king permutation")


def princes(p: Sequence[int]) -> set[Permutation]:
    """Kings of size n-1 obtained by deleting one entry of king p."""
    _require_king(p)
    if len(p) < 2:
        raise ValueError("a permutation of size 1 has no princes")
    out = set()
    for v in range(1, len(p) + 1):
        q = delete_value(p, v)
        if is_king(q):
            out.add(q)
    return out


def has_prince(p: Sequence[int]) -> bool:
    _require_king(p)
    if len(p) < 2:
        raise ValueError("a permutation of size 1 has no princes")
    return any(is_king(delete_value(p, v)) for v in range(1, len(p) + 1))


def kings_without_princes(n: int) -> set[Permutation]:
    """All inflations of S_k by 2413/3142 blocks when n = 4k, else empty."""
    if n < 4:
        raise ValueError("n must be at least 4")
    if n % 4:
        return set()
    k = n // 4
    return {inflate(Permutation._trusted(sk), comps)
            for sk in permutations(range(1, k + 1))
            for comps in product(QUADS, repeat=k)}


def kings_without_princes_filtered(n: int) -> set[Permutation]:
    """Reference: filter K_n by the absence of princes."""
    if n < 4:
        raise ValueError("n must be at least 4")
    return {p for p in generate_kings(n) if not has_prince(p)}


def expected_princeless_count(n: int) -> int:
    if n % 4:
        return 0
    k = n // 4
    return 2 ** k * math.factorial(k)
