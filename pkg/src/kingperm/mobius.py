"""Möbius function of the king poset."""

from __future__ import annotations

import threading
from typing import Sequence

from .inflation import P2413, P3142
from .patterns import avoids, contains
from .perm_core import Permutation, as_perm, is_king
from .poset import DEFAULT_CAP, KingDownset, _check_root, _downset, interval

ONE = Permutation((1,))

H_SET = frozenset(Permutation(p) for p in (
    (2, 4, 1, 5, 3), (3, 5, 1, 4, 2), (4, 2, 5, 1, 3), (3, 1, 5, 2, 4)))


class MobiusTable:
    """Memo of mu(lower, upper) values.

    Private tables need no locking. A table shared between threads relies on
    inserts being idempotent; the lock only serialises writers.
    """

    def __init__(self):
        self.entries: dict[tuple[Permutation, Permutation], int] = {}
        self._lock = threading.Lock()

    def get(self, tau, sigma):
        return self.entries.get((tau, sigma))

    def put(self, tau, sigma, value: int) -> None:
        with self._lock:
            self.entries.setdefault((tau, sigma), value)

    def __len__(self):
        return len(self.entries)


def _vanishes_by_avoidance(sigma: Permutation) -> bool:
    return len(sigma) > 4 and (avoids(sigma, P2413) or avoids(sigma, P3142))


def _fill(tau: Permutation, d: KingDownset, table: MobiusTable, shortcut: bool) -> None:
    # Walk the interval [tau, root] bottom-up so every strict lower element
    # is known before its upper neighbours need it.
    members = [x for x in d.sorted_nodes() if tau in d.below[x]]
    for x in members:
        if table.get(tau, x) is not None:
            continue
        if x == tau:
            val = 1
        elif shortcut and tau == ONE and _vanishes_by_avoidance(x):
            val = 0
        else:
            total = 0
            for y in d.below[x]:
                if y != x and tau in d.below[y]:
                    total += table.get(tau, y)
            val = -total
        table.put(tau, x, val)


def mobius(tau: Sequence[int], sigma: Sequence[int], table: MobiusTable | None = None,
           cap: int = DEFAULT_CAP, cap_override: bool = False, shortcut: bool = False) -> int:
    """mu(tau, sigma) on the king poset.

    ``table`` may be shared across calls; by default a fresh one is used.
    ``shortcut`` sets mu([1], x) = 0 for kings x avoiding 2413 or 3142
    instead of summing.
    """
    tau = as_perm(tau)
    sigma = _check_root(sigma, cap, cap_override)
    if not is_king(tau):
        raise ValueError(f"{tau} is not a king permutation")
    if tau == sigma:
        return 1
    if not contains(sigma, tau):
        return 0
    if table is None:
        table = MobiusTable()
    hit = table.get(tau, sigma)
    if hit is not None:
        return hit
    _fill(tau, _downset(sigma), table, shortcut)
    return table.get(tau, sigma)


def mobius_bottom(sigma: Sequence[int], table: MobiusTable | None = None, **kw) -> int:
    return mobius(ONE, sigma, table, **kw)


def mobius_naive(tau: Sequence[int], sigma: Sequence[int]) -> int:
    """Unmemoized recursion straight from the three-case definition."""
    tau, sigma = as_perm(tau), as_perm(sigma)
    if tau == sigma:
        return 1
    if not contains(sigma, tau):
        return 0
    return -sum(mobius_naive(tau, x) for x in interval(tau, sigma, half_open=True))


def is_in_H(p: Sequence[int]) -> bool:
    return tuple(p) in H_SET


def mobius_downset_labels(d: KingDownset, table: MobiusTable | None = None) -> dict[Permutation, int]:
    """mu([1], x) for every node x of the downset, from one shared table."""
    if table is None:
        table = MobiusTable()
    _fill(ONE, d, table, shortcut=False)
    return {x: table.get(ONE, x) for x in d.nodes}
