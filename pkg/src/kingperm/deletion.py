"""Deletion operators by position and by value, and separator detection."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .perm_core import Permutation, standardize

VERTICAL = "vertical"
HORIZONTAL = "horizontal"


def delete_position(p: Sequence[int], i: int) -> Permutation:
    """Remove the entry at 1-based position ``i`` and standardize."""
    n = len(p)
    if n < 2:
        raise ValueError("cannot delete from a permutation of size 1")
    if not 1 <= i <= n:
        raise IndexError(f"position {i} out of range 1..{n}")
    pivot = p[i - 1]
    return Permutation._trusted(
        v if v < pivot else v - 1
        for k, v in enumerate(p, 1) if k != i
    )


def delete_value(p: Sequence[int], v: int) -> Permutation:
    """Remove the entry holding value ``v`` and standardize."""
    n = len(p)
    if not 1 <= v <= n:
        raise ValueError(f"value {v} out of range 1..{n}")
    return delete_position(p, list(p).index(v) + 1)


def deletion_trace(p: Sequence[int], values: Sequence[int]) -> list[Permutation]:
    """Intermediate permutations when deleting original values one at a time.

    Each requested value is named as in ``p``; before it is removed it is
    re-addressed by the name it carries in the current, already shrunk
    permutation (its value minus the number of smaller values gone).
    """
    n = len(p)
    values = list(values)
    if len(set(values)) != len(values):
        raise ValueError(f"duplicate values in {values}")
    if len(values) >= n:
        raise ValueError("must leave at least one entry")
    for v in values:
        if not 1 <= v <= n:
            raise ValueError(f"value {v} out of range 1..{n}")
    gone: list[int] = []
    cur = Permutation._trusted(p)
    trace = []
    for v in values:
        current_name = v - sum(1 for g in gone if g < v)
        cur = delete_value(cur, current_name)
        gone.append(v)
        trace.append(cur)
    return trace


def delete_values(p: Sequence[int], values: Sequence[int]) -> Permutation:
    if not values:
        return Permutation._trusted(p)
    return deletion_trace(p, values)[-1]


def delete_values_at_once(p: Sequence[int], values: Sequence[int]) -> Permutation:
    """Drop every entry holding one of ``values``, then standardize once."""
    drop = set(values)
    if len(drop) != len(values) or len(drop) >= len(p):
        raise ValueError(f"bad value set {values} for size {len(p)}")
    if not drop <= set(p):
        raise ValueError(f"values {sorted(drop - set(p))} not in permutation")
    return standardize([v for v in p if v not in drop])


@dataclass(frozen=True)
class SeparatorReport:
    """A separator value with the kinds it has and one witness per kind.

    Witness positions are 1-based: ``(j1, i, j2)`` for vertical, the
    adjacent pair ``(p1, p2)`` holding a-1 and a+1 for horizontal.
    """

    value: int
    kinds: tuple[str, ...]
    vertical_witness: tuple[int, int, int] | None = None
    horizontal_witness: tuple[int, int] | None = None

    @property
    def is_vertical(self) -> bool:
        return VERTICAL in self.kinds

    @property
    def is_horizontal(self) -> bool:
        return HORIZONTAL in self.kinds

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "kinds": list(self.kinds),
            "vertical_witness": list(self.vertical_witness) if self.vertical_witness else None,
            "horizontal_witness": list(self.horizontal_witness) if self.horizontal_witness else None,
        }


def separators(p: Sequence[int]) -> list[SeparatorReport]:
    """One report per separator value, sorted by value.

    Vertical: the value sits between two positionally adjacent entries whose
    values differ by one. Horizontal: its two value-neighbours a-1, a+1 sit
    next to each other somewhere in p. Sizes below 3 have no separators.
    """
    n = len(p)
    vert: dict[int, tuple[int, int, int]] = {}
    horiz: dict[int, tuple[int, int]] = {}
    for i in range(1, n - 1):
        if abs(p[i - 1] - p[i + 1]) == 1:
            vert[p[i]] = (i, i + 1, i + 2)
    for k in range(n - 1):
        a, b = p[k], p[k + 1]
        if abs(a - b) == 2:
            horiz[(a + b) // 2] = (k + 1, k + 2)
    out = []
    for v in sorted(set(vert) | set(horiz)):
        kinds = tuple(k for k, d in ((VERTICAL, vert), (HORIZONTAL, horiz)) if v in d)
        out.append(SeparatorReport(v, kinds, vert.get(v), horiz.get(v)))
    return out


def sep_v(p: Sequence[int]) -> set[int]:
    return {r.value for r in separators(p) if r.is_vertical}


def sep_h(p: Sequence[int]) -> set[int]:
    return {r.value for r in separators(p) if r.is_horizontal}
