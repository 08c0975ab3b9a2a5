"""The containment order restricted to kings: downsets, intervals, covers, chains."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .deletion import delete_position, delete_value
from .patterns import _mask_pattern, contains
from .perm_core import Permutation, as_perm, is_king

DEFAULT_CAP = 12


@dataclass(frozen=True)
class KingDownset:
    """All kings contained in ``root`` with the Hasse diagram between them.

    ``below[q]`` is the set of nodes contained in q (q included), which is
    the containment relation restricted to the nodes.
    """

    root: Permutation
    nodes: frozenset
    cover_edges: frozenset
    below: dict = field(compare=False, hash=False, repr=False)

    def sorted_nodes(self) -> list[Permutation]:
        return sorted(self.nodes, key=Permutation.sort_key)

    def sorted_edges(self) -> list[tuple[Permutation, Permutation]]:
        return sorted(self.cover_edges,
                      key=lambda e: (e[0].sort_key(), e[1].sort_key()))

    def leq(self, q, p) -> bool:
        return q in self.below[p]

    def covers_of(self, p) -> set[Permutation]:
        return {lo for lo, hi in self.cover_edges if hi == p}


class CapExceeded(ValueError):
    pass


def _check_root(root: Sequence[int], cap: int, cap_override: bool) -> Permutation:
    root = as_perm(root)
    if not is_king(root):
        raise ValueError(f"{root} is not a king permutation")
    if len(root) > cap and not cap_override:
        raise CapExceeded(
            f"size {len(root)} exceeds the downset cap {cap}; pass cap_override")
    return root


def downset(root: Sequence[int], cap: int = DEFAULT_CAP, cap_override: bool = False) -> KingDownset:
    root = _check_root(root, cap, cap_override)
    return _downset(root)


@lru_cache(maxsize=8192)
def _downset(root: Permutation) -> KingDownset:
    n = len(root)
    pattern_of: dict[int, tuple] = {}
    king_pat: dict[tuple, bool] = {}
    rep: dict[tuple, int] = {}
    for m in range(1, 1 << n):
        t = _mask_pattern(root, m)
        pattern_of[m] = t
        if t not in king_pat:
            king_pat[t] = is_king(t)
            if king_pat[t]:
                rep[t] = m
    nodes = {t: Permutation._trusted(t) for t in rep}
    below: dict[Permutation, frozenset] = {}
    for t, m in rep.items():
        sub = set()
        s = m
        while s:
            u = pattern_of[s]
            if king_pat[u]:
                sub.add(nodes[u])
            s = (s - 1) & m
        below[nodes[t]] = frozenset(sub)
    edges = set()
    for p, lower in below.items():
        strict = lower - {p}
        for q in strict:
            # q is covered by p unless some r sits strictly between
            if not any(q in below[r] and r != q for r in strict if len(r) > len(q)):
                edges.add((q, p))
    return KingDownset(nodes[tuple(root)], frozenset(nodes.values()),
                       frozenset(edges), below)


def interval(tau: Sequence[int], sigma: Sequence[int], half_open: bool = False) -> set[Permutation]:
    """Kings x with tau <= x <= sigma (x < sigma when half_open)."""
    tau, sigma = as_perm(tau), as_perm(sigma)
    d = downset(sigma, cap_override=True)
    if tau not in d.nodes:
        return set()
    out = {x for x in d.nodes if tau in d.below[x]}
    if half_open:
        out.discard(sigma)
    return out


def covers_below(p: Sequence[int]) -> set[Permutation]:
    """Maximal kings strictly contained in p."""
    p = as_perm(p)
    return downset(p, cap_override=True).covers_of(p)


def deletion_pairs(sigma: Sequence[int], pi: Sequence[int]) -> set[tuple[int, int]]:
    """Position pairs (i, j), i > j, with delete j after deleting i giving pi."""
    n = len(sigma)
    if n != len(pi) + 2:
        raise ValueError(f"sizes {n} and {len(pi)} do not differ by 2")
    target = tuple(pi)
    out = set()
    for i in range(2, n + 1):
        once = delete_position(sigma, i)
        for j in range(1, i):
            if tuple(delete_position(once, j)) == target:
                out.add((i, j))
    return out


def intermediate_king(sigma: Sequence[int], pi: Sequence[int]) -> Permutation | None:
    """A king tau of size n-1 strictly between pi and sigma, scanning values in order.

    Returns None only if no such king exists, which would contradict the
    grandson-implies-son property for valid inputs.
    """
    sigma, pi = as_perm(sigma), as_perm(pi)
    if not (is_king(sigma) and is_king(pi)):
        raise ValueError("both arguments must be kings")
    if len(sigma) != len(pi) + 2:
        raise ValueError(f"sizes {len(sigma)} and {len(pi)} do not differ by 2")
    if len(sigma) <= 4:
        raise ValueError("sigma must have size greater than 4")
    if not contains(sigma, pi):
        raise ValueError(f"{pi} is not contained in {sigma}")
    for v in range(1, len(sigma) + 1):
        tau = delete_value(sigma, v)
        if is_king(tau) and contains(tau, pi):
            return tau
    return None


@dataclass(frozen=True)
class Chain:
    elements: tuple[Permutation, ...]

    @property
    def gaps(self) -> tuple[int, ...]:
        e = self.elements
        return tuple(len(b) - len(a) for a, b in zip(e, e[1:]))

    def is_valid(self, allowed_gaps=(1, 3)) -> bool:
        e = self.elements
        if not all(is_king(x) for x in e):
            return False
        if any(g not in allowed_gaps for g in self.gaps):
            return False
        return all(contains(b, a) for a, b in zip(e, e[1:]))


def find_chain(pi: Sequence[int], sigma: Sequence[int], d: KingDownset | None = None) -> Chain:
    """A chain of kings from pi up to sigma whose size steps are 1 or 3.

    Descends from sigma, trying a prince inside the interval first and a
    three-step drop otherwise, backtracking on dead ends.
    """
    pi, sigma = as_perm(pi), as_perm(sigma)
    if d is None:
        d = downset(sigma, cap_override=True)
    elif d.root != sigma:
        raise ValueError("downset root does not match sigma")
    if pi not in d.nodes:
        raise ValueError(f"{pi} is not a king below {sigma}")
    # nodes of the interval [pi, sigma]
    between = [x for x in d.sorted_nodes() if pi in d.below[x]]
    by_size: dict[int, list[Permutation]] = {}
    for x in between:
        by_size.setdefault(len(x), []).append(x)
    dead: set[Permutation] = set()

    def descend(x: Permutation, depth: int):
        if x == pi:
            return [x]
        if depth > len(sigma) or x in dead:
            return None
        for gap in (1, 3):
            for y in by_size.get(len(x) - gap, ()):
                if y in d.below[x]:
                    rest = descend(y, depth + 1)
                    if rest is not None:
                        return [x] + rest
        dead.add(x)
        return None

    path = descend(sigma, 0)
    if path is None:
        raise RuntimeError(f"no {{1,3}}-chain from {pi} to {sigma}")
    return Chain(tuple(reversed(path)))


def _dot_id(p: Permutation) -> str:
    return '"' + p.bracket() + '"'


def hasse_dot(d: KingDownset, with_mobius: bool = False, name: str = "downset") -> str:
    """DOT digraph of the Hasse diagram, edges pointing upward."""
    labels = {}
    if with_mobius:
        from .mobius import mobius_downset_labels
        labels = mobius_downset_labels(d)
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for p in d.sorted_nodes():
        label = p.bracket()
        if with_mobius:
            label += f"\\nmu={labels[p]}"
        lines.append(f'  {_dot_id(p)} [label="{label}"];')
    for lo, hi in d.sorted_edges():
        lines.append(f"  {_dot_id(lo)} -> {_dot_id(hi)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
