"""Exhaustive and randomized checks of the structural results on kings.

Each check is split into independent units (usually one per size n) so that
runs can be spread over processes; reports are merged in unit order, which
keeps the output identical for any number of jobs.
"""

from __future__ import annotations

import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable

from .deletion import (delete_position, delete_value, sep_h, sep_v,
                       separators)
from .inflation import P2413, P3142, point_quad_decompositions, quadblock_decompose
from .kingdom import (KNOWN_COUNTS, count_kings, count_kings_dp,
                      expected_princeless_count, generate_kings, has_prince,
                      kings_without_princes, kings_without_princes_filtered)
from .mobius import H_SET, ONE, MobiusTable, is_in_H, mobius_bottom
from .patterns import avoids, contains, distinct_subpatterns
from .perm_core import (Permutation, breadth, inverse, is_k_prolific, is_king,
                        k_blocks, reverse, standardize, strict_k_blocks)
from .poset import covers_below, downset, find_chain, intermediate_king

DEFAULT_SEED = 20240101
MAX_FAILURES = 50
PRINCE_FILTER_LIMIT = 9
PRINCELESS_CONSTRUCTION_SIZES = (4, 8, 12)
K5_PREFIXES = frozenset(Permutation(p) for p in
                        ((2, 4, 1, 3, 5), (3, 1, 4, 2, 5), (3, 5, 2, 4, 1), (4, 2, 5, 3, 1)))


@dataclass
class VerificationReport:
    theorem_id: str
    range: tuple[int, int]
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    elapsed: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        lo, hi = self.range
        return (f"{status} {self.theorem_id} n={lo}..{hi} checked={self.checked} "
                f"failures={len(self.failures)} elapsed={self.elapsed:.2f}s")

    def to_json(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "range": list(self.range),
            "checked": self.checked,
            "failures": self.failures,
            "elapsed": round(self.elapsed, 3),
            "details": self.details,
            "ok": self.ok,
        }


@dataclass
class UnitResult:
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def fail(self, msg: str) -> None:
        if len(self.failures) < MAX_FAILURES:
            self.failures.append(msg)


# ---------------------------------------------------------------- units

def _counts(n: int, rng: random.Random) -> UnitResult:
    r = UnitResult()
    c = count_kings(n)
    r.details[str(n)] = c
    expected = KNOWN_COUNTS.get(n)
    if expected is None:
        expected = count_kings_dp(n)
    else:
        listed = sum(1 for _ in generate_kings(n))
        if listed != c:
            r.fail(f"n={n}: generator yields {listed}, counter {c}")
    if c != expected:
        r.fail(f"n={n}: counted {c}, expected {expected}")
    if n == 9:
        ratio = c / math.factorial(9)
        r.details["ratio_9"] = ratio
        if not 0.12 < ratio < 0.145:
            r.fail(f"|K_9|/9! = {ratio:.4f} outside (0.12, 0.145)")
    r.checked = 1
    return r


def _basis(n: int, rng) -> UnitResult:
    r = UnitResult()
    for p in generate_kings(n):
        r.checked += 1
        if not (contains(p, P2413) or contains(p, P3142)):
            r.fail(f"{p} avoids both 2413 and 3142")
    return r


def _grandson(n: int, rng) -> UnitResult:
    r = UnitResult()
    for s in generate_kings(n):
        for pi in downset(s).nodes:
            if len(pi) == n - 2:
                r.checked += 1
                if intermediate_king(s, pi) is None:
                    r.fail(f"no king strictly between {pi} and {s}")
    return r


def _chain13(n: int, rng) -> UnitResult:
    r = UnitResult()
    for s in generate_kings(n):
        d = downset(s)
        for pi in d.nodes:
            if pi == s:
                continue
            r.checked += 1
            try:
                ch = find_chain(pi, s, d)
            except RuntimeError as e:
                r.fail(str(e))
                continue
            if ch.elements[0] != pi or ch.elements[-1] != s or not ch.is_valid():
                r.fail(f"bad chain {ch.elements} for {pi} < {s}")
        # the {1,3} step: a king tau with n - |tau| in {1,3} above every deep pi
        for pi in d.nodes:
            if n - len(pi) > 3:
                ok = any(n - len(t) in (1, 3) and pi in d.below[t] and t != pi
                         for t in d.nodes)
                if not ok:
                    r.fail(f"no 1/3-step king between {pi} and {s}")
    return r


def _strict2(n: int, rng) -> UnitResult:
    r = UnitResult()
    for s in generate_kings(n):
        r.checked += 1
        single = any(len(strict_k_blocks(delete_value(s, v), 2)) == 1
                     for v in range(1, n + 1))
        if single and not has_prince(s):
            r.fail(f"{s} has a deletion with one strict 2-block but no prince")
    return r


def _three_equiv(n: int, rng) -> UnitResult:
    r = UnitResult()
    for p in generate_kings(n):
        r.checked += 1
        quad = quadblock_decompose(p) is not None
        three = all(k_blocks(delete_value(p, v), 3) for v in range(1, n + 1))
        princeless = not has_prince(p)
        if not quad == three == princeless:
            r.fail(f"{p}: quad={quad} three-block={three} no-prince={princeless}")
    return r


def _princeless_filter(n: int, rng) -> UnitResult:
    r = UnitResult()
    found = kings_without_princes_filtered(n)
    r.checked = KNOWN_COUNTS.get(n) or count_kings(n)
    r.details[str(n)] = len(found)
    want = expected_princeless_count(n)
    if len(found) != want:
        r.fail(f"n={n}: {len(found)} prince-less kings, expected {want}")
    if found != kings_without_princes(n):
        r.fail(f"n={n}: filtered and constructed sets differ")
    return r


def _princeless_construction(n: int, rng) -> UnitResult:
    r = UnitResult()
    built = kings_without_princes(n)
    r.details[f"constructed_{n}"] = len(built)
    if len(built) != expected_princeless_count(n):
        r.fail(f"n={n}: constructed {len(built)}, expected {expected_princeless_count(n)}")
    for p in sorted(built):
        r.checked += 1
        if not is_king(p):
            r.fail(f"constructed {p} is not a king")
        elif has_prince(p):
            r.fail(f"constructed {p} has a prince")
    return r


def _decomposes_under(pi: Permutation, skeleton: Permutation, k: int) -> bool:
    for dec in point_quad_decompositions(pi):
        if len(dec.components) <= k and contains(skeleton, dec.skeleton):
            return True
    return False


def _downset_structure(n: int, rng) -> UnitResult:
    r = UnitResult()
    k = n // 4
    for s in sorted(kings_without_princes(n)):
        skeleton = quadblock_decompose(s).skeleton
        for pi in downset(s, cap_override=True).nodes:
            if pi == s:
                continue
            r.checked += 1
            if not _decomposes_under(pi, skeleton, k):
                r.fail(f"{pi} < {s} is not an inflation of a pattern of {skeleton}")
    return r


def _k5_cover(n: int, rng) -> UnitResult:
    r = UnitResult()
    k5 = list(generate_kings(5))
    for p in generate_kings(n):
        r.checked += 1
        if not any(contains(p, q) for q in k5):
            r.fail(f"{p} contains no member of K_5")
    return r


def _k5_prefix(n: int, rng) -> UnitResult:
    r = UnitResult()
    for p in sorted(kings_without_princes(n)):
        r.checked += 1
        if standardize(p[:5]) not in K5_PREFIXES:
            r.fail(f"prince-less {p} starts with {standardize(p[:5])}")
    return r


def _vanish(n: int, rng) -> UnitResult:
    r = UnitResult()
    table = MobiusTable()
    for p in generate_kings(n):
        if avoids(p, P2413) or avoids(p, P3142):
            r.checked += 1
            mu = mobius_bottom(p, table)
            if mu != 0:
                r.fail(f"mu({p}) = {mu} though it avoids 2413 or 3142")
    return r


def _h_set(n: int, rng) -> UnitResult:
    r = UnitResult()
    table = MobiusTable()
    if n == 5:
        for p in generate_kings(5):
            r.checked += 1
            both = contains(p, P2413) and contains(p, P3142)
            mu = mobius_bottom(p, table)
            if is_in_H(p) != both:
                r.fail(f"{p}: in H={is_in_H(p)} but contains both={both}")
            if (mu == 1) != is_in_H(p) or mu not in (0, 1):
                r.fail(f"{p}: mu={mu}, in H={is_in_H(p)}")
        return r
    for s in generate_kings(n):
        d = downset(s)
        hs = [x for x in d.nodes if x in H_SET]
        if len(hs) != 1:
            continue
        h = hs[0]
        rest = [x for x in d.nodes if x != s and h not in d.below[x]]
        if all(avoids(x, P2413) or avoids(x, P3142) for x in rest if len(x) > 4):
            r.checked += 1
            mu = mobius_bottom(s, table)
            if mu != 0:
                r.fail(f"mu({s}) = {mu} though it satisfies the single-H condition")
    return r


def _h_instance(_unit, rng) -> UnitResult:
    r = UnitResult(checked=1)
    s = Permutation((6, 2, 4, 1, 5, 3, 7))
    hs = sorted(x for x in downset(s).nodes if x in H_SET)
    mu = mobius_bottom(s)
    r.details["6241537"] = {"mu": mu, "H_below": [list(x) for x in hs]}
    if mu != 0 or hs != [Permutation((2, 4, 1, 5, 3))]:
        r.fail(f"mu([6241537]) = {mu}, H elements below: {hs}")
    return r


def _unique_cover(n: int, rng) -> UnitResult:
    r = UnitResult()
    table = MobiusTable()
    for s in generate_kings(n):
        both = [c for c in covers_below(s) if contains(c, P2413) and contains(c, P3142)]
        if len(both) == 1:
            r.checked += 1
            mu = mobius_bottom(s, table)
            if mu != 0:
                r.fail(f"mu({s}) = {mu} with a single cover {both[0]} containing both")
    return r


def _separator_props(n: int, rng: random.Random) -> UnitResult:
    r = UnitResult()
    samples = 1250
    literal_mismatch = 0
    for _ in range(samples):
        p = Permutation._trusted(rng.sample(range(1, n + 1), n))
        r.checked += 1
        sv, sh = sep_v(p), sep_h(p)
        # a vertical separator at position i shows up as the horizontal
        # separator i of the inverse; the value sets themselves differ
        if {p.index(a) + 1 for a in sv} != sep_h(inverse(p)):
            r.fail(f"{p}: vertical separator positions != Sep_h of the inverse")
        if sv != sep_h(inverse(p)):
            literal_mismatch += 1
        if sv != sep_v(reverse(p)) or sh != sep_h(reverse(p)):
            r.fail(f"{p}: separators not reverse invariant")
        if 1 in sh or n in sh or p[0] in sv or p[-1] in sv:
            r.fail(f"{p}: boundary restriction broken")
    r.details[f"value_set_mismatch_{n}"] = literal_mismatch
    if n <= 8:
        for p in generate_kings(n):
            seps = sep_v(p) | sep_h(p)
            for v in range(1, n + 1):
                r.checked += 1
                if is_king(delete_value(p, v)) == (v in seps):
                    r.fail(f"{p}: deleting {v} disagrees with separator status")
    return r


def _prolific(n: int, rng) -> UnitResult:
    r = UnitResult()
    for t in permutations(range(1, n + 1)):
        p = Permutation._trusted(t)
        r.checked += 1
        k = is_king(p)
        if k != (breadth(p) >= 3) or k != is_k_prolific(p, 1):
            r.fail(f"{p}: king={k} breadth={breadth(p)}")
        if k != (len(distinct_subpatterns(p, n - 1)) == n):
            r.fail(f"{p}: king={k} but 1-prolific count disagrees")
        if k and not (is_king(inverse(p)) and is_king(reverse(p))):
            r.fail(f"{p}: inverse or reverse is not a king")
    return r


def _commutation_one(p: Permutation, r: UnitResult) -> None:
    n = len(p)
    r.checked += 1
    for i in range(2, n + 1):
        for j in range(1, i):
            if delete_position(delete_position(p, i), j) != \
                    delete_position(delete_position(p, j), i - 1):
                r.fail(f"{p}: position commutation fails at i={i}, j={j}")
            if delete_value(delete_value(p, i), j) != \
                    delete_value(delete_value(p, j), i - 1):
                r.fail(f"{p}: value commutation fails at i={i}, j={j}")
    for j in range(1, n):
        if abs(p[j - 1] - p[j]) == 1 and delete_position(p, j) != delete_position(p, j + 1):
            r.fail(f"{p}: 2-block at {j} does not collapse")
    for rep in separators(p):
        if rep.vertical_witness:
            j, i, k = rep.vertical_witness
            if delete_position(delete_position(p, i), j) != \
                    delete_position(delete_position(p, k), i):
                r.fail(f"{p}: same-block law fails for vertical {rep.value}")


def _commutation(n: int, rng: random.Random) -> UnitResult:
    r = UnitResult()
    if n <= 6:
        for t in permutations(range(1, n + 1)):
            _commutation_one(Permutation._trusted(t), r)
    else:
        for _ in range(300):
            _commutation_one(Permutation._trusted(rng.sample(range(1, n + 1), n)), r)
    return r


# ---------------------------------------------------------------- registry

@dataclass(frozen=True)
class Check:
    theorem_id: str
    description: str
    min_n: int
    default_max_n: int
    unit: Callable
    extra_units: tuple = ()  # (callable, arg) pairs run regardless of max_n

    def units(self, max_n: int) -> list[tuple[Callable, object]]:
        out = [(self.unit, n) for n in range(self.min_n, max_n + 1)]
        return out + list(self.extra_units)


def _downset_structure_unit(n: int, rng) -> UnitResult:
    return _downset_structure(n, rng) if n % 4 == 0 else UnitResult()


def _princeless_unit(n: int, rng) -> UnitResult:
    if n <= PRINCE_FILTER_LIMIT:
        return _princeless_filter(n, rng)
    if n % 4 == 0:
        return _princeless_construction(n, rng)
    return UnitResult()


CHECKS: dict[str, Check] = {c.theorem_id: c for c in [
    Check("counts", "|K_n| matches the table (and a DP count beyond it)", 1, 9, _counts),
    Check("basis-containment", "every king contains 2413 or 3142", 4, 8, _basis),
    Check("grandson-son", "a king of size n-2 below sigma has a king of size n-1 in between", 5, 8, _grandson),
    Check("chain-13", "{1,3}-step chains between any two comparable kings", 1, 8, _chain13),
    Check("strict-2block-prince", "a deletion with one strict 2-block forces a prince", 4, 8, _strict2),
    Check("no-prince-equiv", "quad-block form, 3-block deletions, no prince are equivalent", 4, 8, _three_equiv),
    Check("no-prince-count", "prince-less kings number 2^k k! for n = 4k, else 0", 4, 8,
          _princeless_unit,
          tuple((_princeless_construction, n) for n in PRINCELESS_CONSTRUCTION_SIZES)),
    Check("downset-structure", "kings below a prince-less king inflate a pattern of its skeleton", 4, 8,
          _downset_structure_unit),
    Check("k5-cover", "every king of size > 5 contains a member of K_5", 6, 8, _k5_cover,
          tuple((_k5_prefix, n) for n in (8, 12))),
    Check("mobius-vanish", "mu vanishes on kings avoiding 2413 or 3142", 5, 7, _vanish),
    Check("h-set", "mu = 1 exactly on H within K_5; single-H kings have mu = 0", 5, 7, _h_set,
          ((_h_instance, "6241537"),)),
    Check("unique-cover-zero", "one cover containing both patterns forces mu = 0", 4, 7, _unique_cover),
    Check("separator-duality", "separator duality, reverse invariance, soundness for kings", 3, 10,
          _separator_props),
    Check("prolific-breadth", "king <=> breadth >= 3 <=> 1-prolific", 2, 7, _prolific),
    Check("commutation", "deletion commutation, 2-block collapse, same-block law", 3, 12, _commutation),
]}


def _run_unit(args):
    theorem_id, idx, fn, arg, seed = args
    rng = random.Random(f"{seed}:{theorem_id}:{idx}")
    t0 = time.perf_counter()
    res = fn(arg, rng)
    return res, time.perf_counter() - t0


def verify(theorem_id: str, max_n: int | None = None, seed: int = DEFAULT_SEED,
           jobs: int = 1) -> VerificationReport:
    if theorem_id not in CHECKS:
        raise KeyError(f"unknown theorem id {theorem_id!r}")
    check = CHECKS[theorem_id]
    if max_n is None:
        max_n = check.default_max_n
    units = check.units(max_n)
    tasks = [(theorem_id, i, fn, arg, seed) for i, (fn, arg) in enumerate(units)]
    t0 = time.perf_counter()
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_run_unit, tasks))
    else:
        results = [_run_unit(t) for t in tasks]
    report = VerificationReport(theorem_id, (check.min_n, max_n))
    for res, _ in results:
        report.checked += res.checked
        report.failures.extend(res.failures)
        report.details.update(res.details)
    report.elapsed = time.perf_counter() - t0
    return report
