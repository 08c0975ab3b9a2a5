"""Command-line interface: ``kingperm <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from . import deletion, inflation, kingdom, patterns, poset
from .mobius import ONE, mobius, mobius_downset_labels
from .perm_core import Permutation, ascii_plot, is_king


def _perm(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _king(text: str) -> Permutation:
    p = _perm(text)
    if not is_king(p):
        raise argparse.ArgumentTypeError(f"{p} is not a king permutation")
    return p


def _dump(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def cmd_enumerate(args) -> int:
    if args.csv:
        print("n,count")
        for n in range(1, args.n + 1):
            print(f"{n},{kingdom.count_kings(n, jobs=args.jobs)}")
        return 0
    if args.list:
        count = 0
        for p in kingdom.generate_kings(args.n):
            print(p.bracket())
            count += 1
        print(count)
    else:
        print(kingdom.count_kings(args.n, jobs=args.jobs))
    return 0


def cmd_contains(args) -> int:
    occ = patterns.occurrences(args.host, args.pattern)
    print(len(occ))
    return 0 if occ else 1


def cmd_occurrences(args) -> int:
    _dump([list(o.positions) for o in patterns.occurrences(args.host, args.pattern)])
    return 0


def cmd_separators(args) -> int:
    _dump([r.to_json() for r in deletion.separators(args.perm)])
    return 0


def cmd_nabla(args) -> int:
    p = args.perm
    try:
        if args.position is not None:
            steps = [deletion.delete_position(p, args.position)]
        else:
            steps = deletion.deletion_trace(p, args.value)
    except (ValueError, IndexError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.json:
        _dump([list(q) for q in steps])
    else:
        for q in (steps if args.trace else steps[-1:]):
            print(q.display())
    return 0


def cmd_inflate(args) -> int:
    try:
        result = inflation.inflate(args.skeleton, args.components)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    dec = inflation.InflationDecomposition(args.skeleton, tuple(args.components))
    out = dec.to_json()
    out["result"] = list(result)
    _dump(out)
    return 0


def cmd_decompose(args) -> int:
    dec = inflation.quadblock_decompose(args.perm)
    _dump(dec.to_json() if dec else None)
    return 0


def cmd_princes(args) -> int:
    ps = sorted(kingdom.princes(args.perm))
    if args.json:
        _dump([list(q) for q in ps])
    else:
        for q in ps:
            print(q.display())
    return 0


def cmd_downset(args) -> int:
    try:
        d = poset.downset(args.perm, cap_override=args.cap_override)
    except poset.CapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.dot:
        sys.stdout.write(poset.hasse_dot(d, with_mobius=args.mobius))
        return 0
    labels = mobius_downset_labels(d) if args.mobius else {}
    if args.json:
        _dump({
            "root": list(d.root),
            "nodes": [list(x) for x in d.sorted_nodes()],
            "cover_edges": [[list(a), list(b)] for a, b in d.sorted_edges()],
            "mobius": ({x.bracket(): labels[x] for x in d.sorted_nodes()} if labels else None),
        })
        return 0
    for x in d.sorted_nodes():
        line = x.display()
        if labels:
            line += f"  mu={labels[x]}"
        print(line)
    for a, b in d.sorted_edges():
        print(f"{a.bracket()} < {b.bracket()}")
    return 0


def cmd_mobius(args) -> int:
    tau = args.tau if args.tau is not None else ONE
    try:
        print(mobius(tau, args.sigma, cap_override=args.cap_override))
    except poset.CapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return 0


def cmd_chain(args) -> int:
    try:
        ch = poset.find_chain(args.pi, args.sigma)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.json:
        _dump({"elements": [list(x) for x in ch.elements], "gaps": list(ch.gaps)})
    else:
        for x in ch.elements:
            print(x.display())
        print("gaps: " + " ".join(map(str, ch.gaps)))
    return 0


def cmd_plot(args) -> int:
    try:
        print(ascii_plot(args.perm))
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return 0


def cmd_verify(args) -> int:
    from .verify import CHECKS, DEFAULT_SEED, verify
    ids = list(CHECKS) if args.theorem_id == "all" else [args.theorem_id]
    if any(i not in CHECKS for i in ids):
        print(f"error: unknown theorem id {args.theorem_id!r}; "
              f"choose from: all, {', '.join(CHECKS)}", file=sys.stderr)
        return 2
    seed = DEFAULT_SEED if args.seed is None else args.seed
    ok = True
    for tid in ids:
        rep = verify(tid, args.max_n, seed=seed, jobs=args.jobs)
        ok &= rep.ok
        if args.json:
            _dump(rep.to_json())
        else:
            print(rep.summary())
            for f in rep.failures:
                print(f"  {f}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kingperm",
                                 description="The containment poset of king permutations.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="count or list K_n")
    p.add_argument("n", type=int)
    p.add_argument("--list", action="store_true")
    p.add_argument("--csv", action="store_true", help="counts table for 1..n as CSV")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    for name, func in (("contains", cmd_contains), ("occurrences", cmd_occurrences)):
        p = sub.add_parser(name)
        p.add_argument("host", type=_perm)
        p.add_argument("pattern", type=_perm)
        p.set_defaults(func=func)

    p = sub.add_parser("separators")
    p.add_argument("perm", type=_perm)
    p.set_defaults(func=cmd_separators)

    p = sub.add_parser("nabla", help="delete by position or by (original) value")
    p.add_argument("perm", type=_perm)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--position", type=int)
    g.add_argument("--value", type=int, nargs="+")
    p.add_argument("--trace", action="store_true", help="print every intermediate step")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_nabla)

    p = sub.add_parser("inflate")
    p.add_argument("skeleton", type=_perm)
    p.add_argument("components", type=_perm, nargs="+")
    p.set_defaults(func=cmd_inflate)

    p = sub.add_parser("decompose", help="quad-block decomposition")
    p.add_argument("perm", type=_perm)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("princes")
    p.add_argument("perm", type=_king)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_princes)

    p = sub.add_parser("downset")
    p.add_argument("perm", type=_king)
    p.add_argument("--dot", action="store_true")
    p.add_argument("--mobius", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--cap-override", action="store_true")
    p.set_defaults(func=cmd_downset)

    p = sub.add_parser("mobius", help="mu(tau, sigma); tau defaults to [1]")
    p.add_argument("sigma", type=_king)
    p.add_argument("tau", type=_king, nargs="?")
    p.add_argument("--cap-override", action="store_true")
    p.set_defaults(func=cmd_mobius)

    p = sub.add_parser("chain", help="{1,3}-step chain from pi up to sigma")
    p.add_argument("pi", type=_king)
    p.add_argument("sigma", type=_king)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("plot")
    p.add_argument("perm", type=_perm)
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("verify", help="run a theorem check (or 'all')")
    p.add_argument("theorem_id")
    p.add_argument("--max-n", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return ap


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def main() -> None:
    sys.exit(run())
