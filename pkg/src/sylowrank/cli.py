"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 order cap exceeded,
3 unsupported parameters, 4 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence

from .catalog import (
    DEFAULT_TABLE_CAP,
    FamilySpec,
    TableEntry,
    construct_sylow,
    supported_specs,
    sylow_order,
    table_entry,
    verify,
)
from .constructions import base_subgroup, iterated_wreath, wreath_z2
from .errors import BadParameter, CapExceeded, GroupError, MalformedInput, UnsupportedCase
from .groups import DEFAULT_CAP, Group
from .presentations import BaseGroupSpec, build_base
from .rank import (
    count_order_p,
    count_order_p_in_coset,
    rank_report,
    v_sequence,
    wreath_count_formula,
)
from .serialize import dumps, load

EXIT_OK, EXIT_MISMATCH, EXIT_CAP, EXIT_UNSUPPORTED, EXIT_MALFORMED = range(5)


@dataclass
class ManifestRow:
    spec: FamilySpec
    expected: Optional[TableEntry] = None


def parse_manifest(text: str) -> List[ManifestRow]:
    """``family n q [expected_rank expected_nrank]`` per line; ``#`` starts a comment."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (3, 5):
            raise MalformedInput(f"manifest line {lineno}: expected 'family n q [rank nrank]'")
        try:
            nums = [int(x) for x in parts[1:]]
        except ValueError as exc:
            raise MalformedInput(f"manifest line {lineno}: {exc}") from exc
        spec = FamilySpec(parts[0], nums[0], nums[1])
        expected = TableEntry(nums[2], nums[3], "manifest") if len(nums) == 4 else None
        rows.append(ManifestRow(spec, expected))
    return rows


def _verify_row(args):
    spec, expected, max_order = args
    try:
        want = sylow_order(spec)
        if want > max_order:
            raise CapExceeded(f"Sylow 2-subgroup of order {want} exceeds --max-order {max_order}")
        rep = verify(spec, cap=max(max_order, DEFAULT_CAP), expected=expected)
    except CapExceeded as exc:
        return {"family": spec.family, "n": spec.n, "q": spec.q, "error": "cap", "detail": str(exc)}
    return rep.to_json()


def _group_from_args(args) -> Group:
    if getattr(args, "file", None):
        return load(args.file, cap=args.cap)
    if getattr(args, "base", None):
        base = build_base(BaseGroupSpec.parse(args.base))
        levels = getattr(args, "levels", 0) or 0
        return iterated_wreath(base, levels, cap=args.cap) if levels else base
    if args.family is None or args.n is None or args.q is None:
        raise MalformedInput("give --family/--n/--q, --base, or --file")
    return construct_sylow(FamilySpec(args.family, args.n, args.q), cap=args.cap)


def cmd_construct(args) -> int:
    G = _group_from_args(args)
    text = dumps(G)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote group of order {G.order} to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_rank(args) -> int:
    G = _group_from_args(args)
    rep = rank_report(G, with_normal=args.normal)
    if args.format == "json":
        print(json.dumps(rep.to_dict(G), sort_keys=True))
        return EXIT_OK
    fmt = G.law.format
    print(f"order {G.order}")
    print(f"rank {rep.rank}")
    for x in rep.rank_witness:
        print(f"  {json.dumps(fmt(x), sort_keys=True)}")
    if args.normal:
        print(f"nrank {rep.normal_rank}")
        for x in rep.normal_witness:
            print(f"  {json.dumps(fmt(x), sort_keys=True)}")
    return EXIT_OK


def cmd_verify_table(args) -> int:
    if args.all:
        rows = [ManifestRow(s) for s in supported_specs(args.max_order)]
    elif args.manifest:
        try:
            with open(args.manifest, encoding="utf-8") as fh:
                rows = parse_manifest(fh.read())
        except OSError as exc:
            raise MalformedInput(str(exc)) from exc
    else:
        raise MalformedInput("give a manifest file or --all")
    for row in rows:
        if row.expected is None:
            row.expected = table_entry(row.spec)
    jobs = [(r.spec, r.expected, args.max_order) for r in rows]
    if args.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            results = list(pool.map(_verify_row, jobs, chunksize=1))
    else:
        results = [_verify_row(j) for j in jobs]
    mismatches = sum(1 for r in results if r.get("match") is False)
    capped = sum(1 for r in results if r.get("error") == "cap")
    for r in results:
        if args.format == "json":
            print(json.dumps(r, sort_keys=True))
        elif "error" in r:
            print(f"{r['family']:18s} n={r['n']:<3d} q={r['q']:<3d} CAP    {r['detail']}")
        else:
            status = "ok" if r["match"] else "MISMATCH"
            print(f"{r['family']:18s} n={r['n']:<3d} q={r['q']:<3d} order={r['order']:<6d} "
                  f"got=({r['rank']},{r['nrank']}) expected=({r['expected_rank']},"
                  f"{r['expected_nrank']}) {status}")
    verdict = "PASS" if not mismatches and not capped else "FAIL"
    summary = f"{verdict}: {len(results)} rows, {mismatches} mismatches, {capped} over cap"
    print(summary, file=sys.stderr if args.format == "json" else sys.stdout)
    if mismatches:
        return EXIT_MISMATCH
    return EXIT_CAP if capped else EXIT_OK


def cmd_counts(args) -> int:
    if args.vn:
        p, n = args.vn
        values, checks = v_sequence(p, n)
        if args.format == "json":
            print(json.dumps({"p": p, "v": values, "recursion_ok": checks}))
        else:
            print(f"v = {values}")
            for k, (v, ok) in enumerate(zip(values, checks), 1):
                print(f"  v_{k} = {v}  recursion {'OK' if ok else 'FAILED'}")
        return EXIT_OK if all(checks) else EXIT_MISMATCH
    if not args.base:
        raise MalformedInput("give --vn p n or --base kind,t")
    Q = build_base(BaseGroupSpec.parse(args.base))
    rows = []
    ok = True
    for level in range(1, max(args.levels, 1) + 1):
        inner = iterated_wreath(Q, level - 1, cap=args.cap) if level > 1 else Q
        W = wreath_z2(inner, cap=args.cap)
        d_inner = count_order_p(inner, 2)
        formula = wreath_count_formula(d_inner, inner.order, 2)
        counted = count_order_p(W, 2)
        swap = next(x for x in W.gens if x[0] != tuple(range(2)))
        base = base_subgroup(W)
        coset = count_order_p_in_coset(base, swap, 2)
        rows.append({"level": level, "d": counted, "formula": formula,
                     "coset": coset, "coset_expected": inner.order})
        ok &= counted == formula and coset == inner.order
    if args.format == "json":
        print(json.dumps({"base": args.base, "levels": rows}))
    else:
        for r in rows:
            print(f"d(w_{r['level']}) = {r['d']}  formula {r['formula']}  "
                  f"coset involutions {r['coset']} (|Q| = {r['coset_expected']})")
    return EXIT_OK if ok else EXIT_MISMATCH


def _add_group_source(p: argparse.ArgumentParser):
    p.add_argument("--family", help="classical family, e.g. sl, sp, omega_even_minus")
    p.add_argument("--n", type=int, help="matrix dimension")
    p.add_argument("--q", type=int, help="field size (odd prime power)")
    p.add_argument("--base", help="base group 'kind,t', e.g. q8,2 or dihedral,3")
    p.add_argument("--levels", type=int, default=0, help="wreath levels over --base")
    p.add_argument("--file", help="group file written by 'construct'")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="order cap")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sylowrank",
        description="Sylow 2-subgroups of classical groups and their (normal) 2-ranks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a group and write its serialization")
    _add_group_source(p)
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("rank", help="2-rank (and normal 2-rank) with witnesses")
    _add_group_source(p)
    p.add_argument("--normal", action="store_true", help="also compute the normal 2-rank")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("verify-table", help="compare searched ranks with the closed-form table")
    p.add_argument("manifest", nargs="?", help="file of 'family n q [rank nrank]' lines")
    p.add_argument("--all", action="store_true", help="every supported row under --max-order")
    p.add_argument("--max-order", type=int, default=DEFAULT_TABLE_CAP)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="json")
    p.set_defaults(func=cmd_verify_table)

    p = sub.add_parser("counts", help="involution counts in wreath products")
    p.add_argument("--vn", nargs=2, type=int, metavar=("P", "N"),
                   help="fixed-point-free order-p counts v_1..v_N")
    p.add_argument("--base", help="base group 'kind,t'")
    p.add_argument("--levels", type=int, default=1)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_counts)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if min(getattr(args, "cap", 1), getattr(args, "workers", 1), getattr(args, "max_order", 1)) < 1:
        print("error: cap and workers must be at least 1", file=sys.stderr)
        return EXIT_MALFORMED
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except UnsupportedCase as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (MalformedInput, BadParameter) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except GroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
