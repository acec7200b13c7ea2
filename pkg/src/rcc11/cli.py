"""Command-line interface: tables, verify, classify, solve.

Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
3 inconsistency result. All randomized commands take explicit seeds and
echo them in their reports, so every run is reproducible byte for byte.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bw, intervals as iv
from .disks import nine_matrix, parse_scene
from .disks import classify as classify_disks
from .network import closure, network_json, parse_network, scenario_search
from .relations import CALCULI, reduction_stats
from .suites import SUITES
from .table import (
    GENERATOR_PAIRS,
    derive_table,
    diff_tables,
    dump_table,
    golden_table,
    load_table,
    validate_table,
)

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_INCONSISTENT = 3


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------

def cmd_tables(args: argparse.Namespace) -> int:
    calculus = CALCULI[args.calculus.upper()]
    stats = reduction_stats(calculus)
    derived = derive_table()
    report = validate_table(derived)
    try:
        golden = load_table(args.golden) if args.golden else golden_table()
    except (OSError, ValueError) as exc:
        print(f"error: cannot load golden table: {exc}", file=sys.stderr)
        return EXIT_USAGE
    diffs = diff_tables(derived, golden)

    payload = {
        "calculus": calculus.name,
        "generator_count": len(GENERATOR_PAIRS),
        "identities_checked": report.identities_checked,
        "violations": [f"{v.law}@{','.join(v.where)}: {v.detail}"
                       for v in report.violations],
        "equals_golden": not diffs,
        "golden_diffs": diffs,
        "reduction": {"r": stats.r, "s": stats.s, "m": stats.m, "n": stats.n,
                      "T": stats.T,
                      "ratio": f"{stats.ratio.numerator}/{stats.ratio.denominator}"},
    }
    try:
        if args.table_out:
            with open(args.table_out, "w", encoding="utf-8") as fh:
                fh.write(dump_table(derived))
        _emit(payload, args.out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK if report.ok and not diffs else EXIT_VERIFY_FAIL


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args: argparse.Namespace) -> int:
    try:
        suite = SUITES[args.suite]
    except KeyError:
        print(f"error: unknown suite {args.suite!r}; choose from "
              f"{', '.join(sorted(SUITES))}", file=sys.stderr)
        return EXIT_USAGE

    kwargs: dict = {}
    if args.suite == "dual-laws":
        kwargs = {"seed": args.seed, "samples": args.trials or 100_000}
    elif args.suite == "disk-soundness":
        kwargs = {"seed": args.seed, "trials": args.trials or 10_000,
                  "budget": args.budget}
    elif args.suite == "disk-extensionality":
        kwargs = {"seed": args.seed, "instances": args.trials or 10,
                  "budget": args.budget}
    elif args.suite == "bw-axioms":
        kwargs = {"depth": args.depth or 3}
    elif args.suite == "bw-chains":
        kwargs = {"chain_depth": max(5, args.depth or 5),
                  "search_depth": min(4, args.depth or 4)}
    elif args.suite == "bw-pody":
        kwargs = {"depths": (3, args.depth) if args.depth else (3, 4)}
    elif args.suite == "bw-soundness":
        kwargs = {"depth": min(args.depth or 3, 3), "seed": args.seed,
                  "samples": args.trials or 4000}
    elif args.suite == "holes-1d":
        kwargs = {"k_max": args.k, "seed": args.seed}

    report = suite(**kwargs)
    _emit(report, args.out)
    return EXIT_OK if report["passed"] else EXIT_VERIFY_FAIL


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------

def _classify_scene(text: str, want_matrices: bool,
                    depth: int | None) -> tuple[str, int]:
    data = json.loads(text)
    domain = data.get("domain", "disk")
    if domain == "disk":
        regions = parse_scene(text)
        pairs = sorted(
            ((i1, i2) for i1, _ in regions for i2, _ in regions if i1 != i2))
        lookup = dict(regions)
        if want_matrices:
            lines = ["id1,id2,relation,m11,m12,m13,m21,m22,m23,m31,m32,m33"]
            for i1, i2 in pairs:
                m = nine_matrix(lookup[i1], lookup[i2])
                rel = classify_disks(lookup[i1], lookup[i2])
                flat = ",".join(str(v) for row in m for v in row)
                lines.append(f"{i1},{i2},{rel.name},{flat}")
        else:
            lines = ["id1,id2,relation"]
            for i1, i2 in pairs:
                rel = classify_disks(lookup[i1], lookup[i2])
                lines.append(f"{i1},{i2},{rel.name}")
        return "\n".join(lines) + "\n", EXIT_OK

    if want_matrices:
        raise ValueError("--matrices applies to disk scenes only")

    parsed: list[tuple[str, object]] = []
    if domain == "bw":
        d = data.get("depth", depth)
        if not d:
            raise ValueError("bw scenes need a depth (file key or --depth)")
        for item in data["regions"]:
            parsed.append((item["id"], bw.parse_region(item["region"], int(d))))
        classify_fn = bw.classify11
    elif domain == "interval":
        for item in data["regions"]:
            parsed.append((item["id"], iv.parse_interval_region(item["region"])))
        classify_fn = iv.classify11
    else:
        raise ValueError(f"unknown scene domain {domain!r}")

    ids = [i for i, _ in parsed]
    if len(set(ids)) != len(ids):
        raise ValueError("duplicate region ids")
    lookup2 = dict(parsed)
    lines = ["id1,id2,relation"]
    for i1, i2 in sorted((x, y) for x in ids for y in ids if x != y):
        lines.append(f"{i1},{i2},{classify_fn(lookup2[i1], lookup2[i2]).name}")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    try:
        with open(args.scene, encoding="utf-8") as fh:
            text = fh.read()
        csv, code = _classify_scene(text, args.matrices, args.depth)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _write(csv, args.out)
    return code


# ---------------------------------------------------------------------------
# solve
# ---------------------------------------------------------------------------

def cmd_solve(args: argparse.Namespace) -> int:
    try:
        with open(args.network, encoding="utf-8") as fh:
            net = parse_network(fh.read())
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.scenario:
        scenario = scenario_search(net)
        if scenario is None:
            _emit({"result": "none"}, args.out)
            return EXIT_INCONSISTENT
        _emit({"result": "scenario", "network": network_json(scenario)},
              args.out)
        return EXIT_OK

    closed = closure(net)
    if closed is None:
        _emit({"result": "inconsistent"}, args.out)
        return EXIT_INCONSISTENT
    _emit({"result": "consistent", "network": network_json(closed)}, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rcc11",
        description="RCC11 relation algebra, models, and constraint solving")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tables", help="derive, validate and export the table")
    p.add_argument("--calculus", default="rcc11", choices=["rcc11", "rcc7"],
                   help="calculus for the reduction statistics")
    p.add_argument("--golden", help="path of a golden table to compare against")
    p.add_argument("--table-out", help="write the derived table here")
    p.add_argument("--out", help="write the JSON report here (default stdout)")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help=f"one of: {', '.join(sorted(SUITES))}")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--depth", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="classify all region pairs of a scene")
    p.add_argument("scene", help="scene file (JSON)")
    p.add_argument("--matrices", action="store_true",
                   help="append 9-intersection matrices (disk scenes)")
    p.add_argument("--depth", type=int, help="depth for bw scenes")
    p.add_argument("--out")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("solve", help="algebraic closure / scenario search")
    p.add_argument("network", help="network file (JSON)")
    p.add_argument("--scenario", action="store_true",
                   help="search for an atomic scenario")
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
