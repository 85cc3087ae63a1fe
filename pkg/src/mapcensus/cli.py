"""Command-line front end: ``mapcensus census|verify|oracle``.

Exit codes: 0 success, 1 usage error, 2 verification failure (identity,
divisibility), 3 oracle mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional

from . import burnside, decomposition, oracle
from .series import SeriesError

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_ORACLE = 0, 1, 2, 3

FAMILY_ALIASES = {"maps": "maps", "2c": "two_connected", "3c": "three_connected"}
MODE_ALIASES = {"edges": "by_edges", "vf": "by_vertices_faces"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mapcensus", description="Unrooted census of planar maps, 2-connected "
                "maps and 3-connected maps from exact generating series.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("census", help="compute a census table")
    c.add_argument("--family", choices=["maps", "2c", "3c", "all"], default="maps")
    c.add_argument("--mode", choices=["edges", "vf"], default="edges",
                   help="count by edges, or by (vertices-1, faces-1) with i+j <= max")
    c.add_argument("--max", type=_positive, default=10, dest="max_order")
    c.add_argument("--format", choices=["csv", "json", "text"], default="csv")
    c.add_argument("--output", "-o", help="write here instead of stdout")

    v = sub.add_parser("verify", help="run the decomposition identity suite")
    v.add_argument("--max", type=_positive, default=30, dest="max_order",
                   help="one-variable truncation order")
    v.add_argument("--max-2v", type=_positive, default=20, dest="max_order_2v",
                   help="two-variable total degree")
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.add_argument("--output", "-o")

    o = sub.add_parser("oracle", help="compare brute-force enumeration with the formulas")
    o.add_argument("--budget", type=_positive, default=None,
                   help=f"largest edge count to enumerate (<= {oracle.MAX_BUDGET}; "
                        f"default ${oracle.BUDGET_ENV} or {oracle.DEFAULT_BUDGET})")
    o.add_argument("--format", choices=["text", "json"], default="text")
    o.add_argument("--dump-codes", metavar="PATH", help="also write canonical codes to PATH")
    o.add_argument("--output", "-o")
    return p


def _families(arg: str) -> List[str]:
    if arg == "all":
        return list(FAMILY_ALIASES.values())
    return [FAMILY_ALIASES[arg]]


def _render_tables(tables: List[burnside.CensusTable], fmt: str) -> str:
    if len(tables) == 1:
        t = tables[0]
        if fmt == "csv":
            return t.to_csv()
        if fmt == "json":
            return t.to_json()
    if fmt == "json":
        docs = [json.loads(t.to_json()) for t in tables]
        return json.dumps(docs, indent=1) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        by_edges = tables[0].mode == "by_edges"
        w.writerow(["family", "n", "count"] if by_edges else ["family", "i", "j", "count"])
        for t in tables:
            for key, count in t.rows():
                w.writerow([t.family, key, count] if by_edges else [t.family, *key, count])
        return buf.getvalue()
    out = []
    for t in tables:
        out.append(f"# {t.family}, {t.mode}, max {t.max}")
        for key, count in t.rows():
            label = str(key) if t.mode == "by_edges" else f"{key[0]} {key[1]}"
            out.append(f"{label:>8}  {count}")
    return "\n".join(out) + "\n"


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_census(args) -> int:
    build = burnside.census_edges if args.mode == "edges" else burnside.census_vertices_faces
    try:
        tables = [build(fam, args.max_order) for fam in _families(args.family)]
    except burnside.DivisibilityError as exc:
        print(f"census failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    _emit(_render_tables(tables, args.format), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = decomposition.run_suite(args.max_order, args.max_order_2v)
    _emit(decomposition.format_reports(reports, args.format), args.output)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY


def cmd_oracle(args) -> int:
    try:
        n_max = oracle.oracle_budget(args.budget)
    except (OracleBudgetError, ValueError) as exc:
        print(f"mapcensus oracle: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rep = oracle.oracle_vs_formula(n_max, budget=n_max)
    if args.format == "json":
        doc = {"n_max": rep.n_max, "agreement": rep.ok,
               "compared": [list(c) for c in rep.compared],
               "mismatches": [{"family": f, "mode": m, "key": list(k) if isinstance(k, tuple) else k,
                               "oracle": g, "formula": w} for f, m, k, g, w in rep.mismatches]}
        text = json.dumps(doc, indent=1) + "\n"
    else:
        text = rep.as_text()
    _emit(text, args.output)
    if args.dump_codes:
        oracle.dump_codes(args.dump_codes, n_max, budget=n_max)
    return EXIT_OK if rep.ok else EXIT_ORACLE


OracleBudgetError = oracle.OracleBudgetError


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"census": cmd_census, "verify": cmd_verify, "oracle": cmd_oracle}[args.command]
    try:
        return handler(args)
    except SeriesError as exc:
        print(f"mapcensus: {exc}", file=sys.stderr)
        return EXIT_VERIFY


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
