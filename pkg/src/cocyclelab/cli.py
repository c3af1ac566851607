"""Command-line front end: ``cocyclelab {weyl,table,pages,verify}``.

Exit status is 0 on success, 1 when a verification check fails and 2 on
usage errors. Results go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from cocyclelab.cocycles import CHECKS, PROPERTY_CHECKS, verify
from cocyclelab.cohomology import (
    corollary_even_degree_check,
    invariant_dims,
    kernel_table,
    spectral_pages,
)
from cocyclelab.errors import CocycleLabError
from cocyclelab.roots import build_root_system, parse_types
from cocyclelab.weyl import longest_element

SEED_ENV = "COCYCLELAB_SEED"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _int_list(text: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values or any(v < 0 for v in values):
        raise argparse.ArgumentTypeError(f"expected non-negative integers, got {text!r}")
    return values


def _dims(text: str) -> tuple[int, int]:
    values = _int_list(text)
    if len(values) != 2 or min(values) < 2:
        raise argparse.ArgumentTypeError(f"--dims needs two hyperbolic dimensions >= 2, got {text!r}")
    return values[0], values[1]


def _non_negative(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return v


def _positive(text: str) -> int:
    v = _non_negative(text)
    if v == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}")
    if not v > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return v


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return _non_negative(raw)
    except argparse.ArgumentTypeError:
        raise UsageError(f"{SEED_ENV} must be a non-negative integer, got {raw!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cocyclelab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("weyl", help="longest Weyl element report")
    p.add_argument("--type", required=True, dest="type_spec", help='root system type, e.g. "G2" or "B2,A2"')
    p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("table", help="kernel dimension table per degree")
    p.add_argument("--factors", required=True, help='root system type, e.g. "A1,A1"')
    p.add_argument("--max-degree", type=_non_negative, default=None,
                   help="highest degree to tabulate (default: rank + 3)")
    p.add_argument("--hg", type=_int_list, default=None, help="known dims of H^p(G), comma-separated")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")

    p = sub.add_parser("pages", help="second spectral sequence pages")
    p.add_argument("--factors", required=True)
    p.add_argument("--max-p", type=_non_negative, default=None, help="default: rank + 1")
    p.add_argument("--max-q", type=_non_negative, default=4)
    p.add_argument("--hg", type=_int_list, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="Monte Carlo check of the cross-ratio cocycles")
    p.add_argument("--check", required=True, choices=CHECKS + PROPERTY_CHECKS)
    p.add_argument("--dims", type=_dims, default=(3, 4), help="hyperbolic dimensions n,m (each >= 2)")
    p.add_argument("--trials", type=_positive, default=1000)
    p.add_argument("--tol", type=_positive_float, default=1e-8)
    p.add_argument("--seed", type=_non_negative, default=None, help=f"default: ${SEED_ENV} or 0")
    p.add_argument("--separation", type=_positive_float, default=0.1)
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--format", choices=("json", "text"), default="text")
    return parser


def _analyze(type_str: str):
    rs = build_root_system(parse_types(type_str))
    return rs, longest_element(rs)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _cmd_weyl(args, out) -> int:
    _, rep = _analyze(args.type_spec)
    d = rep.to_dict()
    if args.format == "json":
        print(_dump(d), file=out)
    else:
        print(f"type        {d['type']}", file=out)
        print(f"rank        {d['rank']}", file=out)
        print(f"word_length {d['word_length']}", file=out)
        print(f"word        {' '.join(map(str, d['word']))}", file=out)
        print(f"signature   s={d['s']} t={d['t']}", file=out)
        print(f"minus_one   {str(d['minus_one']).lower()}", file=out)
        print(f"action ({d['basis']} basis)", file=out)
        for row in d["action"]:
            print("  " + " ".join(f"{x:>6}" for x in row), file=out)
    return 0


def _table_payload(type_str, max_degree, hg):
    rs, rep = _analyze(type_str)
    if max_degree is None:
        max_degree = rs.rank + 3
    inv = invariant_dims(rep.signature, max_degree)
    table = kernel_table(inv, max_degree, hg)
    return rs, rep, inv, table


def _cmd_table(args, out) -> int:
    rs, rep, inv, table = _table_payload(args.factors, args.max_degree, args.hg)
    rows = table.rows()
    s, t = inv.signature
    if args.format == "json":
        payload = {
            "type": rs.label,
            "rank": rs.rank,
            "s": s,
            "t": t,
            "minus_one": rep.minus_one,
            "max_degree": table.max_degree,
            "even_degree_alt_isomorphism": corollary_even_degree_check(inv),
            "rows": rows,
            "pages": [pg.to_dict() for pg in spectral_pages(inv, table.max_degree, 4, args.hg)],
        }
        print(_dump(payload), file=out)
        return 0
    print(f"# type={rs.label} rank={rs.rank} s={s} t={t} minus_one={str(rep.minus_one).lower()}", file=out)
    cols = list(rows[0])
    print("\t".join(cols), file=out)
    for row in rows:
        print("\t".join("" if row[c] is None else str(row[c]) for c in cols), file=out)
    return 0


def _cmd_pages(args, out) -> int:
    rs, rep = _analyze(args.factors)
    max_p = rs.rank + 1 if args.max_p is None else args.max_p
    inv = invariant_dims(rep.signature, max_p)
    pages = spectral_pages(inv, max_p, args.max_q, args.hg)
    if args.format == "json":
        print(_dump({"type": rs.label, "rank": rs.rank, "pages": [pg.to_dict() for pg in pages]}), file=out)
        return 0
    for k, pg in enumerate(pages):
        if k:
            print(file=out)
        print(f"{pg.label} ({rs.label})", file=out)
        cells = [[str(x) for x in pg.row(p)] for p in range(pg.max_p + 1)]
        width = max(len(c) for row in cells for c in row)
        for p in range(pg.max_p, -1, -1):
            print(f"{p:>3} | " + "  ".join(c.rjust(width) for c in cells[p]), file=out)
        print("    +-" + "-" * ((width + 2) * (pg.max_q + 1)), file=out)
        print("      " + "  ".join(str(q).rjust(width) for q in range(pg.max_q + 1)), file=out)
    return 0


def _cmd_verify(args, out) -> int:
    seed = _default_seed() if args.seed is None else args.seed
    report = verify(args.check, dims=args.dims, trials=args.trials, tol=args.tol, seed=seed,
                    separation=args.separation, workers=args.workers)
    if args.format == "json":
        print(_dump(report.to_dict()), file=out)
    else:
        print(report.summary(), file=out)
    return 0 if report.passed else 1


_COMMANDS = {"weyl": _cmd_weyl, "table": _cmd_table, "pages": _cmd_pages, "verify": _cmd_verify}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(exc, file=err)
        return 2
    except CocycleLabError as exc:
        print(f"cocyclelab: {exc}", file=err)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
