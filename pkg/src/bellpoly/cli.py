"""Command-line front end.

    bellpoly table  --family stirling2 --nmax 6 [--kmax K] [--format text|csv|json]
    bellpoly poly   --family bell|abell|potential|facl|facu --n N --k K [--format ...]
    bellpoly assoc  --family upper|lower --n N --k K [--format ...]
    bellpoly verify [--identity NAME|all] [--nmax N] [--kmax K] [--seed S] [--format ...]

Exit status: 0 success, 1 usage error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable, Dict, List, Optional, Sequence

from . import numfam
from .bell import abell, bell
from .combinat import NumberFamilyId
from .facpoly import lower, potential, upper
from .polyring import Polynomial
from .table import TriangularTable
from .verify import DEFAULT_IDENTITIES, IDENTITIES, LimitError, number_limit, run_identity

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2

FORMATS = ("text", "csv", "json")

ASSOC_FAMILIES: Dict[str, Callable[[int, int], int]] = {
    "upper-assoc": numfam.upper_assoc,
    "lower-assoc": numfam.lower_assoc,
}
TABLE_FAMILIES = [f.value for f in NumberFamilyId] + list(ASSOC_FAMILIES)

POLY_FAMILIES: Dict[str, Callable[[int, int], Polynomial]] = {
    "bell": bell,
    "abell": abell,
    "potential": potential,
    "facl": lower,
    "facu": upper,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_table(family: str, nmax: int, kmax: Optional[int] = None) -> TriangularTable:
    limit = number_limit()
    kmax = nmax if kmax is None else kmax
    if not (1 <= nmax <= limit and 1 <= kmax <= limit):
        raise UsageError(f"nmax and kmax must lie in 1..{limit}")
    if family in ASSOC_FAMILIES:
        return TriangularTable.build(ASSOC_FAMILIES[family], nmax, kmax, n_start=1, k_start=1,
                                     triangular=False)
    try:
        fam = NumberFamilyId(family)
    except ValueError:
        raise UsageError(f"unknown family {family!r}") from None
    return TriangularTable.build(fam.generator, nmax, kmax)


def format_table(table: TriangularTable, family: str, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"family": family, **table.to_json()})
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerows(table.rows)
        return buf.getvalue().rstrip("\n")
    ks = list(range(table.k_start, table.kmax + 1))
    header = ["n\\k"] + [str(k) for k in ks]
    body = [[str(n)] + [str(v) for v in row]
            for n, row in enumerate(table.rows, start=table.n_start)]
    widths = [max(len(r[i]) for r in [header] + body if i < len(r)) for i in range(len(header))]
    lines = ["  ".join(cell.rjust(widths[i]) for i, cell in enumerate(r)) for r in [header] + body]
    return "\n".join(line.rstrip() for line in lines)


def build_poly(family: str, n: int, k: int) -> Polynomial:
    limit = number_limit()
    if family not in POLY_FAMILIES:
        raise UsageError(f"unknown family {family!r}")
    if n < 0 or n > limit or abs(k) > limit:
        raise UsageError(f"need 0 <= n <= {limit} and |k| <= {limit}")
    if family != "potential" and k < 0:
        raise UsageError(f"{family} needs k >= 0")
    if family in ("bell", "abell") and k > n:
        raise UsageError(f"{family} needs k <= n")
    return POLY_FAMILIES[family](n, k)


def format_poly(p: Polynomial, family: str, n: int, k: int, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"family": family, "n": n, "k": k, "terms": p.to_json()})
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["coeff", "monomial"])
        for mono, c in p.sorted_terms():
            writer.writerow([c, "*".join(f"X{v}" if e == 1 else f"X{v}^{e}" for v, e in mono) or "1"])
        return buf.getvalue().rstrip("\n")
    return p.to_canonical_string()


def _cmd_table(args: argparse.Namespace) -> int:
    table = build_table(args.family, args.nmax, args.kmax)
    print(format_table(table, args.family, args.format))
    return EXIT_OK


def _cmd_poly(args: argparse.Namespace) -> int:
    p = build_poly(args.family, args.n, args.k)
    print(format_poly(p, args.family, args.n, args.k, args.format))
    return EXIT_OK


def _cmd_assoc(args: argparse.Namespace) -> int:
    if args.n < 1 or args.k < 0:
        raise UsageError("need n >= 1 and k >= 0")
    fn = numfam.upper_assoc if args.family == "upper" else numfam.lower_assoc
    value = fn(args.n, args.k)
    if args.format == "json":
        print(json.dumps({"family": args.family, "n": args.n, "k": args.k, "value": value}))
    elif args.format == "csv":
        print(f"{args.family},{args.n},{args.k},{value}")
    else:
        print(value)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.identity == "all":
        names = DEFAULT_IDENTITIES
    elif args.identity in IDENTITIES:
        names = [args.identity]
    else:
        raise UsageError(f"unknown identity {args.identity!r}; known: all, {', '.join(IDENTITIES)}")
    reports = []
    for name in names:
        try:
            report = run_identity(name, args.nmax, args.kmax, args.seed)
        except LimitError as exc:
            raise UsageError(str(exc)) from None
        reports.append(report)
        if args.format == "json":
            print(report.to_json())
        elif args.format == "csv":
            ce = report.counterexample
            row = [report.identity, report.range[0], report.range[1], str(report.passed).lower(),
                   report.checked] + ([ce.n, ce.k, ce.lhs, ce.rhs] if ce else ["", "", "", ""])
            buf = io.StringIO()
            csv.writer(buf, lineterminator="").writerow(row)
            print(buf.getvalue())
        else:
            print(report.to_text())
        if args.timing:
            print(f"{name}: {report.elapsed:.3f}s", file=sys.stderr)
        sys.stdout.flush()
    failed = [r.identity for r in reports if not r.passed]
    if args.format == "text":
        print(f"{len(reports) - len(failed)}/{len(reports)} identities passed")
    return EXIT_FAILED if failed else EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bellpoly", description="Bell, potential and factorial polynomials; identity checks")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("table", help="emit a number-family grid")
    p.add_argument("--family", required=True, choices=TABLE_FAMILIES)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--kmax", type=int)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("poly", help="print one polynomial")
    p.add_argument("--family", required=True, choices=list(POLY_FAMILIES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=_cmd_poly)

    p = sub.add_parser("assoc", help="one associated factorial number")
    p.add_argument("--family", choices=["upper", "lower"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=_cmd_assoc)

    p = sub.add_parser("verify", help="check identities over index ranges")
    p.add_argument("--identity", default="all")
    p.add_argument("--nmax", type=int)
    p.add_argument("--kmax", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--timing", action="store_true", help="report elapsed time per identity on stderr")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, LimitError) as exc:
        print(f"bellpoly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
