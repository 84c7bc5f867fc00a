"""Command-line front end: emit the tables and sequences, run the checks.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 enumeration cap exceeded. Set IVPOLY_ENUM_CAP to raise or lower the
brute-force caps.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .constants import c_table, lambda_product, q_table
from .exact_arith import EnumerationCapError, lcm_range
from .stirling import d_table, f_table, stirling_first
from .verify import CHECK_NAMES, VerifyConfig, run_all, run_check

TABLE_KINDS = ("c", "q", "d", "F", "stirling")
SEQ_KINDS = ("lambda", "cn")
FORMATS = ("md", "csv", "json")


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ivpoly",
        description="Exact tables and verified identities for the derivative "
        "stability of integer-valued polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="print one of the triangular tables")
    table.add_argument("kind", choices=TABLE_KINDS)
    table.add_argument("--max-n", type=_nonnegative, default=10)
    table.add_argument("--format", choices=FORMATS, default="md")
    table.set_defaults(handler=cmd_table)

    seq = sub.add_parser("seq", help="print a sequence, one term per line")
    seq.add_argument("kind", choices=SEQ_KINDS)
    seq.add_argument("--max-n", type=_nonnegative, default=10)
    seq.add_argument("--format", choices=FORMATS, default="md")
    seq.add_argument(
        "--factored", action="store_true", help="prime-power form (lambda only)"
    )
    seq.set_defaults(handler=cmd_seq)

    verify = sub.add_parser("verify", help="run the verification checks")
    verify.add_argument("scope", choices=("all",) + CHECK_NAMES)
    verify.add_argument(
        "--max-n",
        type=_nonnegative,
        default=None,
        help="override the range(s) of the selected check(s)",
    )
    verify.set_defaults(handler=cmd_verify)
    return parser


def _fraction_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _table_rows(kind: str, max_n: int) -> list[list[str]]:
    if kind == "F":
        return [[_fraction_str(v) for v in row] for row in f_table(max_n).rows]
    if kind == "stirling":
        return [[str(v) for v in row] for row in stirling_first(max_n).rows]
    if kind == "d":
        return [[str(v) for v in row] for row in d_table(f_table(max_n)).rows]
    if kind == "q":
        return [[str(v) for v in row] for row in q_table(max_n).rows]
    return [[str(v) for v in row] for row in c_table(max_n, d_table(f_table(max_n))).rows]


def _render_table(kind: str, max_n: int, fmt: str) -> str:
    rows = _table_rows(kind, max_n)
    header = ["n"] + [f"k{k}" for k in range(max_n + 1)]
    if fmt == "json":
        return json.dumps({"kind": kind, "max_n": max_n, "rows": rows})
    padded = [
        [str(n)] + row + [""] * (max_n - n) for n, row in enumerate(rows)
    ]
    if fmt == "csv":
        return "\n".join([",".join(header)] + [",".join(row) for row in padded])
    lines = ["| " + " | ".join(header) + " |"]
    lines.append("|" + "---|" * len(header))
    lines.extend("| " + " | ".join(row) + " |" for row in padded)
    return "\n".join(lines)


def cmd_table(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    print(_render_table(args.kind, args.max_n, args.format))
    return 0


def cmd_seq(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.factored and args.kind != "lambda":
        parser.error("--factored is only available for 'seq lambda'")
    if args.kind == "lambda":
        factorizations = [lambda_product(n) for n in range(args.max_n + 1)]
        if args.factored:
            values = [str(pf) for pf in factorizations]
        else:
            values = [str(pf.value()) for pf in factorizations]
    else:
        values = [str(lcm_range(n)) for n in range(args.max_n + 1)]
    if args.format == "json":
        print(json.dumps(values))
    else:
        print("\n".join(values))
    return 0


def _config_from_env_and_args(
    args: argparse.Namespace, parser: argparse.ArgumentParser
) -> VerifyConfig:
    cap = os.environ.get("IVPOLY_ENUM_CAP")
    config = VerifyConfig()
    if cap is not None:
        try:
            cap_value = int(cap)
        except ValueError:
            cap_value = 0
        if cap_value < 1:
            parser.error(f"IVPOLY_ENUM_CAP must be a positive integer, got {cap!r}")
        config = VerifyConfig(enum_cap=cap_value, oracle_cap=cap_value)
    if args.max_n is not None:
        scope = None if args.scope == "all" else args.scope
        config = config.with_max_n(args.max_n, scope)
    return config


def cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    config = _config_from_env_and_args(args, parser)
    if args.scope == "all":
        reports = run_all(config)
    else:
        reports = [run_check(args.scope, config)]
    failed = False
    for report in reports:
        status = "pass" if report.passed else "FAIL"
        line = f"{report.name}: {status} [{report.tested}]"
        if report.counterexample is not None:
            line += f" counterexample {report.counterexample}"
        print(line)
        failed = failed or not report.passed
    return 1 if failed else 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, parser)
    except EnumerationCapError as error:
        print(f"ivpoly: error: {error}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
