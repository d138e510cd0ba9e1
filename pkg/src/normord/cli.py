"""Command-line front end.

Four subcommands: `order` normal-orders an operator expression, `seq`
exports Bell numbers or polynomial coefficient rows (through the disk
cache), `verify` runs identity checks, `cache` manages the disk cache.
Global flags may appear before or after the subcommand.  Exit codes:
0 ok, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from pathlib import Path

from .cache import cache_clear, default_cache_dir, load_triangle
from .parser import ParseError, parse_expr
from .serialize import (
    normal_form_table,
    normal_form_to_json,
    poly_rows_table,
    poly_rows_to_dict,
    sequence_bfile,
    sequence_table,
    sequence_to_json,
)
from .suite import reports_to_json, run_identity, run_suite, suite_passed
from .weyl import NormalForm, normal_order_rewrite

__all__ = ["Config", "main", "build_parser"]

DEFAULT_TOLERANCE = Fraction(1, 10**30)


@dataclass(frozen=True)
class Config:
    series_order: int = 32
    lambda_order: int = 8
    precision: int = 50
    tolerance: Fraction = DEFAULT_TOLERANCE
    cache_dir: Path = field(default_factory=default_cache_dir)
    fmt: str = "json"

    def __post_init__(self):
        if self.fmt not in ("json", "table", "bfile"):
            raise ValueError(f"unknown output format {self.fmt!r}")
        if self.series_order < 1:
            raise ValueError("series order must be >= 1")
        if self.lambda_order < 0:
            raise ValueError("lambda order must be >= 0")
        if self.precision < 30:
            raise ValueError("precision must be at least 30 digits")
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        floor = Fraction(1, 10 ** (self.precision - 10))
        if self.tolerance < floor:
            raise ValueError(
                "tolerance tighter than the precision supports "
                "(need tolerance >= 10^-(precision-10))"
            )


def _parse_tolerance(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        pass
    try:
        return Fraction(Decimal(text))
    except (InvalidOperation, ValueError) as exc:
        raise ValueError(f"cannot parse tolerance {text!r}") from exc


def _parse_expectation(text: str):
    parts = text.split(",")
    if len(parts) > 2:
        raise ValueError("expectation takes RE or RE,IM")
    re_part = Fraction(parts[0].strip())
    im_part = Fraction(parts[1].strip()) if len(parts) == 2 else Fraction(0)
    return re_part, im_part


def _format_complex(re_part: Fraction, im_part: Fraction) -> str:
    if im_part == 0:
        return str(re_part)
    sign = "+" if im_part >= 0 else "-"
    return f"{re_part} {sign} {abs(im_part)}i"


def _add_global_flags(p: argparse.ArgumentParser):
    g = p.add_argument_group("global options")
    g.add_argument("--format", choices=("json", "table", "bfile"),
                   default=argparse.SUPPRESS,
                   help="output format (default json)")
    g.add_argument("--order", type=int, default=argparse.SUPPRESS,
                   help="series truncation order (default 32)")
    g.add_argument("--lambda-order", dest="lambda_order", type=int,
                   default=argparse.SUPPRESS,
                   help="highest retained power of the expansion parameter")
    g.add_argument("--precision", type=int, default=argparse.SUPPRESS,
                   help="working decimal digits for numeric checks (>= 30)")
    g.add_argument("--tolerance", default=argparse.SUPPRESS,
                   help="numeric tolerance, rational or decimal string")
    g.add_argument("--cache-dir", dest="cache_dir", default=argparse.SUPPRESS,
                   help="cache directory (default $NORMORD_CACHE_DIR)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="normord",
        description="Exact normal ordering of boson operator expressions, "
        "the attached number triangles, and their verification suite.",
    )
    _add_global_flags(parser)
    sub = parser.add_subparsers(dest="command", required=True)

    p_order = sub.add_parser("order", help="normal-order an operator expression")
    p_order.add_argument("expr", help="expression over a, ad, rationals, + - * ^ ()")
    p_order.add_argument("--power", type=int, default=1,
                         help="raise the expression to this power first")
    p_order.add_argument("--expectation", metavar="Z",
                         help="print the coherent expectation at z = RE[,IM]")
    _add_global_flags(p_order)

    p_seq = sub.add_parser("seq", help="export Bell numbers or polynomial rows")
    p_seq.add_argument("r", type=int)
    p_seq.add_argument("M", type=int)
    p_seq.add_argument("n_max", type=int)
    kind = p_seq.add_mutually_exclusive_group()
    kind.add_argument("--number", action="store_true", default=True,
                      help="weight-one values (default)")
    kind.add_argument("--poly", action="store_true", default=False,
                      help="coefficient rows instead of values")
    _add_global_flags(p_seq)

    p_verify = sub.add_parser("verify", help="run identity checks")
    p_verify.add_argument("identity", help='an identity id or "all"')
    p_verify.add_argument("--r", type=int, default=None)
    p_verify.add_argument("--M", type=int, default=None)
    p_verify.add_argument("--n", type=int, default=None)
    _add_global_flags(p_verify)

    p_cache = sub.add_parser("cache", help="manage the triangle cache")
    p_cache.add_argument("action", choices=("clear",))
    _add_global_flags(p_cache)

    return parser


def _config_from_namespace(ns: argparse.Namespace) -> Config:
    kwargs = {}
    if hasattr(ns, "order"):
        kwargs["series_order"] = ns.order
    if hasattr(ns, "lambda_order"):
        kwargs["lambda_order"] = ns.lambda_order
    if hasattr(ns, "precision"):
        kwargs["precision"] = ns.precision
    if hasattr(ns, "tolerance"):
        kwargs["tolerance"] = _parse_tolerance(ns.tolerance)
    if hasattr(ns, "cache_dir"):
        kwargs["cache_dir"] = Path(ns.cache_dir)
    if hasattr(ns, "format"):
        kwargs["fmt"] = ns.format
    return Config(**kwargs)


def cmd_order(cfg: Config, ns: argparse.Namespace) -> int:
    if ns.power < 1:
        print("error: --power must be >= 1", file=sys.stderr)
        return 2
    try:
        expr = parse_expr(ns.expr)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    base = normal_order_rewrite(expr)
    result = NormalForm.one()
    for _ in range(ns.power):
        result = result * base
    if ns.expectation is not None:
        try:
            re_part, im_part = _parse_expectation(ns.expectation)
        except (ValueError, ZeroDivisionError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        print(_format_complex(*result.coherent_expectation(re_part, im_part)))
        return 0
    if cfg.fmt == "json":
        print(normal_form_to_json(result))
    elif cfg.fmt == "table":
        print(normal_form_table(result))
    else:
        print("error: b-file output applies to `seq --number` only",
              file=sys.stderr)
        return 2
    return 0


def cmd_seq(cfg: Config, ns: argparse.Namespace) -> int:
    if ns.r < 0 or ns.M < 0 or ns.n_max < 0:
        print("error: r, M, n_max must be nonnegative", file=sys.stderr)
        return 2
    rows, _, warning = load_triangle(ns.r, ns.M, ns.n_max, cfg.cache_dir)
    if warning:
        print(f"warning: {warning}", file=sys.stderr)
    if ns.poly:
        if cfg.fmt == "json":
            import json as _json

            print(_json.dumps(poly_rows_to_dict(ns.r, ns.M, rows), indent=2))
        elif cfg.fmt == "table":
            print(poly_rows_table(ns.r, ns.M, rows))
        else:
            print("error: b-file output applies to `seq --number` only",
                  file=sys.stderr)
            return 2
        return 0
    values = [sum(row) for row in rows]
    if cfg.fmt == "json":
        print(sequence_to_json(ns.r, ns.M, values))
    elif cfg.fmt == "table":
        print(sequence_table(ns.r, ns.M, values))
    else:
        sys.stdout.write(sequence_bfile(values))
    return 0


def cmd_verify(cfg: Config, ns: argparse.Namespace) -> int:
    if cfg.fmt == "bfile":
        print("error: b-file output applies to `seq --number` only",
              file=sys.stderr)
        return 2
    lam = ns.lambda_order if hasattr(ns, "lambda_order") else None
    try:
        if ns.identity == "all":
            reports = run_suite(precision=cfg.precision, tolerance=cfg.tolerance)
        else:
            reports = run_identity(
                ns.identity,
                r=ns.r,
                M=ns.M,
                n=ns.n,
                lambda_order=lam,
                precision=cfg.precision,
                tolerance=cfg.tolerance,
            )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if cfg.fmt == "json":
        print(reports_to_json(reports))
    else:
        for rep in reports:
            params = " ".join(f"{k}={v}" for k, v in rep.parameters.items())
            print(f"{rep.status:<13} {rep.identity} {params}")
    return 0 if suite_passed(reports) else 1


def cmd_cache(cfg: Config, ns: argparse.Namespace) -> int:
    removed = cache_clear(cfg.cache_dir)
    print(f"removed {removed} cache file(s)")
    return 0


_DISPATCH = {"order": cmd_order, "seq": cmd_seq, "verify": cmd_verify,
             "cache": cmd_cache}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        cfg = _config_from_namespace(ns)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return _DISPATCH[ns.command](cfg, ns)


if __name__ == "__main__":
    raise SystemExit(main())
