"""Command-line front end.

Subcommands::

    eval EXPR                 evaluate an expression
    convert --to FORM EXPR    evaluate, then convert to polar/cartesian
    roots EXPR N              all N-th roots of an expression's value
    audit [...]               run the law audit and emit the report

Exit codes: 0 success, 1 parse/type/usage error, 2 arithmetic error,
3 audit found failing law samples (the report is still written).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import audit as audit_mod
from . import expr as expr_mod
from ._version import VERSION
from .core import CartesianHC, Orientation, PolarHC, Tolerance, to_polar
from .expr import ExprTypeError, ParseError, RootsValue
from .space3 import Space3Polar, to_polar3

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_ARITHMETIC = 2
EXIT_AUDIT_FAILURES = 3


class _ArgumentParser(argparse.ArgumentParser):
    # usage mistakes share the parse-error exit code, not argparse's 2
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _add_expr_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--orientation",
        choices=["ccw", "cw"],
        default="ccw",
        help="angle-chain accumulation order (default: ccw)",
    )
    p.add_argument(
        "--digits", type=int, default=12, help="significant digits in text output"
    )
    p.add_argument(
        "--format", choices=["text", "json"], default="text", help="output format"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="hsc", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"hsc {VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate an expression")
    _add_expr_flags(p_eval)
    p_eval.add_argument("expr", help="expression text")

    p_conv = sub.add_parser("convert", help="convert a value between forms")
    _add_expr_flags(p_conv)
    p_conv.add_argument("--to", choices=["polar", "cartesian"], required=True)
    p_conv.add_argument("expr", help="expression text")

    p_roots = sub.add_parser("roots", help="all n-th roots of a value")
    _add_expr_flags(p_roots)
    p_roots.add_argument("expr", help="expression text")
    p_roots.add_argument("n", type=int, help="root order (>= 1)")

    p_audit = sub.add_parser("audit", help="run the law audit")
    p_audit.add_argument(
        "--dim", type=int, action="append", help="dimension to audit (repeatable)"
    )
    p_audit.add_argument("--samples", type=int, default=1000)
    p_audit.add_argument("--seed", type=int, default=42)
    p_audit.add_argument(
        "--law",
        action="append",
        choices=list(audit_mod.LAW_IDS),
        help="law to audit (repeatable; default: all)",
    )
    p_audit.add_argument(
        "--domain",
        choices=[d.value for d in audit_mod.Domain],
        default=audit_mod.Domain.UNRESTRICTED.value,
    )
    p_audit.add_argument("--abs-eps", type=float, default=1e-12)
    p_audit.add_argument("--rel-eps", type=float, default=1e-9)
    p_audit.add_argument("--format", choices=["json", "markdown"], default="json")
    p_audit.add_argument("--out", help="write the report here instead of stdout")
    return parser


def _evaluate(args) -> expr_mod.Value:
    tree = expr_mod.parse(args.expr)
    orientation = Orientation.ANTICLOCKWISE if args.orientation == "ccw" else Orientation.CLOCKWISE
    return expr_mod.evaluate(tree, orientation)


def _emit(value: expr_mod.Value, args) -> None:
    if args.format == "json":
        print(json.dumps(expr_mod.value_to_dict(value)))
    else:
        print(expr_mod.format_value(value, args.digits))


def _project(value: expr_mod.Value) -> expr_mod.Value:
    # eval reports coordinate form; polar stays available via `convert`
    if isinstance(value, PolarHC):
        return expr_mod._cart(value)
    if isinstance(value, Space3Polar):
        return expr_mod._cart3(value)
    return value


def _cmd_eval(args) -> int:
    _emit(_project(_evaluate(args)), args)
    return EXIT_OK


def _cmd_convert(args) -> int:
    value = _evaluate(args)
    orientation = Orientation.ANTICLOCKWISE if args.orientation == "ccw" else Orientation.CLOCKWISE
    if isinstance(value, (float, RootsValue)):
        raise ExprTypeError(0, "convert expects a number-valued expression")
    if isinstance(value, (CartesianHC, PolarHC)):
        if args.to == "polar":
            value = to_polar(expr_mod._cart(value), orientation)
        else:
            value = expr_mod._cart(value)
    else:
        if args.to == "polar":
            value = to_polar3(expr_mod._cart3(value))
        else:
            value = expr_mod._cart3(value)
    _emit(value, args)
    return EXIT_OK


def _cmd_roots(args) -> int:
    if args.n < 1:
        raise ExprTypeError(0, f"root order must be >= 1, got {args.n}")
    value = _evaluate(args)
    if isinstance(value, (float, RootsValue)):
        raise ExprTypeError(0, "roots expects a number-valued expression")
    orientation = Orientation.ANTICLOCKWISE if args.orientation == "ccw" else Orientation.CLOCKWISE
    if isinstance(value, (CartesianHC, PolarHC)):
        from . import algebra

        items = tuple(algebra.nth_roots(expr_mod._cart(value), args.n, orientation))
    else:
        from .space3 import pow_roots3

        items = pow_roots3(expr_mod._cart3(value), args.n)[1]
    _emit(RootsValue(items), args)
    return EXIT_OK


def _cmd_audit(args) -> int:
    cfg = audit_mod.AuditConfig(
        dims=tuple(args.dim) if args.dim else (2, 3, 4),
        samples=args.samples,
        seed=args.seed,
        tolerance=Tolerance(args.abs_eps, args.rel_eps),
        domain=audit_mod.Domain(args.domain),
    )
    report = audit_mod.run_audit(cfg, args.law)
    if args.format == "json":
        rendered = audit_mod.report_to_json(report) + "\n"
    else:
        rendered = audit_mod.report_to_markdown(report) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(rendered)
    else:
        sys.stdout.write(rendered)
    return EXIT_AUDIT_FAILURES if audit_mod.has_failures(report) else EXIT_OK


_COMMANDS = {
    "eval": _cmd_eval,
    "convert": _cmd_convert,
    "roots": _cmd_roots,
    "audit": _cmd_audit,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ParseError, ExprTypeError) as exc:
        print(f"hsc: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ZeroDivisionError, ValueError) as exc:
        print(f"hsc: arithmetic error: {exc}", file=sys.stderr)
        return EXIT_ARITHMETIC


if __name__ == "__main__":
    sys.exit(main())
