"""Command-line surface for quadrature runs, limits by shadow and Levi-Civita inspection.

Subcommands:
  quadrature  Gregory's double sequence to a tolerance (certified enclosure of the termination)
  limit       Limit of a closed-form sequence as the shadow of its value at omega
  terminate   Termination of a closed-form double sequence (lower, upper)
  adequal     Are two Levi-Civita expressions infinitely close?
  shadow      Standard part of a Levi-Civita expression
  epscheck    Sampling epsilon-N check of a proposed limit
  schema      JSON schema of every report

Examples:
  sixthop quadrature --preset squares --tol 1e-10 --digits 12

  sixthop limit "sqrt(n^2+n)-n" --terms 4

  sixthop terminate --lower "(n-1)/n" --upper "(n+1)/n" --json

  sixthop adequal "1/(1+eps)" "1-eps"

  sixthop epscheck "(n+1)/n" --limit 1 --eps 1e-3,1e-6 --nmax 1000000

Exit codes: 0 ok, 1 parse or usage error, 2 domain error, 3 iteration budget exceeded,
4 internal invariant violation, 130 interrupted.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Callable, NoReturn, Optional

from loguru import logger
from pydantic import BaseModel
from tabulate import tabulate

from sixthop.config import CliConfig
from sixthop.exceptions import NotAdequalError, SixthOpError, UsageError
from sixthop.levicivita import (
    AdequalityReport,
    ShadowReport,
    format_lc,
    lc_adequal,
    lc_classify,
    lc_st,
    lc_sub,
    render_decimal,
    render_exact,
)
from sixthop.numerics.rational import bits_for, parse_rational
from sixthop.quadrature import (
    DEFAULT_MAX_ITER,
    ExportFormat,
    QuadratureReport,
    TerminalFormatter,
    build_report,
    default_precision,
    export_history,
    list_presets,
    preset_start,
    terminate_numeric,
)
from sixthop.sequences import (
    DEFAULT_NMAX,
    EpsilonticVerdict,
    EpsilonWitness,
    LimitReport,
    TerminationReport,
    eval_hyperfinite,
    epsilontic_probe,
    limit_with_value,
    parse_seq_expr,
    print_seq_expr,
    terminate_closed_form,
)


class ErrorReport(BaseModel):
    status: str = "error"
    error: str
    message: str
    exit_code: int
    subterm: Optional[str] = None
    gap: Optional[str] = None


REPORT_MODELS: tuple[type[BaseModel], ...] = (
    QuadratureReport,
    LimitReport,
    TerminationReport,
    ShadowReport,
    AdequalityReport,
    ErrorReport,
)


class _ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting with status 2."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")


# ── Subcommands ───────────────────────────────────────────────────────


def cmd_quadrature(args: argparse.Namespace, config: CliConfig) -> QuadratureReport:
    """Run terminate_numeric from a preset or a user start."""
    if config.tolerance is None:
        raise UsageError("quadrature needs --tol")
    tol = config.tolerance
    if args.preset:
        if args.c0 is not None:
            raise UsageError("--c0 cannot be combined with --preset")
        provisional = preset_start(args.preset, bits_for(tol) + 16)
        precision = config.precision or default_precision(*provisional, tol)
        i0, c0 = preset_start(args.preset, precision)
    else:
        if args.i0 is None or args.c0 is None:
            raise UsageError("quadrature needs --preset or both --i0 and --c0")
        i0, c0 = parse_rational(args.i0), parse_rational(args.c0)
        precision = config.precision or default_precision(i0, c0, tol)

    result, history = terminate_numeric(i0, c0, tol, max_iter=args.max_iter, p=precision)
    report = build_report(result, history, tol, precision, digits=config.digits, preset=args.preset)

    if args.export:
        Path(args.export).write_text(export_history(history, ExportFormat(args.export_format), config.digits))
        logger.info(f"history written to {args.export} ({args.export_format})")
    return report


def cmd_limit(args: argparse.Namespace, config: CliConfig) -> LimitReport:
    """Limit of a sequence as the shadow of its value at omega."""
    expr = parse_seq_expr(args.expr)
    cfg = config.field_config()
    value, at_omega = limit_with_value(expr, cfg)
    return LimitReport(
        expr=print_seq_expr(expr),
        method="shadow",
        value=render_exact(value),
        decimal=render_decimal(value, config.digits),
        lc_expansion=at_omega.expansion(config.terms),
        lc_text=format_lc(at_omega, config.terms),
    )


def cmd_terminate(args: argparse.Namespace, config: CliConfig) -> TerminationReport:
    lower, upper = parse_seq_expr(args.lower), parse_seq_expr(args.upper)
    value = terminate_closed_form(lower, upper, config.field_config())
    return TerminationReport(
        lower=print_seq_expr(lower),
        upper=print_seq_expr(upper),
        value=render_exact(value),
        decimal=render_decimal(value, config.digits),
    )


def cmd_adequal(args: argparse.Namespace, config: CliConfig) -> AdequalityReport:
    """Adequality of two LC-grammar expressions (n stands for omega)."""
    cfg = config.field_config()
    left = eval_hyperfinite(parse_seq_expr(args.left, allow_infinitesimals=True), cfg)
    right = eval_hyperfinite(parse_seq_expr(args.right, allow_infinitesimals=True), cfg)
    adequal = lc_adequal(left, right)
    difference = lc_sub(left, right)

    def shadow_of(x: Any) -> Optional[str]:
        try:
            return render_exact(lc_st(x))
        except SixthOpError:
            return None

    def class_of(x: Any) -> Optional[str]:
        try:
            return lc_classify(x).value
        except SixthOpError:
            return None

    return AdequalityReport(
        left=format_lc(left, config.terms),
        right=format_lc(right, config.terms),
        adequal=adequal,
        difference=format_lc(difference, config.terms),
        difference_class=class_of(difference),
        shadow_left=shadow_of(left),
        shadow_right=shadow_of(right),
    )


def cmd_shadow(args: argparse.Namespace, config: CliConfig) -> ShadowReport:
    cfg = config.field_config()
    expr = parse_seq_expr(args.expr, allow_infinitesimals=True)
    value = eval_hyperfinite(expr, cfg)
    shadow = lc_st(value)
    try:
        classification = lc_classify(value).value
    except SixthOpError:
        classification = "undecided"
    return ShadowReport(
        expr=print_seq_expr(expr),
        value=render_exact(shadow),
        decimal=render_decimal(shadow, config.digits),
        classification=classification,
        lc_expansion=value.expansion(config.terms),
        validity=str(value.validity) if value.validity is not None else None,
    )


def cmd_epscheck(args: argparse.Namespace, config: CliConfig) -> LimitReport:
    """Sampling epsilon-N check; status is the weakest verdict over all eps."""
    expr = parse_seq_expr(args.expr)
    limit = parse_rational(args.limit)
    eps_list = [parse_rational(part) for part in args.eps.split(",") if part.strip()]
    if not eps_list:
        raise UsageError("--eps needs at least one value")
    probes = epsilontic_probe(expr, limit, eps_list, args.nmax)
    verdicts = {probe.verdict for probe in probes}
    if EpsilonticVerdict.REFUTED in verdicts:
        status = EpsilonticVerdict.REFUTED.value
    elif EpsilonticVerdict.INCONCLUSIVE in verdicts:
        status = EpsilonticVerdict.INCONCLUSIVE.value
    else:
        status = EpsilonticVerdict.CONFIRMED.value
    return LimitReport(
        expr=print_seq_expr(expr),
        method="epsilontic",
        value=render_exact(limit),
        decimal=render_decimal(limit, config.digits),
        status=status,
        witnesses=[
            EpsilonWitness(
                eps=render_exact(probe.eps),
                verdict=probe.verdict.value,
                witness=probe.witness,
                distance=render_decimal(probe.distance, config.digits),
            )
            for probe in probes
        ],
    )


def cmd_schema(args: argparse.Namespace, config: CliConfig) -> dict[str, Any]:
    """JSON schema of every report model, keyed by model name."""
    return {model.__name__: model.model_json_schema() for model in REPORT_MODELS}


COMMANDS: dict[str, Callable[[argparse.Namespace, CliConfig], Any]] = {
    "quadrature": cmd_quadrature,
    "limit": cmd_limit,
    "terminate": cmd_terminate,
    "adequal": cmd_adequal,
    "shadow": cmd_shadow,
    "epscheck": cmd_epscheck,
    "schema": cmd_schema,
}


# ── Argument parsing ──────────────────────────────────────────────────


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subparser per command."""
    common = _ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Print the report as JSON")
    common.add_argument("-v", "--verbose", action="store_true", help="Enable debug logging")
    common.add_argument("--digits", type=int, help="Decimal digits in renderings (default: 20)")

    field = _ArgumentParser(add_help=False)
    field.add_argument("--window", help="Truncation window W for inverse and sqrt series (default: 16)")
    field.add_argument("--interval", action="store_true", help="Use certified interval coefficients")
    field.add_argument("--precision", type=int, help="Bits per interval rounding (default: 128)")
    field.add_argument("--terms", type=int, help="Number of expansion terms to show (default: 6)")

    parser = _ArgumentParser(
        prog="sixthop",
        description="Gregory's sixth operation: termination of double sequences, exact and infinitesimal",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    quadrature = subparsers.add_parser("quadrature", parents=[common], help="Run Gregory's double sequence")
    start = quadrature.add_mutually_exclusive_group()
    start.add_argument("--preset", choices=list_presets(), help="Named start for the unit circle")
    start.add_argument("--i0", help="Inscribed start area (rational)")
    quadrature.add_argument("--c0", help="Circumscribed start area (rational)")
    quadrature.add_argument("--tol", dest="tolerance", required=True, help="Tolerance, e.g. 1e-30 (exact)")
    quadrature.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER, help="Iteration budget")
    quadrature.add_argument("--precision", type=int, help="Bits for sqrt and compression (default: derived)")
    quadrature.add_argument("--export", help="Write the history to this file")
    quadrature.add_argument(
        "--export-format", choices=[f.value for f in ExportFormat], default=ExportFormat.TSV.value
    )

    limit = subparsers.add_parser("limit", parents=[common, field], help="Limit by shadow")
    limit.add_argument("expr", help='Sequence in n, e.g. "(n+1)/n"')

    terminate = subparsers.add_parser("terminate", parents=[common, field], help="Closed-form termination")
    terminate.add_argument("--lower", required=True, help="Lower (inscribed) sequence")
    terminate.add_argument("--upper", required=True, help="Upper (circumscribed) sequence")

    adequal = subparsers.add_parser("adequal", parents=[common, field], help="Infinite proximity check")
    adequal.add_argument("left", help='LC expression, e.g. "1/(1+eps)"')
    adequal.add_argument("right", help='LC expression, e.g. "1-eps"')

    shadow = subparsers.add_parser("shadow", parents=[common, field], help="Standard part of an LC expression")
    shadow.add_argument("expr", help='LC expression, e.g. "3+5*eps"')

    epscheck = subparsers.add_parser("epscheck", parents=[common], help="Sampling epsilon-N oracle")
    epscheck.add_argument("expr", help="Sequence in n")
    epscheck.add_argument("--limit", required=True, help="Proposed limit (rational)")
    epscheck.add_argument("--eps", required=True, help="Comma-separated eps values, e.g. 1e-3,1e-6")
    epscheck.add_argument("--nmax", type=int, default=DEFAULT_NMAX, help="Largest sampled index")

    subparsers.add_parser("schema", parents=[common], help="Print the JSON schema of every report")
    return parser


def parse_args(args: list[str] | None = None) -> argparse.Namespace:
    return build_parser().parse_args(args)


# ── Output ────────────────────────────────────────────────────────────


def _plain(report: Any) -> str:
    if isinstance(report, QuadratureReport):
        return TerminalFormatter(report).format()
    if isinstance(report, dict):
        return json.dumps(report, indent=2)
    rows = []
    for name, value in report.model_dump().items():
        if value is None:
            continue
        if name == "witnesses":
            continue
        if name == "lc_expansion":
            continue
        rows.append([name, value])
    text = tabulate(rows, tablefmt="plain", disable_numparse=True)
    witnesses = getattr(report, "witnesses", None)
    if witnesses:
        table = [[w.eps, w.verdict, w.witness, w.distance] for w in witnesses]
        text += "\n\n" + tabulate(
            table, headers=["eps", "verdict", "N", "|e(n_max) - L|"], tablefmt="simple", disable_numparse=True
        )
    return text


def _emit(report: Any, config: CliConfig) -> None:
    if config.is_json:
        if isinstance(report, dict):
            print(json.dumps(report, indent=2))
        else:
            print(report.model_dump_json(indent=2))
    else:
        print(_plain(report))


def _emit_error(error: SixthOpError, json_mode: bool) -> None:
    gap = None
    if isinstance(error, NotAdequalError) and error.gap is not None:
        gap = render_exact(error.gap)
    if json_mode:
        report = ErrorReport(
            error=type(error).__name__,
            message=str(error),
            exit_code=error.exit_code,
            subterm=error.subterm,
            gap=gap,
        )
        print(report.model_dump_json(indent=2))
    else:
        print(f"Error: {error}", file=sys.stderr)


def run_cli(argv: list[str] | None = None) -> int:
    """Parse, dispatch and render; return the process exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    json_mode = "--json" in argv
    try:
        parsed = parse_args(argv)
        if not parsed.command:
            build_parser().print_help()
            return 1

        if not parsed.verbose:
            logger.remove()
            logger.add(sys.stderr, level="INFO")

        config = CliConfig.from_namespace(parsed)
        report = COMMANDS[config.command](parsed, config)
        _emit(report, config)
        return 0
    except SixthOpError as e:
        _emit_error(e, json_mode)
        return e.exit_code
    except KeyboardInterrupt:
        print("\nAborted.", file=sys.stderr)
        return 130


def main(args: list[str] | None = None) -> None:
    """Main entry point for the sixthop CLI."""
    sys.exit(run_cli(args))


if __name__ == "__main__":
    main()
