"""History exports (TSV, JSON) and the terminal table for quadrature runs."""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Optional

from pydantic import TypeAdapter
from tabulate import tabulate

from sixthop.numerics.interval import RatInterval, format_interval_decimal
from sixthop.numerics.rational import Rounding, format_rational, to_decimal
from sixthop.quadrature.gregory import QuadratureState, rate_estimate
from sixthop.quadrature.models import HistoryRecord, QuadratureReport

DEFAULT_DIGITS = 20
RATE_DIGITS = 6

_HISTORY_ADAPTER = TypeAdapter(list[HistoryRecord])


class ExportFormat(str, Enum):
    TSV = "tsv"
    JSON = "json"


def history_records(history: list[QuadratureState], digits: Optional[int] = None) -> list[HistoryRecord]:
    """Exact endpoints per step; decimal renderings only when digits is given."""
    records = []
    for s in history:
        i, c = s.inscribed, s.circumscribed
        records.append(
            HistoryRecord(
                n=s.n,
                I_lo=format_rational(i.lo),
                I_hi=format_rational(i.hi),
                C_lo=format_rational(c.lo),
                C_hi=format_rational(c.hi),
                I_decimal=format_interval_decimal(i, digits) if digits is not None else None,
                C_decimal=format_interval_decimal(c, digits) if digits is not None else None,
            )
        )
    return records


def export_tsv(history: list[QuadratureState]) -> str:
    """One line per step: ``n<TAB>I.lo<TAB>I.hi<TAB>C.lo<TAB>C.hi`` in exact rational form."""
    lines = [
        "\t".join([str(r.n), r.I_lo, r.I_hi, r.C_lo, r.C_hi]) for r in history_records(history)
    ]
    return "\n".join(lines) + "\n"


def export_json(history: list[QuadratureState], digits: int = DEFAULT_DIGITS) -> str:
    return _HISTORY_ADAPTER.dump_json(history_records(history, digits), indent=2).decode()


def export_history(history: list[QuadratureState], fmt: ExportFormat, digits: int = DEFAULT_DIGITS) -> str:
    match ExportFormat(fmt):
        case ExportFormat.TSV:
            return export_tsv(history)
        case ExportFormat.JSON:
            return export_json(history, digits)
    raise AssertionError(fmt)


def build_report(
    result: RatInterval,
    history: list[QuadratureState],
    tol: Fraction,
    precision: int,
    digits: int = DEFAULT_DIGITS,
    preset: Optional[str] = None,
) -> QuadratureReport:
    """Collect a finished run into a QuadratureReport (rates only for histories of 3+ states)."""
    rates = rate_estimate(history) if len(history) >= 3 else []
    start = history[0]
    return QuadratureReport(
        preset=preset,
        start_inscribed=str(start.inscribed),
        start_circumscribed=str(start.circumscribed),
        tolerance=format_rational(Fraction(tol)),
        precision=precision,
        iterations=history[-1].n,
        value=str(result),
        decimal=to_decimal(result.lo, digits, Rounding.DOWN),
        enclosure_decimal=format_interval_decimal(result, digits),
        width=format_rational(result.width),
        width_decimal=to_decimal(result.width, digits, Rounding.UP),
        rates=[format_rational(r) if r is not None else None for r in rates],
        history=history_records(history, digits),
    )


class TerminalFormatter:
    """Format a QuadratureReport as a history table plus the final enclosure."""

    def __init__(self, report: QuadratureReport) -> None:
        self.report = report

    def format(self) -> str:
        r = self.report
        lines: list[str] = []

        start = f"preset {r.preset}" if r.preset else f"I0={r.start_inscribed}, C0={r.start_circumscribed}"
        lines.append(f"  Start:      {start}")
        lines.append(f"  Tolerance:  {r.tolerance}")
        lines.append(f"  Precision:  {r.precision} bits")
        lines.append(f"  Iterations: {r.iterations}")
        lines.append("")

        rows = []
        for record in r.history:
            rate = r.rates[record.n] if record.n < len(r.rates) else None
            rows.append(
                [
                    record.n,
                    record.I_decimal or f"[{record.I_lo}, {record.I_hi}]",
                    record.C_decimal or f"[{record.C_lo}, {record.C_hi}]",
                    _short_rate(rate),
                ]
            )
        lines.append(tabulate(rows, headers=["n", "I_n", "C_n", "rate"], tablefmt="simple", disable_numparse=True))
        lines.append("")
        lines.append(f"  Enclosure:  {r.enclosure_decimal}")
        lines.append(f"  Width:      {r.width_decimal}")
        lines.append(f"Termination: {r.decimal}")
        return "\n".join(lines)


def _short_rate(rate: Optional[str]) -> str:
    if rate is None:
        return "-"
    return to_decimal(Fraction(rate), RATE_DIGITS)
