"""Tests for quadrature history exports, reports and the terminal table."""

from __future__ import annotations

import json
from fractions import Fraction

import pytest

from sixthop.quadrature import (
    ExportFormat,
    QuadratureReport,
    TerminalFormatter,
    build_report,
    export_history,
    export_json,
    export_tsv,
    history_records,
    terminate_numeric,
)

TOL = Fraction(1, 10**10)


@pytest.fixture()
def run():
    """A finished squares run to 1e-10."""
    result, history = terminate_numeric(2, 4, TOL, p=64)
    return result, history


class TestHistoryRecords:
    """Exact history records."""

    def test_exact_endpoints(self, run):
        """The start state is recorded exactly."""
        _, history = run
        first = history_records(history)[0]
        assert (first.n, first.I_lo, first.I_hi, first.C_lo, first.C_hi) == (0, "2", "2", "4", "4")
        assert first.I_decimal is None

    def test_decimals(self, run):
        """Decimal renderings appear when digits are requested."""
        _, history = run
        first = history_records(history, digits=3)[0]
        assert first.I_decimal == "[2.000, 2.000]"


class TestExports:
    """TSV and JSON history exports."""

    def test_tsv(self, run):
        """One tab-separated line per state, ending with a newline."""
        _, history = run
        text = export_tsv(history)
        lines = text.splitlines()
        assert text.endswith("\n")
        assert len(lines) == len(history)
        assert lines[0] == "0\t2\t2\t4\t4"
        assert all(len(line.split("\t")) == 5 for line in lines)

    def test_tsv_values_are_exact(self, run):
        """Every TSV field parses back to the exact endpoint."""
        _, history = run
        last = export_tsv(history).splitlines()[-1].split("\t")
        assert Fraction(last[1]) == history[-1].inscribed.lo
        assert Fraction(last[4]) == history[-1].circumscribed.hi

    def test_json(self, run):
        """JSON export is a list of history records."""
        _, history = run
        data = json.loads(export_json(history, digits=5))
        assert len(data) == len(history)
        assert data[0]["n"] == 0
        assert data[0]["C_hi"] == "4"
        assert data[0]["C_decimal"] == "[4.00000, 4.00000]"

    def test_export_dispatch(self, run):
        """export_history selects the format by name."""
        _, history = run
        assert export_history(history, ExportFormat.TSV) == export_tsv(history)
        assert export_history(history, "json", digits=4) == export_json(history, digits=4)


class TestReport:
    """build_report and the terminal formatter."""

    def test_report_fields(self, run):
        """The report carries exact and decimal views of the result."""
        result, history = run
        report = build_report(result, history, TOL, precision=64, digits=12, preset="squares")
        assert isinstance(report, QuadratureReport)
        assert report.status == "ok"
        assert report.preset == "squares"
        assert report.iterations == history[-1].n
        assert report.precision == 64
        assert report.tolerance == "1/10000000000"
        assert report.decimal.startswith("3.141592653")
        assert len(report.rates) == len(history) - 1
        assert Fraction(report.width) == result.width

    def test_terminal_table(self, run):
        """The table ends with the termination line."""
        result, history = run
        text = TerminalFormatter(build_report(result, history, TOL, precision=64, digits=12)).format()
        assert text.splitlines()[-1].startswith("Termination: 3.141592653")
        assert "I0=[2, 2], C0=[4, 4]" in text
        assert "rate" in text

    def test_terminal_table_with_preset(self, run):
        """Preset runs name the preset instead of the start values."""
        result, history = run
        text = TerminalFormatter(build_report(result, history, TOL, precision=64, preset="squares")).format()
        assert "preset squares" in text

    def test_json_round_trip(self, run):
        """Reports serialize through pydantic."""
        result, history = run
        report = build_report(result, history, TOL, precision=64)
        assert QuadratureReport.model_validate_json(report.model_dump_json()) == report
