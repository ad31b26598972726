"""Gregory's inscribed/circumscribed double sequence and an independent pi oracle."""

from sixthop.quadrature.formatters import (
    ExportFormat,
    TerminalFormatter,
    build_report,
    export_history,
    export_json,
    export_tsv,
    history_records,
)
from sixthop.quadrature.gregory import (
    DEFAULT_MAX_ITER,
    QuadratureState,
    default_precision,
    expected_iterations,
    gregory_step,
    list_presets,
    preset_start,
    rate_estimate,
    register_preset,
    terminate_numeric,
)
from sixthop.quadrature.models import HistoryRecord, QuadratureReport
from sixthop.quadrature.reference import pi_reference

__all__ = [
    "DEFAULT_MAX_ITER",
    "ExportFormat",
    "HistoryRecord",
    "QuadratureReport",
    "QuadratureState",
    "TerminalFormatter",
    "build_report",
    "default_precision",
    "expected_iterations",
    "export_history",
    "export_json",
    "export_tsv",
    "gregory_step",
    "history_records",
    "list_presets",
    "pi_reference",
    "preset_start",
    "rate_estimate",
    "register_preset",
    "terminate_numeric",
]
