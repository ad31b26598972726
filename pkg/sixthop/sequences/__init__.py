"""Closed-form sequences: parsing, finite and hyperfinite evaluation, limits by shadow."""

from sixthop.sequences.ast import (
    MAX_DEPTH,
    MAX_EXPONENT,
    MAX_NODES,
    Add,
    Const,
    Div,
    Eps,
    Index,
    Mul,
    Neg,
    Omega,
    Pow,
    SeqExpr,
    Sqrt,
    Sub,
    print_seq_expr,
)
from sixthop.sequences.evaluate import (
    DEFAULT_FINITE_PRECISION,
    eval_finite,
    eval_hyperfinite,
    limit_shadow,
    limit_with_value,
    terminate_closed_form,
)
from sixthop.sequences.models import EpsilonWitness, LimitReport, TerminationReport
from sixthop.sequences.oracle import (
    CORPUS,
    DEFAULT_EPS,
    DEFAULT_NMAX,
    EpsilonProbe,
    EpsilonticVerdict,
    epsilontic_check,
    epsilontic_probe,
    sample_indices,
)
from sixthop.sequences.parser import MAX_INPUT_LENGTH, parse_seq_expr, tokenize

__all__ = [
    "Add",
    "CORPUS",
    "Const",
    "DEFAULT_EPS",
    "DEFAULT_FINITE_PRECISION",
    "DEFAULT_NMAX",
    "Div",
    "EpsilonProbe",
    "EpsilonWitness",
    "EpsilonticVerdict",
    "Eps",
    "Index",
    "LimitReport",
    "MAX_DEPTH",
    "MAX_EXPONENT",
    "MAX_INPUT_LENGTH",
    "MAX_NODES",
    "Mul",
    "Neg",
    "Omega",
    "Pow",
    "SeqExpr",
    "Sqrt",
    "Sub",
    "TerminationReport",
    "epsilontic_check",
    "epsilontic_probe",
    "eval_finite",
    "eval_hyperfinite",
    "limit_shadow",
    "limit_with_value",
    "parse_seq_expr",
    "print_seq_expr",
    "sample_indices",
    "terminate_closed_form",
    "tokenize",
]
