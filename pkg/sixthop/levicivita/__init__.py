"""Truncated Levi-Civita field: infinitesimals, infinite numbers and the shadow."""

from sixthop.levicivita.coefficients import (
    DEFAULT_INTERVAL_PRECISION,
    EXACT,
    Coefficient,
    CoefficientDomain,
    ExactDomain,
    IntervalDomain,
    create_domain,
    list_domains,
    register_domain,
)
from sixthop.levicivita.models import AdequalityReport, ShadowReport, render_decimal, render_exact
from sixthop.levicivita.number import (
    DEFAULT_CONFIG,
    DEFAULT_WINDOW,
    AtomKind,
    FieldConfig,
    LCNumber,
    MagnitudeClass,
    Ordering,
    format_lc,
    lc_add,
    lc_adequal,
    lc_atom,
    lc_classify,
    lc_cmp,
    lc_div,
    lc_inv,
    lc_monomial,
    lc_mul,
    lc_neg,
    lc_pow,
    lc_sqrt,
    lc_st,
    lc_sub,
    lc_tlh,
)

__all__ = [
    "AdequalityReport",
    "AtomKind",
    "Coefficient",
    "CoefficientDomain",
    "DEFAULT_CONFIG",
    "DEFAULT_INTERVAL_PRECISION",
    "DEFAULT_WINDOW",
    "EXACT",
    "ExactDomain",
    "FieldConfig",
    "IntervalDomain",
    "LCNumber",
    "MagnitudeClass",
    "Ordering",
    "ShadowReport",
    "create_domain",
    "format_lc",
    "lc_add",
    "lc_adequal",
    "lc_atom",
    "lc_classify",
    "lc_cmp",
    "lc_div",
    "lc_inv",
    "lc_monomial",
    "lc_mul",
    "lc_neg",
    "lc_pow",
    "lc_sqrt",
    "lc_st",
    "lc_sub",
    "lc_tlh",
    "list_domains",
    "register_domain",
    "render_decimal",
    "render_exact",
]
