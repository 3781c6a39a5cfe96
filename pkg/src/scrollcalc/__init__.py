"""Exact sheaf-cohomology and vector-bundle calculus on rational normal
scroll surfaces S(a0, a1).

Everything is integer arithmetic: cohomology of line bundles reduces to
degree bookkeeping on the base curve, direct sums are exact, and
extensions are tracked as intervals that collapse whenever the long
exact sequence forces them to.
"""

from .bundlespec import format_bundle, normalize, parse_bundle_spec
from .cohomology import (
    CohomRecord,
    LineBundleSum,
    euler_rr,
    h1_nonvanishing,
    h1_violating_h_twists,
    line_cohomology,
    restricted_cohomology,
    sum_cohomology,
)
from .errors import (
    EmptyBundle,
    HypothesisViolated,
    InvalidScroll,
    NegativeCount,
    NegativeSymPower,
    NotRegular,
    OddIntersection,
    ParseError,
    RankMismatch,
    ScrollCalcError,
    TooManyCurves,
    UnsupportedArrangement,
    UnsupportedCurveClass,
)
from .extensions import (
    BundleExpr,
    Ext,
    IntervalCohom,
    Probe,
    Sum,
    Verdict,
    as_bundle_expr,
    bundle_sum,
    ext1_dim,
    extension_cohomology,
    forced_split,
    line_bundle,
)
from .logbundles import (
    Arrangement,
    ChiCheck,
    LogReport,
    classify_regular_acm_log,
    log_splitting_type,
    residue_consistency,
    twist_rectangle,
    validate_arrangement,
)
from .p1 import P1Sum, p1_cohomology, sym_decompose
from .regularity import (
    RegularityReport,
    gg_region,
    is_pp_regular,
    is_regular,
    line_bundle_reg,
    reg,
    regular_region,
)
from .scroll import (
    FIBRE,
    HYPERPLANE,
    ZERO,
    DivisorClass,
    Scroll,
    intersect,
    make_scroll,
    restriction_degree,
    serre_dual,
)
from .splitting import (
    AcmVerdict,
    FailureWitness,
    SplitVerdict,
    SummandVerdict,
    UlrichVerdict,
    decide_split_acm3,
    decide_split_tH,
    detect_line_summand,
    is_acm,
    is_ulrich,
    make_ulrich,
    violating_twists,
)

__version__ = "0.1.0"

__all__ = [
    "AcmVerdict",
    "Arrangement",
    "BundleExpr",
    "ChiCheck",
    "CohomRecord",
    "DivisorClass",
    "EmptyBundle",
    "Ext",
    "FIBRE",
    "FailureWitness",
    "HYPERPLANE",
    "HypothesisViolated",
    "IntervalCohom",
    "InvalidScroll",
    "LineBundleSum",
    "LogReport",
    "NegativeCount",
    "NegativeSymPower",
    "NotRegular",
    "OddIntersection",
    "P1Sum",
    "ParseError",
    "Probe",
    "RankMismatch",
    "RegularityReport",
    "Scroll",
    "ScrollCalcError",
    "SplitVerdict",
    "Sum",
    "SummandVerdict",
    "TooManyCurves",
    "UlrichVerdict",
    "UnsupportedArrangement",
    "UnsupportedCurveClass",
    "Verdict",
    "ZERO",
    "as_bundle_expr",
    "bundle_sum",
    "classify_regular_acm_log",
    "decide_split_acm3",
    "decide_split_tH",
    "detect_line_summand",
    "euler_rr",
    "ext1_dim",
    "extension_cohomology",
    "forced_split",
    "format_bundle",
    "gg_region",
    "h1_nonvanishing",
    "h1_violating_h_twists",
    "intersect",
    "is_acm",
    "is_pp_regular",
    "is_regular",
    "is_ulrich",
    "line_bundle",
    "line_bundle_reg",
    "line_cohomology",
    "log_splitting_type",
    "make_scroll",
    "make_ulrich",
    "normalize",
    "p1_cohomology",
    "parse_bundle_spec",
    "reg",
    "regular_region",
    "residue_consistency",
    "restricted_cohomology",
    "restriction_degree",
    "serre_dual",
    "sum_cohomology",
    "sym_decompose",
    "twist_rectangle",
    "validate_arrangement",
    "violating_twists",
]
