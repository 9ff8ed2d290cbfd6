"""Rough-set and fuzzy-rough span measures, spanning sets and span-guided
feature selection."""

from .errors import *  # noqa: F401,F403
from .featsel import SelectionResult, select_features
from .fuzzy_rough import (
    FuzzyApproximation,
    FuzzyPartition,
    FuzzyRelation,
    FuzzySet,
    ValidationReport,
    fuzzy_approximate,
    sigma_count,
    validate_relation,
)
from .rough_core import (
    Approximation,
    InformationSystem,
    accuracy,
    approximate,
    partition,
    roughness,
)
from .solver import (
    SolverConfig,
    SpanningSetResult,
    solve,
    solve_exhaustive,
    solve_greedy,
    solve_local,
)
from .span import (
    SpanValue,
    SpanWeights,
    complete_span,
    fuzzy_span,
    hybrid_span,
    span_delta,
    span_delta_prime,
)

__version__ = "0.1.0"
