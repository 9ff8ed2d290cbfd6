"""Span measures of an object subset.

``delta``        w1 * |lower| / |U| + w2 * |boundary| / |U|
``delta_prime``  w1 * |lower| / |U| + w2 * |upper| / |U|
``complete``     sum of single-attribute ``delta_prime`` spans, optionally
                 plus the whole-subset ``delta`` term
``hybrid``       sum of single-attribute ``delta_prime`` spans plus the
                 whole-subset ``delta_prime``
``fuzzy``        ``delta_prime`` with sigma-counts of fuzzy approximations

The ``*_from_counts`` helpers are the single place the formulas live; they
accept scalars or numpy arrays so callers can evaluate many subsets or a
whole weight grid at once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from . import rough_core
from .errors import EmptyAttributeSet, InvalidWeights, UniverseMismatch
from .fuzzy_rough import FuzzySet, sigma_count

WEIGHT_TOLERANCE = 1e-9
MEASURES = ("delta", "delta_prime", "complete", "hybrid", "fuzzy")


@dataclass(frozen=True)
class SpanWeights:
    """The pair (w1, w2) with w2 = 1 - w1; only w1 is supplied."""

    w1: float
    w2: float = field(init=False)

    def __post_init__(self):
        w1 = float(self.w1)
        if not (-WEIGHT_TOLERANCE <= w1 <= 1.0 + WEIGHT_TOLERANCE):
            raise InvalidWeights(f"w1 must lie in [0, 1], got {w1}")
        w1 = min(max(w1, 0.0), 1.0)
        object.__setattr__(self, "w1", w1)
        object.__setattr__(self, "w2", 1.0 - w1)

    @classmethod
    def coerce(cls, w) -> "SpanWeights":
        return w if isinstance(w, cls) else cls(w)


@dataclass(frozen=True)
class SpanValue:
    value: float
    measure: str
    weights: SpanWeights

    def __float__(self):
        return float(self.value)

    def rounded(self, digits: int = 4) -> float:
        return round(self.value, digits)


def delta_from_counts(n_lower, n_boundary, n, w1):
    return w1 * n_lower / n + (1.0 - w1) * n_boundary / n


def delta_prime_from_counts(n_lower, n_upper, n, w1):
    # same as w1*lower/n + w2*upper/n, but exactly 1 when lower == upper == n
    return (n_upper - w1 * (n_upper - n_lower)) / n


def _counts(sys, p, x) -> tuple[int, int]:
    masks = rough_core.class_masks(sys, p)
    lower, upper = rough_core.approximate_mask(masks, rough_core.subset_mask(sys, x))
    return lower.bit_count(), upper.bit_count()


def span_delta(sys, p: Iterable[str], x: Iterable, w) -> SpanValue:
    w = SpanWeights.coerce(w)
    lo, up = _counts(sys, p, x)
    return SpanValue(delta_from_counts(lo, up - lo, sys.size, w.w1), "delta", w)


def span_delta_prime(sys, p: Iterable[str], x: Iterable, w) -> SpanValue:
    """Upper-approximation span; at ``p = sys.attributes`` this is the
    full-relation span."""
    w = SpanWeights.coerce(w)
    lo, up = _counts(sys, p, x)
    return SpanValue(delta_prime_from_counts(lo, up, sys.size, w.w1), "delta_prime", w)


def _attribute_list(p) -> list[str]:
    p = [p] if isinstance(p, str) else list(p)
    if not p:
        raise EmptyAttributeSet("complete and hybrid spans need at least one attribute")
    return sorted(set(p))


def _per_attribute_sum(sys, attrs, x, w) -> float:
    return sum(span_delta_prime(sys, [a], x, w).value for a in attrs)


def complete_span(sys, p: Iterable[str], x: Iterable, w, include_full_set: bool = False) -> SpanValue:
    """Sum of single-attribute upper-approximation spans.

    With ``include_full_set`` the boundary-region span of the whole subset
    ``p`` is added as well.
    """
    w = SpanWeights.coerce(w)
    attrs = _attribute_list(p)
    x = list(x)
    total = _per_attribute_sum(sys, attrs, x, w)
    if include_full_set:
        total += span_delta(sys, attrs, x, w).value
    return SpanValue(total, "complete", w)


def hybrid_span(sys, p: Iterable[str], x: Iterable, w) -> SpanValue:
    w = SpanWeights.coerce(w)
    attrs = _attribute_list(p)
    x = list(x)
    total = _per_attribute_sum(sys, attrs, x, w) + span_delta_prime(sys, attrs, x, w).value
    return SpanValue(total, "hybrid", w)


def fuzzy_span(lower: FuzzySet, upper: FuzzySet, w) -> SpanValue:
    w = SpanWeights.coerce(w)
    if lower.universe != upper.universe:
        raise UniverseMismatch("lower and upper approximations are over different universes")
    n = len(lower.universe)
    value = delta_prime_from_counts(sigma_count(lower), sigma_count(upper), n, w.w1)
    return SpanValue(float(value), "fuzzy", w)


def evaluate(measure: str, sys, p, x, w, include_full_set: bool = False) -> SpanValue:
    """Dispatch on a crisp measure name."""
    if measure == "delta":
        return span_delta(sys, p, x, w)
    if measure == "delta_prime":
        return span_delta_prime(sys, p, x, w)
    if measure == "complete":
        return complete_span(sys, p, x, w, include_full_set=include_full_set)
    if measure == "hybrid":
        return hybrid_span(sys, p, x, w)
    raise ValueError(f"unknown crisp span measure {measure!r}")
