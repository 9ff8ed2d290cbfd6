"""Greedy forward feature selection guided by the upper-approximation span.

The criterion for an attribute subset P is the mean, over decision classes
D, of ``delta_prime(D, P)``.  With k decision classes it equals

    (1 + S / |U|) / k,    S = sum over granules g touching c_g > 1 classes
                              of |g| * (w2 * (c_g - 1) - w1)

so an impure granule lowers the score only when ``w1 > (c_g - 1) * w2``.
For a k-class decision choose ``w1 > (k - 1) / k``; consistent attribute
subsets then score highest.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from . import rough_core
from .errors import MissingDecision
from .span import SpanWeights, delta_prime_from_counts

IMPROVEMENT_TOLERANCE = 1e-12
CRITERION = "delta_prime_mean"


class TraceStep(NamedTuple):
    attribute: str
    criterion: float
    mean_accuracy: float


@dataclass(frozen=True)
class SelectionResult:
    selected: tuple
    trace: tuple
    criterion: str = CRITERION
    weights: SpanWeights = field(default=None)

    @property
    def mean_accuracy(self) -> float | None:
        return self.trace[-1].mean_accuracy if self.trace else None


def _evaluate(sys, attrs, classes, w1) -> tuple[float, float]:
    masks = rough_core.class_masks(sys, attrs)
    spans, accs = [], []
    for d in classes:
        lower, upper = rough_core.approximate_mask(masks, d)
        lo, up = lower.bit_count(), upper.bit_count()
        spans.append(delta_prime_from_counts(lo, up, sys.size, w1))
        accs.append(lo / up)
    return sum(spans) / len(spans), sum(accs) / len(accs)


def criterion(sys, attrs, w) -> float:
    """Mean upper-approximation span of the decision classes under ``attrs``."""
    w = SpanWeights.coerce(w)
    classes = [rough_core.subset_mask(sys, d) for d in sys.decision_classes()]
    return _evaluate(sys, list(attrs), classes, w.w1)[0]


def mean_accuracy(sys, attrs) -> float:
    classes = [rough_core.subset_mask(sys, d) for d in sys.decision_classes()]
    return _evaluate(sys, list(attrs), classes, 0.5)[1]


def select_features(sys, w, max_features: int | None = None) -> SelectionResult:
    """Forward selection on a decision table.

    The first attribute is always taken (unless the decision is already
    definable with no attributes); later ones only while the criterion
    improves.  Selection also stops once every decision class is definable
    or ``max_features`` attributes are chosen.
    """
    if sys.decision is None:
        raise MissingDecision("feature selection needs a decision attribute")
    if not sys.attributes:
        raise MissingDecision("feature selection needs at least one conditional attribute")
    w = SpanWeights.coerce(w)
    limit = len(sys.attributes) if max_features is None else min(max_features, len(sys.attributes))
    classes = [rough_core.subset_mask(sys, d) for d in sys.decision_classes()]

    selected: list[str] = []
    trace: list[TraceStep] = []
    _, acc = _evaluate(sys, selected, classes, w.w1)
    current = None
    while acc < 1.0 and len(selected) < limit:
        best = None
        for a in sorted(set(sys.attributes) - set(selected)):
            score, score_acc = _evaluate(sys, selected + [a], classes, w.w1)
            if best is None or score > best[1]:
                best = (a, score, score_acc)
        if current is not None and best[1] <= current + IMPROVEMENT_TOLERANCE:
            break
        a, current, acc = best
        selected.append(a)
        trace.append(TraceStep(a, current, acc))
    return SelectionResult(tuple(selected), tuple(trace), CRITERION, w)
