"""Spanning-set search: find the object subset maximizing a span measure,
optionally under a cardinality bound.

Ties are resolved toward the smaller subset, then toward the
lexicographically smallest tuple of sorted object ids.  Scores within
``SCORE_TOLERANCE`` of each other count as ties.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import rough_core
from .errors import EmptyAttributeSet, InvalidSeed, UniverseTooLarge
from .span import SpanValue, SpanWeights, delta_from_counts, delta_prime_from_counts, evaluate

SCORE_TOLERANCE = 1e-12
MAX_EXHAUSTIVE_UNIVERSE = 20
SOLVER_MEASURES = ("delta", "delta_prime", "complete", "hybrid")
STRATEGIES = ("exhaustive", "greedy", "local")
TIE_BREAK = "smaller cardinality, then lexicographic on sorted ids"


@dataclass(frozen=True)
class SolverConfig:
    measure: str = "delta_prime"
    weights: SpanWeights = SpanWeights(0.5)
    max_size: int | None = None
    strategy: str = "exhaustive"
    include_full_set: bool = False  # only read by the "complete" measure
    max_universe: int = MAX_EXHAUSTIVE_UNIVERSE

    def __post_init__(self):
        if self.measure not in SOLVER_MEASURES:
            raise ValueError(f"measure must be one of {SOLVER_MEASURES}, got {self.measure!r}")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"strategy must be one of {STRATEGIES}, got {self.strategy!r}")
        if self.max_size is not None and self.max_size < 0:
            raise ValueError("max_size must be non-negative")
        object.__setattr__(self, "weights", SpanWeights.coerce(self.weights))

    @property
    def tie_break(self) -> str:
        return TIE_BREAK


@dataclass(frozen=True)
class SpanningSetResult:
    subset: frozenset
    span: SpanValue
    strategy: str
    optimal: bool

    def sorted_subset(self) -> list:
        return rough_core.sort_ids(self.subset)


class _Problem:
    """Scores subsets given as bit masks over the id-sorted universe."""

    def __init__(self, sys, p, config: SolverConfig):
        self.sys = sys
        self.config = config
        self.p = frozenset([p] if isinstance(p, str) else p)
        self.ids = rough_core.sort_ids(sys.objects)
        self.n = len(self.ids)
        self.limit = self.n if config.max_size is None else min(config.max_size, self.n)
        if config.measure in ("complete", "hybrid") and not self.p:
            raise EmptyAttributeSet("complete and hybrid spans need at least one attribute")
        pos = {o: i for i, o in enumerate(self.ids)}

        def remap(attrs):
            return [sum(1 << pos[o] for o in c) for c in rough_core.partition(sys, attrs)]

        self.whole = remap(self.p)
        self.single = [remap([a]) for a in sorted(self.p)]

    def to_mask(self, members: Iterable) -> int:
        mask = 0
        for o in members:
            mask |= 1 << self.ids.index(o)
        return mask

    def to_set(self, mask: int) -> frozenset:
        return frozenset(o for i, o in enumerate(self.ids) if mask >> i & 1)

    def _term(self, classes, masks, kind):
        if isinstance(masks, np.ndarray):
            lower = np.zeros(masks.shape, dtype=np.int64)
            upper = np.zeros(masks.shape, dtype=np.int64)
            for c in classes:
                hit = masks & c
                size = c.bit_count()
                upper += size * (hit != 0)
                lower += size * (hit == c)
        else:
            lo, up = rough_core.approximate_mask(classes, masks)
            lower, upper = lo.bit_count(), up.bit_count()
        w1 = self.config.weights.w1
        if kind == "delta":
            return delta_from_counts(lower, upper - lower, self.n, w1)
        return delta_prime_from_counts(lower, upper, self.n, w1)

    def score(self, masks):
        measure = self.config.measure
        if measure in ("delta", "delta_prime"):
            return self._term(self.whole, masks, measure)
        total = sum(self._term(c, masks, "delta_prime") for c in self.single)
        if measure == "hybrid":
            total = total + self._term(self.whole, masks, "delta_prime")
        elif self.config.include_full_set:
            total = total + self._term(self.whole, masks, "delta")
        return total

    def result(self, mask: int, strategy: str, optimal: bool) -> SpanningSetResult:
        subset = self.to_set(mask)
        span = evaluate(
            self.config.measure, self.sys, self.p, subset, self.config.weights,
            include_full_set=self.config.include_full_set,
        )
        return SpanningSetResult(subset, span, strategy, optimal)

    def order_key(self, mask: int):
        return (mask.bit_count(), [i for i in range(self.n) if mask >> i & 1])


def _popcount(masks: np.ndarray) -> np.ndarray:
    return np.bitwise_count(masks.astype(np.uint64)).astype(np.int64)


def solve_exhaustive(sys, p, config: SolverConfig) -> SpanningSetResult:
    """Global maximizer over every subset with at most ``max_size`` objects."""
    if sys.size > config.max_universe:
        raise UniverseTooLarge(
            f"exhaustive search is limited to {config.max_universe} objects, got {sys.size}"
        )
    prob = _Problem(sys, p, config)
    masks = np.arange(1 << prob.n, dtype=np.int64)
    cards = _popcount(masks)
    masks = masks[cards <= prob.limit]
    cards = cards[cards <= prob.limit]
    scores = np.asarray(prob.score(masks), dtype=float)
    tied = scores >= scores.max() - SCORE_TOLERANCE
    masks, cards = masks[tied], cards[tied]
    masks = masks[cards == cards.min()]
    # among equal-size subsets the lexicographically smallest id tuple is the
    # one whose lowest differing bit is set, i.e. the largest bit-reversed mask
    reversed_ = np.zeros_like(masks)
    for i in range(prob.n):
        reversed_ |= ((masks >> i) & 1) << (prob.n - 1 - i)
    best = int(masks[np.argmax(reversed_)])
    return prob.result(best, "exhaustive", True)


def solve_greedy(sys, p, config: SolverConfig) -> SpanningSetResult:
    """Grow from the empty set, adding the best object while it improves."""
    prob = _Problem(sys, p, config)
    current, current_score = 0, prob.score(0)
    while current.bit_count() < prob.limit:
        best, best_score = None, current_score + SCORE_TOLERANCE
        for i in range(prob.n):
            if current >> i & 1:
                continue
            cand = current | (1 << i)
            s = prob.score(cand)
            if s > best_score:
                best, best_score = cand, s
        if best is None:
            break
        current, current_score = best, best_score
    return prob.result(current, "greedy", False)


def solve_local(sys, p, config: SolverConfig, seed: Iterable = (), max_iters: int = 1000) -> SpanningSetResult:
    """Best-improvement hill climbing over add, remove and swap moves."""
    if max_iters < 1:
        raise ValueError("max_iters must be positive")
    prob = _Problem(sys, p, config)
    seed = list(seed)
    try:
        current = prob.to_mask(seed)
    except ValueError:
        raise InvalidSeed("seed contains objects outside the universe") from None
    if current.bit_count() > prob.limit:
        raise InvalidSeed(f"seed has {current.bit_count()} objects, limit is {prob.limit}")
    current_score = prob.score(current)
    for _ in range(max_iters):
        inside = [i for i in range(prob.n) if current >> i & 1]
        outside = [i for i in range(prob.n) if not current >> i & 1]
        neighbours = [current & ~(1 << i) for i in inside]
        neighbours += [current ^ (1 << i) ^ (1 << j) for i in inside for j in outside]
        if len(inside) < prob.limit:
            neighbours += [current | (1 << j) for j in outside]
        neighbours.sort(key=prob.order_key)
        best, best_score = None, current_score + SCORE_TOLERANCE
        for cand in neighbours:
            s = prob.score(cand)
            if s > best_score:
                best, best_score = cand, s
        if best is None:
            break
        current, current_score = best, best_score
    return prob.result(current, "local", False)


def solve(sys, p, config: SolverConfig, seed: Iterable = (), max_iters: int = 1000) -> SpanningSetResult:
    if config.strategy == "exhaustive":
        return solve_exhaustive(sys, p, config)
    if config.strategy == "greedy":
        return solve_greedy(sys, p, config)
    return solve_local(sys, p, config, seed=seed, max_iters=max_iters)
