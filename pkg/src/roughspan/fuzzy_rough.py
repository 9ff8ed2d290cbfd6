"""Fuzzy similarity relations and min/max fuzzy-rough approximation operators.

Three operator families are provided:

* ``"I"``   per-object grades from a fuzzy relation row,
            lower(x) = min_y max(1 - R(x, y), mu(y)),
            upper(x) = max_y min(R(x, y), mu(y)).
* ``"II"``  a single grade for how a granule F sits inside the set mu,
            lower = min_y max(1 - F(y), mu(y)), upper = max_y min(F(y), mu(y)),
            broadcast over the universe.
* ``"III"`` per-object grades composed over a fuzzy partition,
            sup_F min(F(x), <definition II grade of F>).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import (
    InvalidFuzzyRelation,
    InvalidFuzzySet,
    MissingOperand,
    MissingPartition,
    UniverseMismatch,
)

TOLERANCE = 1e-9
DEFINITIONS = ("I", "II", "III")
VALIDATION_MODES = ("strict", "warn", "off")


def _as_grades(values, shape_desc: str) -> np.ndarray:
    arr = np.array(values, dtype=float)
    if arr.size and not np.all(np.isfinite(arr)):
        raise InvalidFuzzySet(f"{shape_desc} contains non-finite grades")
    if arr.size and (arr.min() < 0.0 or arr.max() > 1.0):
        raise InvalidFuzzySet(f"{shape_desc} grades must lie in [0, 1]")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class FuzzySet:
    universe: tuple
    membership: np.ndarray

    def __post_init__(self):
        universe = tuple(self.universe)
        object.__setattr__(self, "universe", universe)
        grades = _as_grades(self.membership, "fuzzy set")
        if grades.shape != (len(universe),):
            raise InvalidFuzzySet(
                f"expected {len(universe)} grades, got shape {grades.shape}"
            )
        object.__setattr__(self, "membership", grades)

    @classmethod
    def crisp(cls, universe: Sequence, members) -> "FuzzySet":
        members = set(members)
        return cls(tuple(universe), [1.0 if o in members else 0.0 for o in universe])

    def __len__(self):
        return len(self.universe)

    def grade(self, obj) -> float:
        return float(self.membership[self.universe.index(obj)])


@dataclass(frozen=True, eq=False)
class FuzzyRelation:
    """Square matrix of membership grades ``R(x, y)`` over ``universe``."""

    universe: tuple
    values: np.ndarray

    def __post_init__(self):
        universe = tuple(self.universe)
        object.__setattr__(self, "universe", universe)
        if len(set(universe)) != len(universe):
            raise InvalidFuzzyRelation("relation universe has duplicate ids")
        n = len(universe)
        try:
            grades = _as_grades(self.values, "fuzzy relation")
        except InvalidFuzzySet as exc:
            raise InvalidFuzzyRelation(str(exc)) from None
        if grades.shape != (n, n):
            raise InvalidFuzzyRelation(f"expected a {n}x{n} matrix, got shape {grades.shape}")
        object.__setattr__(self, "values", grades)

    @classmethod
    def from_partition(cls, universe: Sequence, classes) -> "FuzzyRelation":
        """Crisp 0/1 equivalence relation induced by a partition of ``universe``."""
        universe = tuple(universe)
        label = {}
        for k, c in enumerate(classes):
            for o in c:
                label[o] = k
        lab = np.array([label[o] for o in universe])
        return cls(universe, (lab[:, None] == lab[None, :]).astype(float))


class FuzzyPartition(NamedTuple):
    classes: tuple

    @classmethod
    def of(cls, classes: Sequence[FuzzySet]) -> "FuzzyPartition":
        classes = tuple(classes)
        if not classes:
            raise MissingPartition("a fuzzy partition needs at least one class")
        first = classes[0].universe
        for c in classes[1:]:
            if c.universe != first:
                raise UniverseMismatch("partition classes are over different universes")
        return cls(classes)


class FuzzyApproximation(NamedTuple):
    lower: FuzzySet
    upper: FuzzySet


class Violation(NamedTuple):
    axiom: str  # "reflexive" | "symmetric" | "transitive"
    witness: tuple  # (x,), (x, y) or (x, y, z) with z the intermediate object
    magnitude: float


@dataclass(frozen=True)
class ValidationReport:
    mode: str
    violations: tuple

    @property
    def valid(self) -> bool:
        return not self.violations

    def by_axiom(self, axiom: str) -> list[Violation]:
        return [v for v in self.violations if v.axiom == axiom]


def relation_violations(rel: FuzzyRelation, tol: float = TOLERANCE) -> list[Violation]:
    R = rel.values
    u = rel.universe
    out = []
    diag = 1.0 - np.diag(R)
    for i in np.flatnonzero(diag > tol):
        out.append(Violation("reflexive", (u[i],), float(diag[i])))
    asym = np.abs(R - R.T)
    for i, j in zip(*np.nonzero(np.triu(asym, 1) > tol)):
        out.append(Violation("symmetric", (u[i], u[j]), float(asym[i, j])))
    # gap[x, y, z] = min(R[x, z], R[z, y]) - R[x, y]
    gap = np.minimum(R[:, None, :], R.T[None, :, :]) - R[:, :, None]
    for i, j, k in zip(*np.nonzero(gap > tol)):
        out.append(Violation("transitive", (u[i], u[j], u[k]), float(gap[i, j, k])))
    return out


def validate_relation(rel: FuzzyRelation, mode: str = "warn") -> ValidationReport:
    """Check reflexivity, symmetry and min-transitivity of ``rel``.

    ``strict`` raises on any violation, ``warn`` emits a warning and returns
    the report, ``off`` only checks the shape (done at construction).
    """
    if mode not in VALIDATION_MODES:
        raise ValueError(f"mode must be one of {VALIDATION_MODES}, got {mode!r}")
    if mode == "off":
        return ValidationReport(mode, ())
    violations = tuple(relation_violations(rel))
    if violations:
        first = violations[0]
        msg = (
            f"{len(violations)} fuzzy relation axiom violation(s); first: "
            f"{first.axiom} at {first.witness} by {first.magnitude:.3g}"
        )
        if mode == "strict":
            raise InvalidFuzzyRelation(msg, violations)
        warnings.warn(msg, stacklevel=2)
    return ValidationReport(mode, violations)


def _granule_grades(granule: np.ndarray, mu: np.ndarray) -> tuple[float, float]:
    lower = float(np.min(np.maximum(1.0 - granule, mu))) if mu.size else 1.0
    upper = float(np.max(np.minimum(granule, mu))) if mu.size else 0.0
    return lower, upper


def fuzzy_approximate(
    rel: FuzzyRelation | None,
    f: FuzzySet,
    definition: str = "I",
    partition: FuzzyPartition | Sequence[FuzzySet] | None = None,
    granule: FuzzySet | None = None,
) -> FuzzyApproximation:
    """Lower and upper fuzzy-rough approximations of the fuzzy set ``f``.

    ``rel`` is required for definition I, ``granule`` for definition II and
    ``partition`` for definition III.
    """
    if definition not in DEFINITIONS:
        raise ValueError(f"definition must be one of {DEFINITIONS}, got {definition!r}")
    u = f.universe
    mu = f.membership

    if definition == "I":
        if rel is None:
            raise MissingOperand("definition I needs a fuzzy relation")
        if rel.universe != u:
            raise UniverseMismatch("relation and fuzzy set are over different universes")
        R = rel.values
        lower = np.min(np.maximum(1.0 - R, mu[None, :]), axis=1)
        upper = np.max(np.minimum(R, mu[None, :]), axis=1)
        return FuzzyApproximation(FuzzySet(u, lower), FuzzySet(u, upper))

    if definition == "II":
        if granule is None:
            raise MissingOperand("definition II needs a granule fuzzy set")
        if granule.universe != u:
            raise UniverseMismatch("granule and fuzzy set are over different universes")
        lo, up = _granule_grades(granule.membership, mu)
        n = len(u)
        return FuzzyApproximation(FuzzySet(u, np.full(n, lo)), FuzzySet(u, np.full(n, up)))

    if partition is None:
        raise MissingPartition("definition III needs a fuzzy partition")
    if not isinstance(partition, FuzzyPartition):
        partition = FuzzyPartition.of(partition)
    lower = np.zeros(len(u))
    upper = np.zeros(len(u))
    for cls in partition.classes:
        if cls.universe != u:
            raise UniverseMismatch("partition class and fuzzy set are over different universes")
        lo, up = _granule_grades(cls.membership, mu)
        lower = np.maximum(lower, np.minimum(cls.membership, lo))
        upper = np.maximum(upper, np.minimum(cls.membership, up))
    return FuzzyApproximation(FuzzySet(u, lower), FuzzySet(u, upper))


def sigma_count(f: FuzzySet) -> float:
    """Fuzzy cardinality: the sum of membership grades."""
    return float(np.sum(f.membership))
