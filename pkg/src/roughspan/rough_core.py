"""Crisp (Pawlak) rough sets over categorical information tables.

Objects are indexed internally by bit position so approximations reduce to
integer mask arithmetic; the public functions still speak in frozensets of
object identifiers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping, NamedTuple, Sequence

from .errors import (
    AttributeNotFound,
    DuplicateObjectId,
    EmptyTable,
    InvalidTable,
    MissingDecision,
    ObjectNotFound,
    UndefinedAccuracy,
)

ObjectId = Hashable


def id_key(obj):
    """Sort key for object ids: integers (or integer-looking strings) first,
    numerically, then everything else by its string form."""
    if isinstance(obj, bool):
        return (1, str(obj))
    if isinstance(obj, int):
        return (0, obj, "")
    if isinstance(obj, str):
        stripped = obj.strip()
        if stripped.lstrip("-").isdigit():
            return (0, int(stripped), obj)
    return (1, str(obj))


def sort_ids(ids: Iterable[ObjectId]) -> list:
    return sorted(ids, key=id_key)


@dataclass(frozen=True)
class InformationSystem:
    """A finite universe of objects described by categorical attributes.

    ``values`` maps ``(object, attribute)`` to an opaque value token and must
    cover every object for every conditional attribute and for the decision
    attribute, when one is given.
    """

    objects: tuple
    attributes: tuple
    values: Mapping
    decision: str | None = None
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        objects = tuple(self.objects)
        attributes = tuple(self.attributes)
        object.__setattr__(self, "objects", objects)
        object.__setattr__(self, "attributes", attributes)
        if not objects:
            raise EmptyTable("an information system needs at least one object")
        if len(set(objects)) != len(objects):
            seen = set()
            dup = next(o for o in objects if o in seen or seen.add(o))
            raise DuplicateObjectId(f"duplicate object id {dup!r}")
        if len(set(attributes)) != len(attributes):
            raise InvalidTable("attribute names must be unique")
        if self.decision is not None and self.decision in attributes:
            raise InvalidTable(
                f"decision attribute {self.decision!r} is also a conditional attribute"
            )
        columns = list(attributes)
        if self.decision is not None:
            columns.append(self.decision)
        values = dict(self.values)
        for o in objects:
            for a in columns:
                if (o, a) not in values:
                    raise InvalidTable(f"missing value for object {o!r}, attribute {a!r}")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "_index", {o: i for i, o in enumerate(objects)})

    @classmethod
    def from_rows(
        cls,
        objects: Sequence,
        attributes: Sequence[str],
        rows: Sequence[Sequence],
        decision: str | None = None,
        decisions: Sequence | None = None,
    ) -> "InformationSystem":
        """Build from one row of attribute values per object."""
        values = {}
        for o, row in zip(objects, rows, strict=True):
            if len(row) != len(attributes):
                raise InvalidTable(f"row for object {o!r} has {len(row)} values")
            for a, v in zip(attributes, row):
                values[(o, a)] = v
        if decision is not None:
            if decisions is None:
                raise InvalidTable("decision name given without decision values")
            for o, d in zip(objects, decisions, strict=True):
                values[(o, decision)] = d
        return cls(tuple(objects), tuple(attributes), values, decision)

    @property
    def size(self) -> int:
        return len(self.objects)

    def value(self, obj, attribute):
        return self.values[(obj, attribute)]

    def index_of(self, obj) -> int:
        try:
            return self._index[obj]
        except (KeyError, TypeError):
            raise ObjectNotFound(f"object {obj!r} is not in the universe") from None

    def decision_classes(self) -> list[frozenset]:
        """Objects grouped by decision value, ordered like ``partition``."""
        if self.decision is None:
            raise MissingDecision("information system has no decision attribute")
        groups: dict = {}
        for o in self.objects:
            groups.setdefault(self.values[(o, self.decision)], []).append(o)
        return _order_classes(frozenset(g) for g in groups.values())

    def with_object_order(self, objects: Sequence) -> "InformationSystem":
        """Same table, objects listed in a different order."""
        if sorted(map(id_key, objects)) != sorted(map(id_key, self.objects)):
            raise InvalidTable("reordering must be a permutation of the universe")
        return InformationSystem(tuple(objects), self.attributes, self.values, self.decision)


class Approximation(NamedTuple):
    lower: frozenset
    upper: frozenset
    boundary: frozenset


def _order_classes(classes: Iterable[frozenset]) -> list[frozenset]:
    return sorted(classes, key=lambda c: id_key(min(c, key=id_key)))


def _check_attributes(sys: InformationSystem, p: Iterable[str]) -> frozenset:
    p = frozenset([p] if isinstance(p, str) else p)
    unknown = p.difference(sys.attributes)
    if unknown:
        raise AttributeNotFound(f"unknown attribute(s): {sorted(map(str, unknown))}")
    return p


def class_masks(sys: InformationSystem, p: Iterable[str]) -> tuple[int, ...]:
    """Indiscernibility classes of ``p`` as bit masks over ``sys.objects``."""
    p = _check_attributes(sys, p)
    cached = sys._cache.get(p)
    if cached is not None:
        return cached
    attrs = [a for a in sys.attributes if a in p]
    groups: dict = {}
    for i, o in enumerate(sys.objects):
        key = tuple(sys.values[(o, a)] for a in attrs)
        groups[key] = groups.get(key, 0) | (1 << i)
    masks = tuple(groups.values())
    sys._cache[p] = masks
    return masks


def subset_mask(sys: InformationSystem, x: Iterable) -> int:
    mask = 0
    for o in x:
        mask |= 1 << sys.index_of(o)
    return mask


def mask_members(sys: InformationSystem, mask: int) -> frozenset:
    return frozenset(o for i, o in enumerate(sys.objects) if mask >> i & 1)


def approximate_mask(masks: Sequence[int], xmask: int) -> tuple[int, int]:
    """Return (lower, upper) masks of ``xmask`` under the given granules."""
    lower = upper = 0
    for m in masks:
        hit = m & xmask
        if hit:
            upper |= m
            if hit == m:
                lower |= m
    return lower, upper


def partition(sys: InformationSystem, p: Iterable[str]) -> list[frozenset]:
    """Equivalence classes of "same value on every attribute of ``p``".

    >>> sys = InformationSystem.from_rows([1, 2, 3], ["a"], [["x"], ["x"], ["y"]])
    >>> partition(sys, ["a"])
    [frozenset({1, 2}), frozenset({3})]
    """
    return _order_classes(mask_members(sys, m) for m in class_masks(sys, p))


def approximate(sys: InformationSystem, p: Iterable[str], x: Iterable) -> Approximation:
    masks = class_masks(sys, p)
    lower, upper = approximate_mask(masks, subset_mask(sys, x))
    return Approximation(
        mask_members(sys, lower), mask_members(sys, upper), mask_members(sys, upper & ~lower)
    )


def accuracy(sys: InformationSystem, p: Iterable[str], x: Iterable) -> float:
    """|lower| / |upper|; undefined (raises) for the empty set."""
    lower, upper = approximate_mask(class_masks(sys, p), subset_mask(sys, x))
    if upper == 0:
        raise UndefinedAccuracy("accuracy of the empty set is undefined (0/0)")
    return lower.bit_count() / upper.bit_count()


def roughness(sys: InformationSystem, p: Iterable[str], x: Iterable) -> float:
    return 1.0 - accuracy(sys, p, x)
