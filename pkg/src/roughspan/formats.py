"""CSV readers for information tables, fuzzy relations and fuzzy sets.

Information table: header row, first column is the object id, remaining
columns are attributes; an optional final column named ``#decision`` is the
decision attribute.

Fuzzy relation: header row ``<anything>,id1,...,idn`` then one row per id in
the same order, ``idk,R(idk,id1),...,R(idk,idn)``.

Fuzzy set: header row then two columns per row, ``id,grade``.

Fuzzy partition: header row ``id,class1,...,classk`` then one row per object
giving its grade in every class.
"""

from __future__ import annotations

import csv
import io

from .errors import DuplicateObjectId, EmptyTable, InvalidFuzzySet, RaggedRow
from .fuzzy_rough import FuzzyPartition, FuzzyRelation, FuzzySet
from .rough_core import InformationSystem

DECISION_COLUMN = "#decision"


def _rows(data) -> list[list[str]]:
    if isinstance(data, bytes):
        data = data.decode("utf-8-sig")
    rows = [r for r in csv.reader(io.StringIO(data)) if r and any(c.strip() for c in r)]
    return [[c.strip() for c in r] for r in rows]


def _unique_ids(ids):
    seen = set()
    for i in ids:
        if i in seen:
            raise DuplicateObjectId(f"duplicate object id {i!r}")
        seen.add(i)


def parse_information_table(data) -> InformationSystem:
    rows = _rows(data)
    if len(rows) < 2:
        raise EmptyTable("table needs a header row and at least one object row")
    header, body = rows[0], rows[1:]
    if len(header) < 1:
        raise EmptyTable("table header is empty")
    for k, r in enumerate(body, start=2):
        if len(r) != len(header):
            raise RaggedRow(f"row {k} has {len(r)} cells, header has {len(header)}")
    columns = header[1:]
    decision = None
    if columns and columns[-1] == DECISION_COLUMN:
        decision = DECISION_COLUMN
        columns = columns[:-1]
    ids = [r[0] for r in body]
    _unique_ids(ids)
    values = {}
    for r in body:
        for a, v in zip(header[1:], r[1:]):
            values[(r[0], a)] = v
    return InformationSystem(tuple(ids), tuple(columns), values, decision)


def _grade(cell: str, where: str) -> float:
    try:
        g = float(cell)
    except ValueError:
        raise InvalidFuzzySet(f"{where}: {cell!r} is not a number") from None
    if not 0.0 <= g <= 1.0:
        raise InvalidFuzzySet(f"{where}: grade {g} outside [0, 1]")
    return g


def parse_fuzzy_set(data) -> FuzzySet:
    rows = _rows(data)
    if len(rows) < 2:
        raise EmptyTable("fuzzy set file needs a header and at least one row")
    body = rows[1:]
    for k, r in enumerate(body, start=2):
        if len(r) != 2:
            raise RaggedRow(f"row {k}: expected 'id,grade', got {len(r)} cells")
    ids = [r[0] for r in body]
    _unique_ids(ids)
    return FuzzySet(tuple(ids), [_grade(r[1], f"row {k}") for k, r in enumerate(body, start=2)])


def parse_fuzzy_relation(data) -> FuzzyRelation:
    rows = _rows(data)
    if len(rows) < 2:
        raise EmptyTable("relation file needs a header and at least one row")
    header, body = rows[0], rows[1:]
    ids = header[1:]
    _unique_ids(ids)
    if len(body) != len(ids):
        raise RaggedRow(f"relation has {len(ids)} columns but {len(body)} rows")
    matrix = []
    for k, r in enumerate(body, start=2):
        if len(r) != len(header):
            raise RaggedRow(f"row {k} has {len(r)} cells, header has {len(header)}")
        if r[0] != ids[k - 2]:
            raise RaggedRow(f"row {k} id {r[0]!r} does not match column id {ids[k - 2]!r}")
        matrix.append([_grade(c, f"row {k}") for c in r[1:]])
    return FuzzyRelation(tuple(ids), matrix)


def parse_fuzzy_partition(data) -> FuzzyPartition:
    rows = _rows(data)
    if len(rows) < 2 or len(rows[0]) < 2:
        raise EmptyTable("partition file needs a header with at least one class column")
    header, body = rows[0], rows[1:]
    for k, r in enumerate(body, start=2):
        if len(r) != len(header):
            raise RaggedRow(f"row {k} has {len(r)} cells, header has {len(header)}")
    ids = tuple(r[0] for r in body)
    _unique_ids(ids)
    classes = [
        FuzzySet(ids, [_grade(r[j], f"row {k}") for k, r in enumerate(body, start=2)])
        for j in range(1, len(header))
    ]
    return FuzzyPartition.of(classes)


def format_fuzzy_set(f: FuzzySet) -> str:
    lines = ["id,grade"] + [f"{o},{g!r}" for o, g in zip(f.universe, f.membership.tolist())]
    return "\n".join(lines) + "\n"
