import pytest

from roughspan import DuplicateObjectId, EmptyTable, InvalidFuzzyRelation, InvalidFuzzySet, RaggedRow
from roughspan.formats import (
    format_fuzzy_set,
    parse_fuzzy_partition,
    parse_fuzzy_relation,
    parse_fuzzy_set,
    parse_information_table,
)


def test_minimal_table():
    sys = parse_information_table(b"id,a\n1,x\n2,x\n3,y\n")
    assert sys.objects == ("1", "2", "3")
    assert sys.attributes == ("a",)
    assert sys.decision is None


def test_decision_column():
    sys = parse_information_table(b"id,a,#decision\n1,x,yes\n2,y,no\n")
    assert sys.attributes == ("a",)
    assert sys.decision == "#decision"
    assert sys.value("2", "#decision") == "no"


@pytest.mark.parametrize("data, error", [
    (b"id,a\n1,x\n1,y\n", DuplicateObjectId),
    (b"id,a\n1,x,z\n", RaggedRow),
    (b"id,a\n", EmptyTable),
    (b"", EmptyTable),
])
def test_table_errors(data, error):
    with pytest.raises(error):
        parse_information_table(data)


def test_fuzzy_set_round_trip():
    f = parse_fuzzy_set("id,grade\nkids,0.25\nboys,1\n")
    assert f.universe == ("kids", "boys")
    assert parse_fuzzy_set(format_fuzzy_set(f)).membership.tolist() == [0.25, 1.0]


@pytest.mark.parametrize("data", ["id,grade\na,1.5\n", "id,grade\na,high\n"])
def test_fuzzy_set_bad_grades(data):
    with pytest.raises(InvalidFuzzySet):
        parse_fuzzy_set(data)


def test_fuzzy_set_rejects_extra_column():
    with pytest.raises(RaggedRow):
        parse_fuzzy_set("id,grade\na,0.1,0.2\n")


def test_relation_file():
    rel = parse_fuzzy_relation("id,x,y\nx,1,0.3\ny,0.3,1\n")
    assert rel.values.tolist() == [[1, 0.3], [0.3, 1]]


@pytest.mark.parametrize("data", [
    "id,x,y\nx,1,0.3\n",
    "id,x,y\ny,1,0.3\nx,0.3,1\n",
    "id,x,y\nx,1\ny,0.3,1\n",
])
def test_relation_shape_errors(data):
    with pytest.raises(RaggedRow):
        parse_fuzzy_relation(data)


def test_relation_grade_error_is_fuzzy_set_error():
    with pytest.raises(InvalidFuzzySet):
        parse_fuzzy_relation("id,x\nx,2\n")


def test_partition_file():
    part = parse_fuzzy_partition("id,c1,c2\na,1,0\nb,0.4,0.6\n")
    assert len(part.classes) == 2
    assert part.classes[1].membership.tolist() == [0, 0.6]
