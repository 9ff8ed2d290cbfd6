import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import brute_approx, random_table, subsets
from roughspan import (
    AttributeNotFound,
    DuplicateObjectId,
    InformationSystem,
    InvalidTable,
    ObjectNotFound,
    UndefinedAccuracy,
    accuracy,
    approximate,
    partition,
    roughness,
)


def test_partition_groups_equal_values(six):
    assert partition(six, ["a"]) == [{1, 2}, {3, 4}, {5, 6}]


def test_empty_attribute_set_gives_single_class(six):
    assert partition(six, []) == [frozenset(six.objects)]


def test_all_distinct_values_give_singletons():
    sys = InformationSystem.from_rows([1, 2], ["a", "b"], [["p", "q"], ["r", "s"]])
    assert partition(sys, ["a", "b"]) == [{1}, {2}]


def test_partition_classes_ordered_by_smallest_member():
    sys = InformationSystem.from_rows([5, 1, 3, 2], ["a"], [["u"], ["v"], ["u"], ["w"]])
    assert partition(sys, "a") == [{1}, {2}, {3, 5}]


def test_unknown_attribute(six):
    with pytest.raises(AttributeNotFound):
        partition(six, ["nope"])


def test_approximate_example(six):
    appr = approximate(six, ["a"], {1, 2, 3})
    assert appr.lower == {1, 2}
    assert appr.upper == {1, 2, 3, 4}
    assert appr.boundary == {3, 4}


@pytest.mark.parametrize("x, expected", [(set(), (set(), set(), set())),
                                         ({1, 2, 3, 4, 5, 6}, ({1, 2, 3, 4, 5, 6},) * 2 + (set(),))])
def test_approximate_extremes(six, x, expected):
    assert tuple(approximate(six, ["a"], x)) == expected


def test_unknown_object(six):
    with pytest.raises(ObjectNotFound):
        approximate(six, ["a"], {7})


def test_accuracy_and_roughness(six):
    assert accuracy(six, ["a"], {1, 2, 3}) == 0.5
    assert roughness(six, ["a"], {1, 2, 3}) == 0.5
    assert accuracy(six, ["a"], {3, 4}) == 1.0
    assert roughness(six, ["a"], {3, 4, 5, 6}) == 0.0


def test_accuracy_of_empty_set_is_an_error(six):
    with pytest.raises(UndefinedAccuracy):
        accuracy(six, ["a"], set())


def test_table_validation():
    with pytest.raises(DuplicateObjectId):
        InformationSystem.from_rows([1, 1], ["a"], [["x"], ["y"]])
    with pytest.raises(InvalidTable):
        InformationSystem((1,), ("a",), {})
    with pytest.raises(InvalidTable):
        InformationSystem.from_rows([1], ["a"], [["x"]], decision="a", decisions=["y"])


def test_mixed_id_types_sort_deterministically():
    sys = InformationSystem.from_rows(["b", 10, "2", "a"], ["k"], [["0"]] * 4)
    assert partition(sys, ["k"]) == [frozenset({"b", 10, "2", "a"})]
    assert sorted(map(str, approximate(sys, ["k"], {"a"}).upper)) == ["10", "2", "a", "b"]


def test_against_pairwise_oracle_on_random_tables():
    rng = random.Random(7)
    for _ in range(150):
        sys = random_table(rng)
        for p in subsets(sys.attributes):
            for x in subsets(sys.objects):
                lower, upper = brute_approx(sys, p, x)
                appr = approximate(sys, p, x)
                assert appr.lower == lower and appr.upper == upper
                assert appr.boundary == upper - lower


@st.composite
def tables(draw):
    return random_table(random.Random(draw(st.integers(0, 2**32 - 1))))


@settings(max_examples=150, deadline=None)
@given(tables(), st.data())
def test_partition_is_a_partition(sys, data):
    p = data.draw(st.sets(st.sampled_from(sys.attributes)))
    classes = partition(sys, p)
    assert all(classes)
    assert sum(len(c) for c in classes) == sys.size
    assert frozenset().union(*classes) == frozenset(sys.objects)


@settings(max_examples=150, deadline=None)
@given(tables(), st.data())
def test_sandwich_and_attribute_monotonicity(sys, data):
    p = data.draw(st.sets(st.sampled_from(sys.attributes)))
    q = data.draw(st.sets(st.sampled_from(sorted(p)))) if p else set()
    for x in subsets(sys.objects):
        x = set(x)
        ap, aq = approximate(sys, p, x), approximate(sys, q, x)
        assert ap.lower <= x <= ap.upper
        assert aq.lower <= ap.lower
        assert ap.upper <= aq.upper


@settings(max_examples=100, deadline=None)
@given(tables(), st.data())
def test_object_monotonicity(sys, data):
    p = data.draw(st.sets(st.sampled_from(sys.attributes)))
    y = data.draw(st.sets(st.sampled_from(sys.objects)))
    x = data.draw(st.sets(st.sampled_from(sorted(y)))) if y else set()
    ax, ay = approximate(sys, p, x), approximate(sys, p, y)
    assert ax.lower <= ay.lower and ax.upper <= ay.upper
