"""Built-in sentence-span fixture and the published span grid it reproduces.

The universe is nine domain words; the lower/upper fuzzy approximations of
two sentences were obtained from a WordNet-style similarity relation that is
not itself available, so the vectors are shipped as data.
"""

from __future__ import annotations

from typing import NamedTuple

from .fuzzy_rough import FuzzySet
from .span import fuzzy_span

UNIVERSE = ("kids", "group", "standing", "boys", "background", "old", "man", "yard", "playing")

SENTENCES = {
    "S1": "A group of boys in a yard is playing and a man is standing in the background",
    "S2": "A group of kids is playing in a yard and an old man is standing in the background",
}

APPROXIMATIONS = {
    "S1": (
        (0.6667, 0.5556, 0.5455, 0.6667, 0.5455, 0.5455, 0.6667, 0.6923, 0.7647),
        (0.6667, 1, 1, 1, 1, 0.5455, 1, 1, 1),
    ),
    "S2": (
        (0.6667, 0.7778, 0.8334, 0.6667, 0.8182, 0.8334, 0.6667, 0.8462, 0.8823),
        (1, 1, 1, 0.6667, 1, 1, 1, 1, 1),
    ),
}

# (w1, S1, S2) as printed, in printed row order
PUBLISHED = (
    (0.2, 0.8554, 0.9257),
    (0.1, 0.8839, 0.9443),
    (0.8, 0.8554, 0.9257),
    (0.9, 0.6561, 0.7954),
    (0.5, 0.7700, 0.8698),
    (0.3, 0.8270, 0.9071),
    (0.7, 0.7130, 0.8326),
)

# the w1=0.8 row repeats the w1=0.2 values; these are the recomputed ones
ERRATA = {(0.8, "S1"): 0.6846, (0.8, "S2"): 0.8140}

TOLERANCE = 5e-4


class Cell(NamedTuple):
    w1: float
    sentence: str
    published: float
    computed: float
    matches_published: bool
    erratum: bool
    expected: float  # published value, or the recomputed value for errata

    @property
    def ok(self) -> bool:
        return abs(self.computed - self.expected) <= TOLERANCE


def sentence_approximations(sentence: str) -> tuple[FuzzySet, FuzzySet]:
    lower, upper = APPROXIMATIONS[sentence]
    return FuzzySet(UNIVERSE, lower), FuzzySet(UNIVERSE, upper)


def reproduce() -> list[Cell]:
    cells = []
    for w1, *printed in PUBLISHED:
        for sentence, published in zip(("S1", "S2"), printed):
            lower, upper = sentence_approximations(sentence)
            value = fuzzy_span(lower, upper, w1).value
            erratum = (w1, sentence) in ERRATA
            cells.append(
                Cell(
                    w1, sentence, published, value,
                    abs(value - published) <= TOLERANCE,
                    erratum,
                    ERRATA.get((w1, sentence), published),
                )
            )
    return cells
