"""Random instance generators and brute-force oracles for the test suite.

The oracles work straight from the definitions (pairwise indiscernibility,
explicit loops) and share no code with the package.
"""

import itertools
import random

from roughspan import InformationSystem


def random_table(rng: random.Random, n_max=8, a_max=4, v_max=3, n_min=1, decision=False, k_max=3):
    n = rng.randint(n_min, n_max)
    m = rng.randint(1, a_max)
    attrs = [f"a{j}" for j in range(m)]
    rows = [[str(rng.randrange(rng.randint(1, v_max))) for _ in attrs] for _ in range(n)]
    if decision:
        k = rng.randint(1, k_max)
        return InformationSystem.from_rows(
            list(range(1, n + 1)), attrs, rows, "d", [str(rng.randrange(k)) for _ in range(n)]
        )
    return InformationSystem.from_rows(list(range(1, n + 1)), attrs, rows)


def subsets(items):
    items = list(items)
    for r in range(len(items) + 1):
        yield from itertools.combinations(items, r)


def indiscernible(sys, p, x, y):
    return all(sys.value(x, a) == sys.value(y, a) for a in p)


def brute_class(sys, p, x):
    return {y for y in sys.objects if indiscernible(sys, p, x, y)}


def brute_approx(sys, p, x):
    x = set(x)
    lower = {o for o in sys.objects if brute_class(sys, p, o) <= x}
    upper = {o for o in sys.objects if brute_class(sys, p, o) & x}
    return lower, upper


def brute_delta(sys, p, x, w1):
    lo, up = brute_approx(sys, p, x)
    return (w1 * len(lo) + (1 - w1) * (len(up) - len(lo))) / len(sys.objects)


def brute_delta_prime(sys, p, x, w1):
    lo, up = brute_approx(sys, p, x)
    return (w1 * len(lo) + (1 - w1) * len(up)) / len(sys.objects)


def brute_best(sys, score, max_size=None):
    """Max score over all subsets within the size bound, by enumeration."""
    n = len(sys.objects) if max_size is None else max_size
    return max(score(set(s)) for s in subsets(sys.objects) if len(s) <= n)


WEIGHT_GRID = [round(0.1 * k, 1) for k in range(11)]
