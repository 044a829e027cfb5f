import itertools
import sys
import random

import pytest

from borderidx import OrderIdeal, order_ideal_from_generators
from borderidx.sampling import random_order_ideal

# Index of O = {1, x1, x1^2, x2, x2^2} on the box up to (7, 7), transcribed
# row by row; the top row is x2^7, the bottom row x2^0.
GOLDEN_ROWS = [
    [5, 6, 7, 8, 9, 10, 11, 12],
    [4, 5, 6, 7, 8, 9, 10, 11],
    [3, 4, 5, 6, 7, 8, 9, 10],
    [2, 3, 4, 5, 6, 7, 8, 9],
    [1, 2, 3, 4, 5, 6, 7, 8],
    [0, 1, 2, 3, 4, 5, 6, 7],
    [0, 1, 1, 2, 3, 4, 5, 6],
    [0, 0, 0, 1, 2, 3, 4, 5],
]


def golden_value(a, b):
    return GOLDEN_ROWS[7 - b][a]


@pytest.fixture
def ex_ideal() -> OrderIdeal:
    return order_ideal_from_generators(2, [(2, 0), (0, 2)])


def brute_downward_closure(dim, gens):
    """Every vector dominated by some generator, by scanning a big enough box."""
    if not gens:
        return set()
    top = [max(g[i] for g in gens) for i in range(dim)]
    return {
        a
        for a in itertools.product(*(range(t + 1) for t in top))
        if any(all(x <= y for x, y in zip(a, g)) for g in gens)
    }


def brute_index(elements, t):
    """Shortest path length from the ideal to t using unit steps, by BFS downwards."""
    frontier, seen, k = {tuple(t)}, {tuple(t)}, 0
    while frontier:
        if frontier & elements:
            return k
        nxt = set()
        for a in frontier:
            for i, x in enumerate(a):
                if x > 0:
                    b = a[:i] + (x - 1,) + a[i + 1:]
                    if b not in seen:
                        seen.add(b)
                        nxt.add(b)
        frontier, k = nxt, k + 1
    raise AssertionError("origin missing from ideal")


def random_corpus(seed, count, max_dim=4, max_elements=60, max_coord=4):
    rng = random.Random(seed)
    return [
        random_order_ideal(rng, rng.randint(1, max_dim), max_elements, max_coord)
        for _ in range(count)
    ]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for fn in mod.CRITERIA:
        line = mod.RESULTS.get(fn.__name__)
        if line:
            terminalreporter.write_line(line)
