"""Random order ideals, partitions and weights for oracle sweeps."""
from __future__ import annotations

import os
import random
from fractions import Fraction

from .lattice import OrderIdeal, box_points, order_ideal_from_generators
from .pn import LinearWeight

SEED_ENV = "BORDERIDX_SEED"


def rng_from_env(default: int = 0) -> random.Random:
    return random.Random(int(os.environ.get(SEED_ENV, default)))


def random_order_ideal(
    rng: random.Random, dim: int, max_elements: int = 60, max_coord: int = 4
) -> OrderIdeal:
    """Downward closure of a few random generators, capped at ``max_elements``.

    Generators that would push the ideal over the cap are skipped, so the
    result is never empty (the origin is always accepted).
    """
    elements = {(0,) * dim}
    for _ in range(rng.randint(1, 2 + dim)):
        g = tuple(rng.randint(0, max_coord) for _ in range(dim))
        grown = elements | set(box_points(g))
        if len(grown) <= max_elements:
            elements = grown
    return order_ideal_from_generators(dim, elements)


def random_partition(rng: random.Random, max_parts: int = 6, max_part: int = 6) -> tuple[int, ...]:
    m = rng.randint(1, max_parts)
    return tuple(sorted((rng.randint(1, max_part) for _ in range(m)), reverse=True))


def random_weight(rng: random.Random, n: int, bound: int = 1000) -> LinearWeight:
    def q():
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    return LinearWeight([q() for _ in range(n)], q())
