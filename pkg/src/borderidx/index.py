"""Borders, higher borders and the index function of an order ideal.

The index of ``t`` is the layer it sits in when the staircase is grown one
border at a time: 0 on the ideal itself, 1 on its border, and so on.  Two
independent routes compute it, a divisor minimisation and a dynamic
program over the box; the tests hold them against each other.
"""
from __future__ import annotations

import itertools
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from .lattice import ExponentVector, OrderIdeal, as_vector, box_points, divides


def _neighbours_up(points: Iterable[ExponentVector], dim: int) -> set[ExponentVector]:
    out = set()
    for a in points:
        for i in range(dim):
            out.add(a[:i] + (a[i] + 1,) + a[i + 1:])
    return out


def border(O: OrderIdeal) -> frozenset[ExponentVector]:
    O._require_nonempty()
    return frozenset(_neighbours_up(O.elements, O.dim) - O.elements)


def higher_border_by_multiples(O: OrderIdeal, k: int) -> frozenset[ExponentVector]:
    """``T_k * O`` minus everything reachable with fewer than ``k`` steps."""
    O._require_nonempty()
    if k < 0:
        raise ValueError("k must be nonnegative")
    lower: set[ExponentVector] = set()
    layer = set(O.elements)
    for _ in range(k):
        lower |= layer
        layer = _neighbours_up(layer, O.dim)
    return frozenset(layer - lower)


def higher_border(O: OrderIdeal, k: int, *, check: bool = True) -> frozenset[ExponentVector]:
    """The ``k``-th border layer, computed by iterating ``border``.

    With ``check`` the result is compared to the multiples-of-degree-``k``
    description and a mismatch raises ``AssertionError``.  Every layer of
    a finite ideal is finite, so no truncation is involved.
    """
    O._require_nonempty()
    if k < 0:
        raise ValueError("k must be nonnegative")
    closed = set(O.elements)
    layer = frozenset(O.elements)
    for _ in range(k):
        layer = frozenset(_neighbours_up(closed, O.dim) - closed)
        closed |= layer
    if check:
        other = higher_border_by_multiples(O, k)
        if other != layer:
            raise AssertionError(f"border layer {k} disagrees between methods")
    return layer


def index_by_divisor(O: OrderIdeal, t: Iterable[int]) -> int:
    """Least ``|t| - |s|`` over divisors ``s`` of ``t`` lying in ``O``."""
    O._require_nonempty()
    t = as_vector(t, O.dim)
    deg = sum(t)
    return min(deg - sum(s) for s in O.elements if divides(s, t))


@dataclass(frozen=True)
class IndexTable:
    """Dense table of the index over the box ``0 <= alpha <= bounds``."""

    bounds: ExponentVector
    values: np.ndarray

    def __getitem__(self, alpha) -> int:
        return int(self.values[tuple(alpha)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, IndexTable):
            return NotImplemented
        return self.bounds == other.bounds and np.array_equal(self.values, other.values)

    def items(self):
        for alpha in box_points(self.bounds):
            yield alpha, int(self.values[alpha])

    def rows(self) -> list[list[int]]:
        """Rows of a two-variable table, top row = largest second exponent."""
        if len(self.bounds) != 2:
            raise ValueError("rows() needs a two-variable table")
        return [[int(v) for v in self.values[:, j]] for j in range(self.bounds[1], -1, -1)]

    def render_matrix(self) -> str:
        """Plain-text matrix with the origin at the bottom left.

        Tables in more than two variables are printed as a sequence of
        2-D slices, one per value of the trailing coordinates.
        """
        n = len(self.bounds)
        if n == 1:
            return " ".join(str(int(v)) for v in self.values)
        if n == 2:
            return "\n".join(" ".join(map(str, row)) for row in self.rows())
        blocks = []
        for rest in box_points(self.bounds[2:]):
            sub = IndexTable(self.bounds[:2], self.values[(slice(None), slice(None)) + rest])
            header = "# slice " + ", ".join(f"y{i + 3}={v}" for i, v in enumerate(rest))
            blocks.append(header + "\n" + sub.render_matrix())
        return "\n\n".join(blocks)


def index_table(O: OrderIdeal, bounds: Iterable[int]) -> IndexTable:
    """Index over a box by the recursion ``1 + min ind(t - e_i)`` outside ``O``.

    Points are visited by increasing total degree so each ``t - e_i`` is
    already filled in.
    """
    O._require_nonempty()
    bounds = as_vector(bounds, O.dim)
    shape = tuple(b + 1 for b in bounds)
    values = np.zeros(shape, dtype=np.int64)
    n = O.dim
    for t in sorted(itertools.product(*(range(s) for s in shape)), key=sum):
        if t in O.elements:
            continue
        values[t] = 1 + min(
            values[t[:i] + (t[i] - 1,) + t[i + 1:]] for i in range(n) if t[i] > 0
        )
    return IndexTable(bounds, values)
