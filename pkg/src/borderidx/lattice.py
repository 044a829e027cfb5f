"""Exponent vectors and finite order ideals of monomials.

A monomial ``x^a`` in ``n`` variables is identified with its exponent
vector ``a``, a tuple of ``n`` nonnegative integers.  An order ideal is a
finite set of exponent vectors closed under division, i.e. under
subtracting unit vectors while staying nonnegative.
"""
from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

ExponentVector = tuple[int, ...]


class DimensionMismatch(ValueError):
    """Raised when vectors or objects of different ambient dimension meet."""


class EmptyOrderIdeal(ValueError):
    """Raised by operations that need at least the origin in the ideal."""


class InvalidOrderIdeal(ValueError):
    """A set of exponents that is not closed under division.

    ``witness`` is a pair ``(alpha, alpha - e_i)`` where the first member
    is in the set and the second is missing.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


def as_vector(coords: Iterable[int], dim: int | None = None) -> ExponentVector:
    vec = tuple(int(c) for c in coords)
    if any(c < 0 for c in vec):
        raise ValueError(f"negative exponent in {vec}")
    if dim is not None and len(vec) != dim:
        raise DimensionMismatch(f"{vec} has length {len(vec)}, expected {dim}")
    return vec


def unit(dim: int, i: int) -> ExponentVector:
    return tuple(1 if j == i else 0 for j in range(dim))


def add(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    return tuple(x + y for x, y in zip(a, b))


def divides(a: ExponentVector, b: ExponentVector) -> bool:
    """True when ``x^a`` divides ``x^b``, i.e. ``a <= b`` componentwise."""
    return all(x <= y for x, y in zip(a, b))


def box_points(corner: ExponentVector) -> Iterator[ExponentVector]:
    """All vectors ``<= corner`` componentwise, in lexicographic order."""
    return itertools.product(*(range(c + 1) for c in corner))


@dataclass(frozen=True)
class OrderIdeal:
    """A finite, division-closed set of exponent vectors in ``dim`` variables.

    Use the module-level constructors; the raw constructor does not check
    closure.
    """

    dim: int
    elements: frozenset[ExponentVector] = field(default_factory=frozenset)

    def __contains__(self, alpha) -> bool:
        return tuple(alpha) in self.elements

    def __iter__(self) -> Iterator[ExponentVector]:
        return iter(sorted(self.elements, key=lambda a: (sum(a), a)))

    def __len__(self) -> int:
        return len(self.elements)

    def __bool__(self) -> bool:
        return bool(self.elements)

    def _require_nonempty(self) -> None:
        if not self.elements:
            raise EmptyOrderIdeal("operation needs a nonempty order ideal")

    @property
    def corner(self) -> ExponentVector:
        return bounding_box(self).corner


@dataclass(frozen=True)
class BoundingBox:
    corner: ExponentVector

    def __contains__(self, alpha) -> bool:
        return divides(tuple(alpha), self.corner)

    def enlarged(self) -> "BoundingBox":
        return BoundingBox(tuple(m + 1 for m in self.corner))

    def points(self) -> Iterator[ExponentVector]:
        return box_points(self.corner)


def order_ideal_from_generators(dim: int, gens: Iterable[Iterable[int]]) -> OrderIdeal:
    """Downward closure of ``gens``; every divisor of a generator is included."""
    if dim < 1:
        raise ValueError("dimension must be positive")
    elements: set[ExponentVector] = set()
    for g in gens:
        elements.update(box_points(as_vector(g, dim)))
    return OrderIdeal(dim, frozenset(elements))


def order_ideal_from_partition(lam: Iterable[int]) -> OrderIdeal:
    """Staircase in two variables of a partition ``(l_1 >= ... >= l_m >= 1)``.

    ``(a, b)`` belongs to the ideal iff ``a < m`` and ``b < l_{a+1}``, so
    the ``k``-th part is the height of column ``k - 1``.
    """
    parts = check_partition(lam)
    elements = frozenset((a, b) for a, height in enumerate(parts) for b in range(height))
    return OrderIdeal(2, elements)


def check_partition(lam: Iterable[int]) -> tuple[int, ...]:
    parts = tuple(int(p) for p in lam)
    if not parts:
        raise ValueError("partition must have at least one part")
    if any(p < 1 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(p < q for p, q in zip(parts, parts[1:])):
        raise ValueError(f"partition must be weakly decreasing: {parts}")
    return parts


def validate_order_ideal(dim: int, elements: Iterable[Iterable[int]]) -> OrderIdeal:
    """Check division-closure and return the ideal, or raise with a witness."""
    elems = frozenset(as_vector(e, dim) for e in elements)
    for alpha in sorted(elems):
        for i in range(dim):
            if alpha[i] > 0:
                below = alpha[:i] + (alpha[i] - 1,) + alpha[i + 1:]
                if below not in elems:
                    raise InvalidOrderIdeal(
                        f"{alpha} is present but its divisor {below} is not",
                        witness=(alpha, below),
                    )
    return OrderIdeal(dim, elems)


def bounding_box(O: OrderIdeal) -> BoundingBox:
    O._require_nonempty()
    return BoundingBox(tuple(max(a[i] for a in O.elements) for i in range(O.dim)))


def minimal_generators_of_complement(O: OrderIdeal) -> frozenset[ExponentVector]:
    """Minimal generators of the monoid ideal ``N^n \\ O``.

    A vector outside ``O`` is minimal iff all its immediate divisors lie
    in ``O``; such vectors are necessarily one step away from ``O``.
    """
    O._require_nonempty()
    gens = set()
    for alpha in O.elements:
        for i in range(O.dim):
            g = alpha[:i] + (alpha[i] + 1,) + alpha[i + 1:]
            if g in O.elements or g in gens:
                continue
            if all(
                g[j] == 0 or g[:j] + (g[j] - 1,) + g[j + 1:] in O.elements
                for j in range(O.dim)
            ):
                gens.add(g)
    return frozenset(gens)


def free_directions(C: OrderIdeal, u: Iterable[int]) -> frozenset[int]:
    """Directions ``i`` (0-based) such that ``u + e_i`` leaves ``C``."""
    u = as_vector(u, C.dim)
    if u not in C.elements:
        raise ValueError(f"{u} is not an element of the order ideal")
    return frozenset(
        i for i in range(C.dim) if u[:i] + (u[i] + 1,) + u[i + 1:] not in C.elements
    )


def box_ideal(corner: Iterable[int]) -> OrderIdeal:
    corner = as_vector(corner)
    return OrderIdeal(len(corner), frozenset(box_points(corner)))


def closed_border(O: OrderIdeal) -> OrderIdeal:
    """``O`` together with its border; again an order ideal."""
    elements = set(O.elements)
    for alpha in O.elements:
        for i in range(O.dim):
            elements.add(alpha[:i] + (alpha[i] + 1,) + alpha[i + 1:])
    return OrderIdeal(O.dim, frozenset(elements))


def same_dim(*objs) -> int:
    dims = {o.dim for o in objs}
    if len(dims) != 1:
        raise DimensionMismatch(f"mixed dimensions {sorted(dims)}")
    return dims.pop()
