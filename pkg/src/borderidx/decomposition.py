"""Cone decompositions of the complement of an order ideal and the index GF.

The complement ``I = N^n \\ O`` is a monoid ideal.  A Stanley
decomposition writes it as a disjoint union of cones ``u + N^S``.  When
the index grows by exactly ``|beta|`` along every cone (admissibility),
each cone contributes ``y^u * P_|S|(1,...,1; ind(u))`` and the sum is the
generating function of the index.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import Literal

from .gf import (
    Polynomial,
    RationalGF,
    clears_denominator,
    expand,
    gf_scale_monomial,
    gf_sum,
)
from .index import IndexTable, index_by_divisor, index_table
from .lattice import (
    DimensionMismatch,
    ExponentVector,
    OrderIdeal,
    as_vector,
    bounding_box,
    box_ideal,
    box_points,
    check_partition,
    closed_border,
    free_directions,
    order_ideal_from_partition,
)
from .pn import LinearWeight, pn_closed


@dataclass(frozen=True)
class Cone:
    """Lattice points ``anchor + beta`` with ``beta`` supported on ``free``."""

    anchor: ExponentVector
    free: frozenset[int] = frozenset()

    def __init__(self, anchor: Iterable[int], free: Iterable[int] = ()):
        anchor = as_vector(anchor)
        free = frozenset(int(i) for i in free)
        if any(i < 0 or i >= len(anchor) for i in free):
            raise ValueError(f"free directions {sorted(free)} out of range for {anchor}")
        object.__setattr__(self, "anchor", anchor)
        object.__setattr__(self, "free", free)

    @property
    def dim(self) -> int:
        return len(self.anchor)

    def __contains__(self, alpha) -> bool:
        return all(
            (x >= u) if i in self.free else (x == u)
            for i, (x, u) in enumerate(zip(alpha, self.anchor))
        )

    def generating_function(self) -> RationalGF:
        """``y^u / prod_{i in S} (1 - y_i)``: the indicator series of the cone."""
        den = tuple(1 if i in self.free else 0 for i in range(self.dim))
        return RationalGF(Polynomial.monomial(self.anchor), den)

    def __str__(self):
        free = ",".join(str(i) for i in sorted(self.free))
        return f"{self.anchor}+N^{{{free}}}"


@dataclass(frozen=True)
class StanleyDecomposition:
    dim: int
    cones: tuple[Cone, ...]

    def __init__(self, dim: int, cones: Iterable[Cone]):
        cones = tuple(cones)
        for c in cones:
            if c.dim != dim:
                raise DimensionMismatch(f"cone {c} does not live in dimension {dim}")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "cones", cones)

    def __iter__(self):
        return iter(self.cones)

    def __len__(self):
        return len(self.cones)


def cone_disjoint(c1: Cone, c2: Cone) -> bool:
    """Exact test, one coordinate at a time."""
    if c1.dim != c2.dim:
        raise DimensionMismatch(f"cones of dimension {c1.dim} and {c2.dim}")
    for i, (u, v) in enumerate(zip(c1.anchor, c2.anchor)):
        free1, free2 = i in c1.free, i in c2.free
        if not free1 and not free2 and u != v:
            return True
        if not free1 and free2 and u < v:
            return True
        if free1 and not free2 and v < u:
            return True
    return False


def complement_gf(O: OrderIdeal) -> RationalGF:
    """Indicator series of ``N^n \\ O``: ``1 / prod (1 - y_i) - sum_{a in O} y^a``."""
    n = O.dim
    whole = RationalGF(Polynomial.constant(n), (1,) * n)
    inside = RationalGF.polynomial(Polynomial(n, {a: 1 for a in O.elements}))
    return gf_sum([whole, -inside], n)


@dataclass(frozen=True)
class PartitionReport:
    ok: bool
    reason: str = ""
    witness: object = None

    def __bool__(self):
        return self.ok


def validate_partition(d: StanleyDecomposition, O: OrderIdeal) -> PartitionReport:
    """Check anchors outside ``O``, pairwise disjointness, and exact coverage.

    Coverage is the rational identity between the summed cone indicators
    and the indicator series of the complement.  On failure the witness is
    the offending anchor, the pair of overlapping cones, or the first
    lattice point whose multiplicity is wrong.
    """
    if d.dim != O.dim:
        raise DimensionMismatch(f"decomposition in {d.dim} variables, ideal in {O.dim}")
    for c in d.cones:
        if c.anchor in O.elements:
            return PartitionReport(False, "anchor inside the order ideal", c.anchor)
    for j, c1 in enumerate(d.cones):
        for c2 in d.cones[j + 1:]:
            if not cone_disjoint(c1, c2):
                return PartitionReport(False, "cones overlap", (c1, c2))
    covered = gf_sum([c.generating_function() for c in d.cones], d.dim)
    target = complement_gf(O)
    if covered == target:
        return PartitionReport(True)
    # Every cone and the complement are determined by the box up to the largest anchor + 1.
    top = [m + 1 for m in bounding_box(O).corner]
    for c in d.cones:
        top = [max(t, u + 1) for t, u in zip(top, c.anchor)]
    counts, wanted = expand(covered, top), expand(target, top)
    alpha = counts.first_mismatch(wanted)
    return PartitionReport(False, "coverage fails", (alpha, int(counts[alpha])))


@dataclass(frozen=True)
class AdmissibilityVerdict:
    status: Literal["proved", "falsified", "sampled_ok"]
    witness: tuple | None = None

    def __bool__(self):
        return self.status != "falsified"


def check_admissible(
    d: StanleyDecomposition,
    O: OrderIdeal,
    sample_bounds: Iterable[int],
    *,
    force_sampling: bool = False,
) -> AdmissibilityVerdict:
    """Does the index grow linearly along every cone?

    ``proved`` when each free direction of each cone starts strictly past
    the extreme corner of ``O``, where linear growth is known to hold.
    Otherwise every ``beta`` with ``anchor + beta <= sample_bounds`` is
    tested; a failure returns ``falsified`` with witness
    ``(cone, beta, ind(anchor), ind(anchor + beta))``.
    """
    sample_bounds = as_vector(sample_bounds, O.dim)
    corner = bounding_box(O).corner
    if not force_sampling and all(
        c.anchor[i] > corner[i] for c in d.cones for i in c.free
    ):
        return AdmissibilityVerdict("proved")
    table: IndexTable = index_table(O, sample_bounds)
    for c in d.cones:
        if not c.free or any(u > b for u, b in zip(c.anchor, sample_bounds)):
            continue
        base = table[c.anchor]
        room = tuple(
            (b - u) if i in c.free else 0
            for i, (u, b) in enumerate(zip(c.anchor, sample_bounds))
        )
        for beta in box_points(room):
            point = tuple(u + x for u, x in zip(c.anchor, beta))
            if table[point] != base + sum(beta):
                return AdmissibilityVerdict(
                    "falsified", (c, beta, base, table[point])
                )
    return AdmissibilityVerdict("sampled_ok")


def enlarged_box_decomposition(O: OrderIdeal) -> StanleyDecomposition:
    """One cone per point ``u`` of the box up to ``corner + 1`` outside ``O``.

    The free directions are the coordinates where ``u`` reaches
    ``corner_i + 1``; interior points give singleton cones.
    """
    corner = bounding_box(O).corner
    top = tuple(m + 1 for m in corner)
    cones = [
        Cone(u, (i for i in range(O.dim) if u[i] == top[i]))
        for u in box_points(top)
        if u not in O.elements
    ]
    return StanleyDecomposition(O.dim, cones)


def border_anchored_decomposition(O: OrderIdeal, base: OrderIdeal | None = None) -> StanleyDecomposition:
    """Cones ``u + N^free(u)`` for ``u`` in the closed border of ``base`` outside ``O``.

    ``base`` defaults to ``O`` itself.  Neither this nor the bounding-box
    variant is a partition in general (quadrant cones overlap); it exists
    as a negative control.
    """
    base = O if base is None else base
    C = closed_border(base)
    cones = [Cone(u, free_directions(C, u)) for u in sorted(C.elements) if u not in O.elements]
    return StanleyDecomposition(O.dim, cones)


def literal_box_border_decomposition(O: OrderIdeal) -> StanleyDecomposition:
    return border_anchored_decomposition(O, box_ideal(bounding_box(O).corner))


@dataclass(frozen=True, eq=False)
class IndGF:
    """Generating function of the index together with how it was obtained."""

    gf: RationalGF
    source: str = ""
    decomposition: StanleyDecomposition | None = field(default=None, repr=False)

    def __eq__(self, other):
        if isinstance(other, IndGF):
            other = other.gf
        if isinstance(other, RationalGF):
            return self.gf == other
        return NotImplemented

    def __hash__(self):
        return hash(self.gf)


def cone_term(cone: Cone, b: int, dim: int) -> RationalGF:
    """``y^u * P_|S|(y_S; 1,...,1; b)`` embedded in ``dim`` variables."""
    axes = sorted(cone.free)
    local = pn_closed(LinearWeight.unit(len(axes), b))
    return gf_scale_monomial(local.embed(dim, axes), cone.anchor)


def assemble_ind_gf(d: StanleyDecomposition, O: OrderIdeal, *, source: str = "") -> IndGF:
    """Sum of per-cone closed forms; trusts that ``d`` is admissible for ``O``."""
    if d.dim != O.dim:
        raise DimensionMismatch(f"decomposition in {d.dim} variables, ideal in {O.dim}")
    terms = [cone_term(c, index_by_divisor(O, c.anchor), d.dim) for c in d.cones]
    return IndGF(gf_sum(terms, d.dim), source or f"{len(d)} cones", d)


def ind_gf(O: OrderIdeal) -> IndGF:
    """Index generating function from the enlarged-box decomposition."""
    d = enlarged_box_decomposition(O)
    return assemble_ind_gf(d, O, source=f"enlarged box, {len(d)} cones")


def ind_gf_2d(lam: Sequence[int]) -> IndGF:
    """Two-variable index GF of a partition staircase, summed region by region.

    With ``m`` parts and largest part ``l``: the quadrant at ``(m, l)``, the
    strip above the box (columns ``j < m`` at height ``l``), the strip to
    its right (rows ``j < l`` at abscissa ``m``), and the box points
    outside the staircase as constants.
    """
    parts = check_partition(lam)
    O = order_ideal_from_partition(parts)
    m, top = len(parts), parts[0]

    def ind(a, b):
        return index_by_divisor(O, (a, b))

    terms = [cone_term(Cone((m, top), (0, 1)), ind(m, top), 2)]
    terms += [cone_term(Cone((j, top), (1,)), ind(j, top), 2) for j in range(m)]
    terms += [cone_term(Cone((m, j), (0,)), ind(m, j), 2) for j in range(top)]
    terms += [
        cone_term(Cone((a1, a2)), ind(a1, a2), 2)
        for a1 in range(m)
        for a2 in range(top)
        if (a1, a2) not in O.elements
    ]
    return IndGF(gf_sum(terms, 2), f"partition {parts}")


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    witness: ExponentVector | None = None
    expected: int | None = None
    got: object = None

    def __bool__(self):
        return self.ok


def verify_ind_gf(g: IndGF | RationalGF, O: OrderIdeal, bounds: Iterable[int]) -> VerifyReport:
    """Compare the Taylor expansion with the index table on a box, exactly."""
    gf = g.gf if isinstance(g, IndGF) else g
    bounds = as_vector(bounds, O.dim)
    series = expand(gf, bounds)
    table = index_table(O, bounds)
    alpha = series.first_mismatch(table)
    if alpha is None:
        return VerifyReport(True)
    return VerifyReport(False, alpha, table[alpha], series[alpha])


def has_polynomial_numerator(g: IndGF) -> bool:
    """Does ``Ind * prod (1 - y_i)^2`` clear to a polynomial?"""
    return clears_denominator(g.gf, (2,) * g.gf.dim)
