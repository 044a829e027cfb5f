"""Sparse exact polynomials and rational generating functions.

Every generating function here has the shape ``N(y) / prod_i (1 - y_i)^e_i``
with ``N`` a polynomial over the rationals.  Restricting denominators to
this family keeps reduction to repeated exact division by ``1 - y_i``.
"""
from __future__ import annotations

import math
from collections import defaultdict
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType

import numpy as np

from .lattice import DimensionMismatch, ExponentVector, as_vector, box_points


def term_order_key(alpha: ExponentVector):
    """Graded order, lexicographic within a degree (``y1`` before ``y2``)."""
    return (sum(alpha), tuple(-a for a in alpha))


class Polynomial:
    """Immutable sparse polynomial in ``y_1..y_dim`` with Fraction coefficients."""

    __slots__ = ("dim", "_terms")

    def __init__(self, dim: int, terms: Mapping | Iterable = ()):
        if dim < 0:
            raise ValueError("dimension must be nonnegative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[ExponentVector, Fraction] = defaultdict(Fraction)
        for alpha, c in items:
            acc[as_vector(alpha, dim)] += Fraction(c)
        self.dim = dim
        self._terms = {a: c for a, c in acc.items() if c}

    @classmethod
    def _raw(cls, dim: int, terms: dict) -> "Polynomial":
        p = object.__new__(cls)
        p.dim = dim
        p._terms = {a: Fraction(c) for a, c in terms.items() if c}
        return p

    @classmethod
    def constant(cls, dim: int, c=1) -> "Polynomial":
        return cls._raw(dim, {(0,) * dim: c})

    @classmethod
    def monomial(cls, alpha: Iterable[int], c=1) -> "Polynomial":
        alpha = as_vector(alpha)
        return cls._raw(len(alpha), {alpha: c})

    @classmethod
    def one_minus(cls, dim: int, i: int, power: int = 1) -> "Polynomial":
        """``(1 - y_i)^power`` expanded by the binomial theorem."""
        terms = {}
        for j in range(power + 1):
            alpha = tuple(j if k == i else 0 for k in range(dim))
            terms[alpha] = (-1) ** j * math.comb(power, j)
        return cls._raw(dim, terms)

    @property
    def terms(self) -> Mapping[ExponentVector, Fraction]:
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> list[tuple[ExponentVector, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: term_order_key(t[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def degree_in(self, i: int) -> int:
        return max((a[i] for a in self._terms), default=-1)

    def _check(self, other: "Polynomial") -> None:
        if self.dim != other.dim:
            raise DimensionMismatch(f"dimensions {self.dim} and {other.dim}")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return self + Polynomial.constant(self.dim, other)
        self._check(other)
        out = dict(self._terms)
        for a, c in other._terms.items():
            out[a] = out.get(a, 0) + c
        return Polynomial._raw(self.dim, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.dim, {a: -c for a, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            return Polynomial._raw(self.dim, {a: c * v for a, v in self._terms.items()})
        self._check(other)
        out: dict = defaultdict(int)
        for a, c in self._terms.items():
            for b, d in other._terms.items():
                out[tuple(x + y for x, y in zip(a, b))] += c * d
        return Polynomial._raw(self.dim, out)

    __rmul__ = __mul__

    def shift(self, alpha: Iterable[int]) -> "Polynomial":
        """Multiply by the monomial ``y^alpha``."""
        alpha = as_vector(alpha, self.dim)
        return Polynomial._raw(
            self.dim,
            {tuple(x + y for x, y in zip(a, alpha)): c for a, c in self._terms.items()},
        )

    def embed(self, dim: int, axes: Iterable[int]) -> "Polynomial":
        """Rename variable ``k`` to ``y_{axes[k]}`` inside ``dim`` variables."""
        axes = tuple(axes)
        if len(axes) != self.dim:
            raise DimensionMismatch(f"{len(axes)} axes for {self.dim} variables")
        out = {}
        for a, c in self._terms.items():
            full = [0] * dim
            for k, ax in enumerate(axes):
                full[ax] = a[k]
            out[tuple(full)] = c
        return Polynomial._raw(dim, out)

    def at_one(self, i: int) -> "Polynomial":
        """Substitute ``y_i = 1``; the result keeps ``dim`` variables."""
        out: dict = defaultdict(int)
        for a, c in self._terms.items():
            out[a[:i] + (0,) + a[i + 1:]] += c
        return Polynomial._raw(self.dim, out)

    def divide_one_minus(self, i: int) -> "Polynomial | None":
        """Exact quotient by ``1 - y_i``, or ``None`` when it does not divide.

        Writing ``N = sum_k c_k y_i^k`` and ``N = (1 - y_i) Q``, the
        coefficients of ``Q`` are the partial sums of the ``c_k``.
        """
        columns: dict = defaultdict(dict)
        for a, c in self._terms.items():
            columns[a[:i] + (0,) + a[i + 1:]][a[i]] = c
        out = {}
        for base, col in columns.items():
            top = max(col)
            running = Fraction(0)
            for k in range(top + 1):
                running += col.get(k, 0)
                if k < top and running:
                    out[base[:i] + (k,) + base[i + 1:]] = running
            if running:
                return None
        return Polynomial._raw(self.dim, out)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.dim == other.dim and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.dim, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.dim, frozenset(self._terms.items())))

    def __repr__(self):
        return f"Polynomial({self.dim}, {dict(self.sorted_terms())!r})"

    def __str__(self):
        from .io import polynomial_to_text

        return polynomial_to_text(self)


@dataclass(frozen=True, eq=False)
class RationalGF:
    """``numerator / prod_i (1 - y_i)^den[i]``.

    Instances may be unreduced; equality and hashing always go through
    ``reduce()``.
    """

    numerator: Polynomial
    den: ExponentVector

    def __post_init__(self):
        den = as_vector(self.den)
        object.__setattr__(self, "den", den)
        if len(den) != self.numerator.dim:
            raise DimensionMismatch(
                f"numerator in {self.numerator.dim} variables, denominator in {len(den)}"
            )

    @property
    def dim(self) -> int:
        return self.numerator.dim

    @classmethod
    def polynomial(cls, p: Polynomial) -> "RationalGF":
        return cls(p, (0,) * p.dim)

    @classmethod
    def constant(cls, dim: int, c=1) -> "RationalGF":
        return cls.polynomial(Polynomial.constant(dim, c))

    def reduce(self) -> "RationalGF":
        """Cancel every factor ``1 - y_i`` shared by numerator and denominator."""
        num = self.numerator
        if num.is_zero():
            return RationalGF(num, (0,) * self.dim)
        den = list(self.den)
        for i in range(self.dim):
            while den[i] > 0:
                q = num.divide_one_minus(i)
                if q is None:
                    break
                num = q
                den[i] -= 1
        return RationalGF(num, tuple(den))

    @property
    def is_reduced(self) -> bool:
        return self.reduce().den == self.den

    def with_denominator(self, e: Iterable[int]) -> "RationalGF":
        """Same function rewritten over ``prod (1 - y_i)^e_i``; needs ``e >= den``."""
        e = as_vector(e, self.dim)
        if any(x < d for x, d in zip(e, self.den)):
            raise ValueError(f"cannot raise denominator {self.den} to {e}")
        num = self.numerator
        for i, (x, d) in enumerate(zip(e, self.den)):
            if x > d:
                num = num * Polynomial.one_minus(self.dim, i, x - d)
        return RationalGF(num, e)

    def embed(self, dim: int, axes: Iterable[int]) -> "RationalGF":
        axes = tuple(axes)
        den = [0] * dim
        for k, ax in enumerate(axes):
            den[ax] = self.den[k]
        return RationalGF(self.numerator.embed(dim, axes), tuple(den))

    def __eq__(self, other):
        if not isinstance(other, RationalGF):
            return NotImplemented
        if self.dim != other.dim:
            return False
        a, b = self.reduce(), other.reduce()
        return a.den == b.den and a.numerator == b.numerator

    def __hash__(self):
        r = self.reduce()
        return hash((r.numerator, r.den))

    def __add__(self, other):
        if not isinstance(other, RationalGF):
            return NotImplemented
        return gf_add(self, other)

    def __neg__(self):
        return RationalGF(-self.numerator, self.den)

    def __sub__(self, other):
        return gf_add(self, -other)

    def __repr__(self):
        return f"RationalGF({self.numerator!r}, den={self.den})"


def gf_sum(gfs: Iterable[RationalGF], dim: int | None = None) -> RationalGF:
    """Exact sum over the componentwise-largest denominator, then reduced."""
    gfs = list(gfs)
    if dim is None:
        if not gfs:
            raise ValueError("empty sum needs an explicit dim")
        dim = gfs[0].dim
    if any(g.dim != dim for g in gfs):
        raise DimensionMismatch("generating functions of different dimension")
    e = tuple(max((g.den[i] for g in gfs), default=0) for i in range(dim))
    # Cache the (1 - y)^k cofactors; many summands share them.
    cofactors: dict[ExponentVector, Polynomial] = {}
    acc: dict = defaultdict(int)
    for g in gfs:
        gap = tuple(x - d for x, d in zip(e, g.den))
        cof = cofactors.get(gap)
        if cof is None:
            cof = Polynomial.constant(dim, 1)
            for i, k in enumerate(gap):
                if k:
                    cof = cof * Polynomial.one_minus(dim, i, k)
            cofactors[gap] = cof
        for a, c in (g.numerator * cof).terms.items():
            acc[a] += c
    return RationalGF(Polynomial._raw(dim, acc), e).reduce()


def gf_add(a: RationalGF, b: RationalGF) -> RationalGF:
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimensions {a.dim} and {b.dim}")
    return gf_sum([a, b], a.dim)


def gf_scale_monomial(a: RationalGF, alpha: Iterable[int], c=1) -> RationalGF:
    """``c * y^alpha * a``."""
    alpha = as_vector(alpha, a.dim)
    return RationalGF(a.numerator.shift(alpha) * Fraction(c), a.den)


def clears_denominator(a: RationalGF, e: Iterable[int]) -> bool:
    """True iff ``a * prod (1 - y_i)^e_i`` is a polynomial."""
    e = as_vector(e, a.dim)
    return all(d <= x for d, x in zip(a.reduce().den, e))


@dataclass(frozen=True, eq=False)
class SeriesTable:
    """Taylor coefficients of a series for all ``alpha <= bounds``."""

    bounds: ExponentVector
    coeffs: np.ndarray

    @classmethod
    def from_function(cls, bounds: Iterable[int], f) -> "SeriesTable":
        bounds = as_vector(bounds)
        coeffs = np.empty(tuple(b + 1 for b in bounds), dtype=object)
        for alpha in box_points(bounds):
            coeffs[alpha] = Fraction(f(alpha))
        return cls(bounds, coeffs)

    def __getitem__(self, alpha):
        return self.coeffs[tuple(alpha)]

    def __eq__(self, other):
        if isinstance(other, SeriesTable):
            other = other.coeffs
        else:
            other = getattr(other, "values", other)
        other = np.asarray(other)
        return self.coeffs.shape == other.shape and bool(np.all(self.coeffs == other))

    def __add__(self, other: "SeriesTable") -> "SeriesTable":
        if self.bounds != other.bounds:
            raise DimensionMismatch(f"bounds {self.bounds} and {other.bounds}")
        return SeriesTable(self.bounds, self.coeffs + other.coeffs)

    def first_mismatch(self, other):
        """First ``alpha`` (graded order) where the tables differ, or ``None``."""
        other = np.asarray(getattr(other, "coeffs", getattr(other, "values", other)))
        for alpha in sorted(box_points(self.bounds), key=sum):
            if self.coeffs[alpha] != other[alpha]:
                return alpha
        return None


def expand(a: RationalGF, bounds: Iterable[int]) -> SeriesTable:
    """Exact Taylor coefficients of ``a`` on the box ``0..bounds``.

    Dividing by ``1 - y_i`` is a running sum along axis ``i``, so the
    numerator's coefficient array is cumulatively summed ``den[i]`` times
    along each axis.
    """
    bounds = as_vector(bounds, a.dim)
    shape = tuple(b + 1 for b in bounds)
    coeffs = np.empty(shape, dtype=object)
    coeffs.fill(Fraction(0))
    for alpha, c in a.numerator.terms.items():
        if all(x <= b for x, b in zip(alpha, bounds)):
            coeffs[alpha] += c
    for axis, e in enumerate(a.den):
        for _ in range(e):
            coeffs = np.cumsum(coeffs, axis=axis)
    return SeriesTable(bounds, coeffs)
