"""Generating functions of affine-linear weights over the full orthant.

For a weight ``w(alpha) = a . alpha + b`` the series
``P_n(y; a; b) = sum_alpha w(alpha) y^alpha`` is rational with denominator
``prod (1 - y_i)^2``.  ``pn_closed`` builds that closed form; the two
oracles compute the same coefficients without it.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from .gf import Polynomial, RationalGF, SeriesTable, expand
from .lattice import as_vector


@dataclass(frozen=True)
class LinearWeight:
    a: tuple[Fraction, ...]
    b: Fraction

    def __init__(self, a: Iterable = (), b=0):
        object.__setattr__(self, "a", tuple(Fraction(x) for x in a))
        object.__setattr__(self, "b", Fraction(b))

    @property
    def dim(self) -> int:
        return len(self.a)

    def __call__(self, alpha) -> Fraction:
        return sum((x * k for x, k in zip(self.a, alpha)), self.b)

    @classmethod
    def unit(cls, n: int, b=0) -> "LinearWeight":
        """All slopes equal to one: the weight ``|alpha| + b``."""
        return cls((1,) * n, b)


def pn_numerator(w: LinearWeight) -> Polynomial:
    """``sum over subsets A of (-1)^|A| (b - sum_{j in A} a_j) prod_{j in A} y_j``."""
    n = w.dim
    terms = {}
    for mask in itertools.product((0, 1), repeat=n):
        sign = -1 if sum(mask) % 2 else 1
        terms[mask] = sign * (w.b - sum((a for a, m in zip(w.a, mask) if m), Fraction(0)))
    return Polynomial(n, terms)


def pn_closed(w: LinearWeight) -> RationalGF:
    """Closed rational form of ``P_n``; the constant ``b`` when ``n = 0``."""
    return RationalGF(pn_numerator(w), (2,) * w.dim)


def pn_series_oracle(w: LinearWeight, bounds: Iterable[int]) -> SeriesTable:
    """Coefficients by direct evaluation of the weight at each point."""
    return SeriesTable.from_function(as_vector(bounds, w.dim), w)


def _tpoly_mul(p: dict[int, int], q: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = defaultdict(int)
    for i, c in p.items():
        for j, d in q.items():
            out[i + j] += c * d
    return dict(out)


def pn_derivative_oracle(w: LinearWeight, bounds: Iterable[int]) -> SeriesTable:
    """Coefficients as ``d/dt [t^b prod_i (1 - t^a_i y_i)^-1]`` at ``t = 1``.

    The product is expanded as a truncated series in ``y`` whose
    coefficients are polynomials in ``t`` (dicts exponent -> coefficient),
    then each coefficient is differentiated and evaluated at ``t = 1``.
    Only nonnegative integer slopes and offset keep ``t`` polynomial.
    """
    params = list(w.a) + [w.b]
    if any(x.denominator != 1 or x < 0 for x in params):
        raise ValueError("derivative oracle needs nonnegative integer a_i and b")
    n = w.dim
    bounds = as_vector(bounds, n)
    # series: y-exponent -> t-polynomial
    series: dict[tuple, dict[int, int]] = {(): {int(w.b): 1}}
    for i in range(n):
        geometric = [{int(w.a[i]) * k: 1} for k in range(bounds[i] + 1)]
        series = {
            alpha + (k,): _tpoly_mul(tp, geometric[k])
            for alpha, tp in series.items()
            for k in range(bounds[i] + 1)
        }

    def derivative_at_one(tp: dict[int, int]) -> int:
        return sum(e * c for e, c in tp.items())

    return SeriesTable.from_function(bounds, lambda alpha: derivative_at_one(series[alpha]))


def pn_recursive_series(w: LinearWeight, bounds: Iterable[int]) -> SeriesTable:
    """Coefficients via ``P_n = sum_k y_n^k P_{n-1}(a', a_n k + b)``.

    Each slice in the last variable is the expansion of a lower-dimensional
    closed form with a shifted offset.
    """
    n = w.dim
    bounds = as_vector(bounds, n)
    if n == 0:
        return SeriesTable.from_function((), lambda _: w.b)
    head = bounds[:-1]
    slices = [
        expand(pn_closed(LinearWeight(w.a[:-1], w.a[-1] * k + w.b)), head)
        for k in range(bounds[-1] + 1)
    ]
    return SeriesTable.from_function(bounds, lambda alpha: slices[alpha[-1]][alpha[:-1]])
