"""
Rational generating functions
=============================

``P_n(y; a; b) = sum (a . alpha + b) y^alpha`` has a closed form over
``prod (1 - y_i)^2``.  The index generating function of a staircase is a
sum of shifted copies of it.
"""

# %%
from fractions import Fraction

from borderidx import (
    LinearWeight,
    expand,
    ind_gf,
    ind_gf_2d,
    order_ideal_from_generators,
    pn_closed,
    pn_derivative_oracle,
    pn_series_oracle,
    verify_ind_gf,
)
from borderidx.io import gf_to_latex, gf_to_text

w = LinearWeight([1, 1], 3)
print(gf_to_text(pn_closed(w)))
print(gf_to_latex(pn_closed(w)))

# %%
# Three routes to the same coefficients: closed form, direct evaluation,
# and differentiation of a product of geometric series.
bounds = (4, 4)
assert expand(pn_closed(w), bounds) == pn_series_oracle(w, bounds) == pn_derivative_oracle(w, bounds)

# Rational slopes are fine for the closed form and the direct evaluation.
w = LinearWeight([Fraction(1, 2), -3], Fraction(2, 7))
assert expand(pn_closed(w), bounds) == pn_series_oracle(w, bounds)

# %%
# The index generating function of the staircase {1, x1, x1^2, x2, x2^2}.
O = order_ideal_from_generators(2, [(2, 0), (0, 2)])
g = ind_gf(O)
print(g.source)
print(gf_to_text(g.gf))

# %%
# Its Taylor coefficients are the index values; the two-variable formula
# built from the partition gives the same function.
print(verify_ind_gf(g, O, (7, 7)))
assert ind_gf_2d((3, 1, 1)) == g
series = expand(g.gf, (7, 7))
print([int(series[k, k]) for k in range(8)])
