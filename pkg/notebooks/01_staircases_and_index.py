"""
Staircases, borders and the index
=================================

An order ideal is a finite staircase of exponent vectors.  Growing it one
border at a time assigns every lattice point a layer number, its index.
"""

# %%
from borderidx import (
    border,
    bounding_box,
    higher_border,
    index_by_divisor,
    index_table,
    minimal_generators_of_complement,
    order_ideal_from_generators,
    order_ideal_from_partition,
)

# The staircase {1, x1, x1^2, x2, x2^2}, given by two generators...
O = order_ideal_from_generators(2, [(2, 0), (0, 2)])
print(sorted(O))

# %%
# ...or as the partition (3, 1, 1): column heights read left to right.
assert order_ideal_from_partition((3, 1, 1)) == O
print("corner of the bounding box:", bounding_box(O).corner)
print("minimal generators of the complement:", sorted(minimal_generators_of_complement(O)))

# %%
# The first two layers around the staircase.  (1, 1) sits in the first
# layer even though it is enclosed by the staircase's arms.
print("border:", sorted(border(O)))
print("second layer:", sorted(higher_border(O, 2)))

# %%
# The index over the box up to (7, 7), origin bottom left.
table = index_table(O, (7, 7))
print(table.render_matrix())

# %%
# The dynamic program agrees with the direct divisor minimisation.
assert all(v == index_by_divisor(O, a) for a, v in table.items())
print("index of x1^7 x2^7:", table[7, 7])
