"""
Cone decompositions of the complement
=====================================

The complement of a staircase splits into translated coordinate cones.
Only decompositions along which the index grows linearly (admissible
ones) turn into closed forms.
"""

# %%
from borderidx import (
    Cone,
    StanleyDecomposition,
    assemble_ind_gf,
    check_admissible,
    enlarged_box_decomposition,
    ind_gf,
    order_ideal_from_generators,
    validate_partition,
)
from borderidx.decomposition import border_anchored_decomposition, literal_box_border_decomposition

O = order_ideal_from_generators(2, [(2, 0), (0, 2)])

# The canonical construction: every point of the box up to corner + 1
# outside O, free in the directions where it touches the far face.
box = enlarged_box_decomposition(O)
for c in box:
    print(c)
print(validate_partition(box, O), check_admissible(box, O, (8, 8)))

# %%
# A smaller decomposition with the point (1, 1) as a singleton cone.
economic = StanleyDecomposition(
    2, [Cone((0, 3), (0, 1)), Cone((1, 2), (0,)), Cone((1, 1)), Cone((2, 1), (0,)), Cone((3, 0), (0,))]
)
print(validate_partition(economic, O), check_admissible(economic, O, (8, 8)))
assert assemble_ind_gf(economic, O) == ind_gf(O)

# %%
# Letting (1, 1) start a ray in direction 1 still partitions the
# complement, but the index stalls along that ray.
bad = StanleyDecomposition(
    2, [Cone((0, 3), (0, 1)), Cone((1, 2), (0,)), Cone((1, 1), (0,)), Cone((3, 0), (0,))]
)
print(validate_partition(bad, O))
print(check_admissible(bad, O, (8, 8)))

# %%
# Anchoring quadrants on the border of O, or on the border of the
# bounding box itself, produces overlapping cones.
print(validate_partition(border_anchored_decomposition(O), O))
print(validate_partition(literal_box_border_decomposition(O), O))
