"""The small complex of a path algebra: HH0, HH1, HC0, HC1 per path length.

For a path algebra the small cyclic complex is length-graded with finite
slices, so the homology of each slice is an exact rank computation: alpha is
the signed commutator map, beta the signed rotation splitting, and
alpha o beta = 0.
"""

from cyforge import Arrow, GradedQuiver, hc_dims, hh_dims
from cyforge.hochschild import small_complex_slice

# the polynomial ring in one variable: 1-dimensional HH0 and HH1 in every
# length, while rationally HC1 vanishes
one_loop = GradedQuiver(["v"], [Arrow("x", "v", "v")])
print("k[x]   hh:", hh_dims(one_loop, 6))
print("k[x]   hc:", hc_dims(one_loop, 6))

# an acyclic quiver has nothing beyond length 0
a3 = GradedQuiver(["1", "2", "3"], [Arrow("a", "2", "1"), Arrow("b", "3", "2")])
print("A3     hh:", hh_dims(a3, 4))

# the free algebra on three loops
three = GradedQuiver(["v"], [Arrow(n, "v", "v") for n in "xyz"])
print("3 loops hh:", hh_dims(three, 3))
print("3 loops hc:", hc_dims(three, 3))

sl = small_complex_slice(three, 2)
print("\nlength-2 slice: ", len(sl.cycle_basis), "cycles,", len(sl.pair_basis), "pairs")
print("alpha matrix rows (sparse):", sl.alpha_rows[:3], "...")
