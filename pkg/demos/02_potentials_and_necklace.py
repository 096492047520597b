"""Potentials: cyclic classes, cyclic derivatives, Connes' splitting map.

A potential is a sum of cycles considered up to rotation with Koszul signs.
Canonical representatives rotate every term to its minimal word, so equality
of potentials is plain equality of representatives.
"""

from cyforge import Arrow, GradedQuiver, NcPoly, canonicalize, connes_B, cyclic_derivative
from cyforge.hochschild import alpha
from cyforge.potential import necklace_sum

Q = GradedQuiver(["v"], [Arrow("x", "v", "v"), Arrow("y", "v", "v"), Arrow("z", "v", "v")])

# yzx rotates to the canonical word xyz
W1 = canonicalize(NcPoly.from_word(Q, ["y", "z", "x"]))
print("canonical form of yzx:", W1.rep)

# rotations merge: xyz + zxy = 2 xyz
W2 = canonicalize(NcPoly.from_word(Q, ["x", "y", "z"]) + NcPoly.from_word(Q, ["z", "x", "y"]))
print("xyz + zxy ->", W2.rep)

# the commutator potential of the polynomial ring in three variables
W = canonicalize(NcPoly.from_word(Q, ["x", "y", "z"]) - NcPoly.from_word(Q, ["x", "z", "y"]))
print("W =", W.rep)
for name in "xyz":
    print(f"dW/d{name} =", cyclic_derivative(W, Q.arrow(name)))

# Connes' B splits each cycle one rotation at a time; alpha kills the result
chain = connes_B(W)
print("B(W) entries:")
for arrow, tail, coeff in chain.entries:
    print(f"  {coeff} * {arrow.name} (x) {tail!r}")
print("alpha(B(W)) = 0:", alpha(chain).is_zero)

# the necklace identity sum_a [a, dW/da] = 0 holds for every potential
print("necklace sum:", necklace_sum(W))
