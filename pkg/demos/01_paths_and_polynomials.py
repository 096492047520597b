"""Paths, composition, and exact noncommutative polynomials.

A quiver is a finite directed multigraph; its path algebra has one
idempotent per vertex and a basis of composable paths.  Words are stored
function-style: in x.y.z the letter z is applied first.
"""

from fractions import Fraction

from cyforge import Arrow, GradedQuiver, NcPoly, Path, compose, koszul_sign

Q = GradedQuiver(
    ["1", "2", "3"],
    [Arrow("a", "2", "1"), Arrow("b", "3", "2"), Arrow("r", "1", "3")],
)

a = Path.of([Q.arrow("a")])
b = Path.of([Q.arrow("b")])
print("compose(a, b) =", compose(a, b), " (a after b: 3 -> 1)")
print("compose(a, a) =", compose(a, a), " (endpoints mismatch -> absent)")
print("trivial path acts as identity:", compose(Path.trivial("1"), a) == a)

# exact rational arithmetic: (2/3)a * (3/2)b = ab
f = NcPoly.generator(Q, "a").scale(Fraction(2, 3))
g = NcPoly.generator(Q, "b").scale(Fraction(3, 2))
print("(2/3)a * (3/2)b =", f * g)

# idempotents project: e_1 * h keeps the terms ending at vertex 1
h = NcPoly.generator(Q, "a") + NcPoly.generator(Q, "b")
print("e_1 * (a + b) =", NcPoly.idempotent(Q, "1") * h)

# the unit is the sum of all trivial paths
one = NcPoly.unit(Q)
print("unit * (a + b) == a + b:", one * h == h)

print("koszul_sign(1, 1) =", koszul_sign(1, 1))
print("koszul_sign(-1, 3) =", koszul_sign(-1, 3))
