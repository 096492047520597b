"""Higher multiplications on the Ext-algebra, read off word-length parts.

Each generator differential of a Ginzburg algebra decomposes into word-
length-homogeneous pieces; dualizing the length-n piece gives the n-ary
operation table.  Reassembling the pieces recovers every differential
exactly.
"""

from cyforge import Arrow, GradedQuiver, NcPoly, canonicalize, ext_ainfty, ginzburg

Q = GradedQuiver(["v"], [Arrow("x", "v", "v"), Arrow("y", "v", "v"), Arrow("z", "v", "v")])
W = canonicalize(NcPoly.from_word(Q, ["x", "y", "z"]) - NcPoly.from_word(Q, ["x", "z", "y"]))
G = ginzburg(Q, W, 3)
table = ext_ainfty(G)

print("populated arities:", table.arities())
print("arity-2 part of d(x*):", list(table.entry(2, "x*")))
print("dual entry for the sequence (x, x*):", table.dual_entry(("x", "x*")))

ok = all(
    table.reassemble(a.name)
    == {tuple(p.name for p in path.arrows): c for path, c in G.algebra.d.of_arrow(a.name).items()}
    for a in G.quiver.arrows
)
print("round-trip reassembles all differentials:", ok)

# a longer homogeneous potential populates arity len(W) - 1 on the duals
W4 = canonicalize(NcPoly.from_word(Q, ["x", "x", "y", "y"]))
table4 = ext_ainfty(ginzburg(Q, W4, 3))
print("\nlength-4 potential arities:", table4.arities())
print("arity-3 entries for x*:", list(table4.entry(3, "x*")))
