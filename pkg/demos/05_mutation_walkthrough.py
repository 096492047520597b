"""Pre-mutation, restricted reduction, vertex deletion, session history.

Pre-mutation at a loop-free vertex composes every passage through it into a
fresh arrow, reverses the incident arrows, and adds the canonical cubic
terms.  The restricted reduction cancels removable 2-cycle terms (a
substitution-free fragment of trivial-part splitting); applying mutation
twice and reducing recovers the original quiver shape.
"""

from cyforge import (
    Arrow,
    GradedQuiver,
    MutationHistory,
    NcPoly,
    QuiverWithPotential,
    canonicalize,
    delete_vertex,
    premutate,
    reduce_trivial,
)

Q = GradedQuiver(["1", "2", "3"], [Arrow("a", "2", "1"), Arrow("b", "3", "2")])
qp = QuiverWithPotential.build(Q)

m1 = premutate(qp, "2")
print("mutate A3 at 2:")
print("  arrows:", [(a.name, a.source, a.target) for a in m1.quiver.arrows])
print("  W' =", m1.W.rep)

m2 = premutate(m1, "2")
print("mutate again: W'' =", m2.W.rep)
red, removed = reduce_trivial(m2)
print("reduced: arrows =", [a.name for a in red.quiver.arrows], " removed pairs:", removed)
print("W after reduction =", red.W.rep)

# deletion localizes: all cycles through the vertex disappear
Q3 = GradedQuiver(
    ["1", "2", "3"],
    [Arrow("a", "2", "1"), Arrow("b", "3", "2"), Arrow("rho", "1", "3")],
)
W3 = canonicalize(NcPoly.from_word(Q3, ["a", "b", "rho"]))
cut = delete_vertex(QuiverWithPotential(Q3, W3), "3")
print("\ndelete vertex 3 of the 3-cycle:", [a.name for a in cut.quiver.arrows], "W =", cut.W.rep)

# histories replay deterministically and undo exactly
history = MutationHistory(QuiverWithPotential(Q3, W3))
history.mutate("2", reduce=True)
history.mutate("1", reduce=True)
print("\nhistory replay consistent:", history.replay() == history.current)
history.undo()
print("after undo, one step remains:", len(history.steps))
