"""Truncated Jacobian algebras via exact length-graded linear algebra.

The degree-zero cohomology of a Ginzburg algebra is the path algebra modulo
the cyclic derivatives.  Dimensions are computed per path length by exact
rational rank; a conservative flag reports when the quotient has visibly
stabilized to a finite-dimensional algebra.
"""

from cyforge import Arrow, GradedQuiver, NcPoly, canonicalize, ginzburg, jacobian_quotient, qp_from_gldim2

# three loops with the commutator potential: the polynomial ring k[x,y,z],
# whose dimensions count commutative monomials C(len+2, 2)
Q = GradedQuiver(["v"], [Arrow("x", "v", "v"), Arrow("y", "v", "v"), Arrow("z", "v", "v")])
W = canonicalize(NcPoly.from_word(Q, ["x", "y", "z"]) - NcPoly.from_word(Q, ["x", "z", "y"]))
q = jacobian_quotient(ginzburg(Q, W, 3), 6)
print("k[x,y,z] dims by length:", list(q.dims))
print("stabilized:", q.stabilized)

# the cluster-tilted algebra of type A3: start from the A3 algebra with the
# single minimal relation ab and read off the quiver with potential
QA3 = GradedQuiver(["1", "2", "3"], [Arrow("a", "2", "1"), Arrow("b", "3", "2")])
Qc, Wc = qp_from_gldim2(QA3, [("rho", NcPoly.from_word(QA3, ["a", "b"]))])
print("\n3-cycle quiver:", [(a.name, a.source, a.target) for a in Qc.arrows])
print("W =", Wc.rep)
qc = jacobian_quotient(ginzburg(Qc, Wc, 3), 4)
print("dims:", list(qc.dims), "total:", qc.total_dimension, "stabilized:", qc.stabilized)
print("surviving basis at length 1:", [repr(p) for p in qc.basis[1]])
