import pytest

from cyforge import (
    Arrow,
    DgTensorAlgebra,
    GradedQuiver,
    NcPoly,
    Path,
    Potential,
    canonicalize,
    check_d_squared,
    cy_completion,
    extended_quiver,
    ginzburg,
    inverse_dualizing_presentation,
    jacobian_quotient,
    qp_from_gldim2,
)
from cyforge.errors import BadRelation, DegreeMismatch, NameCollision, ValidationError

from corpus import a3_quiver, necklace_potential, random_qp_corpus, three_cycle, three_loops
from oracles import commutative_monomial_count, oracle_jacobian_dims


def arrow_degrees(ext):
    return {a.name: a.degree for a in ext.quiver.arrows}


def test_extended_quiver_three_loops():
    ext = extended_quiver(three_loops(), 3)
    degs = arrow_degrees(ext)
    assert degs["x*"] == degs["y*"] == degs["z*"] == -1
    assert degs["c_v"] == -2


def test_extended_quiver_a2_n2():
    ext = extended_quiver(a3_quiver(), 2)
    degs = arrow_degrees(ext)
    assert degs["a*"] == 0 and degs["b*"] == 0
    assert degs["c_1"] == degs["c_2"] == degs["c_3"] == -1
    a_star = ext.quiver.arrow("a*")
    assert (a_star.source, a_star.target) == ("1", "2")


def test_extended_quiver_negative_degree_dual():
    Q = GradedQuiver(["v"], [Arrow("r", "v", "v", -1)])
    ext = extended_quiver(Q, 3)
    assert ext.quiver.arrow("r*").degree == 0


def test_extended_quiver_name_collision():
    Q = GradedQuiver(["v"], [Arrow("x", "v", "v"), Arrow("x*", "v", "v")])
    with pytest.raises(NameCollision):
        extended_quiver(Q, 3)


def test_ginzburg_three_loops_differential():
    Q = three_loops()
    G = ginzburg(Q, necklace_potential(Q), 3)
    EQ = G.quiver
    assert G.algebra.d.of_arrow("x*") == NcPoly.from_word(EQ, ["y", "z"]) - NcPoly.from_word(EQ, ["z", "y"])
    dc = G.algebra.d.of_arrow("c_v")
    expected = NcPoly.zero(EQ)
    for n in "xyz":
        a = NcPoly.generator(EQ, n)
        a_star = NcPoly.generator(EQ, n + "*")
        expected = expected - (a * a_star - a_star * a)
    assert dc == expected
    assert check_d_squared(G.algebra).passed


def test_ginzburg_zero_potential():
    Q = three_loops()
    G = ginzburg(Q, Potential.zero(Q), 3)
    for n in "xyz":
        assert G.algebra.d.of_arrow(n + "*").is_zero


def test_ginzburg_three_cycle():
    Q, W = three_cycle()
    G = ginzburg(Q, W, 3)
    EQ = G.quiver
    assert G.algebra.d.of_arrow("rho*") == NcPoly.from_word(EQ, ["a", "b"])
    assert G.algebra.d.of_arrow("a*") == NcPoly.from_word(EQ, ["b", "rho"])
    assert G.algebra.d.of_arrow("b*") == NcPoly.from_word(EQ, ["rho", "a"])


def test_ginzburg_degree_mismatch():
    Q = three_loops()
    with pytest.raises(DegreeMismatch):
        ginzburg(Q, necklace_potential(Q), 4)


def test_completion_of_zero_differential_is_ginzburg():
    Q = three_loops()
    W = necklace_potential(Q)
    G1 = cy_completion(DgTensorAlgebra(Q, {}), 3, W)
    G2 = ginzburg(Q, W, 3)
    for a in G1.quiver.arrows:
        assert G1.algebra.d.of_arrow(a.name) == G2.algebra.d.of_arrow(a.name)


def test_completion_graded_input_reproduces_differential():
    Q = GradedQuiver(["v"], [Arrow("a", "v", "v", 0), Arrow("r", "v", "v", -1)])
    A = DgTensorAlgebra(Q, {"r": NcPoly.from_word(Q, ["a", "a"])})
    G = cy_completion(A, 3)
    EQ = G.quiver
    assert G.potential.rep == -NcPoly.from_word(EQ, ["a", "a", "r*"])
    assert G.algebra.d.of_arrow("a").is_zero
    assert G.algebra.d.of_arrow("r") == NcPoly.from_word(EQ, ["a", "a"])
    assert check_d_squared(G.algebra).passed


def test_completion_with_closed_deformation_on_graded_input():
    Q = GradedQuiver(["v"], [Arrow("a", "v", "v", 0), Arrow("r", "v", "v", -1)])
    A = DgTensorAlgebra(Q, {"r": NcPoly.from_word(Q, ["a", "a"])})
    Wdef = canonicalize(NcPoly.from_word(Q, ["a", "a"]))
    G = cy_completion(A, 3, Wdef)
    assert check_d_squared(G.algebra).passed
    assert G.algebra.d.of_arrow("r") == NcPoly.from_word(G.quiver, ["a", "a"])


def test_completion_rejects_unclosed_input():
    Q = GradedQuiver(["v"], [Arrow("a", "v", "v", 0), Arrow("b", "v", "v", 1)])
    b = NcPoly.generator(Q, "b")
    bad = DgTensorAlgebra(Q, {"a": b, "b": b * b}, defer_check=True)
    with pytest.raises(ValidationError):
        cy_completion(bad, 3)


def test_qp_from_gldim2_a3():
    QA3 = a3_quiver()
    Q, W = qp_from_gldim2(QA3, [("rho", NcPoly.from_word(QA3, ["a", "b"]))])
    rho = Q.arrow("rho")
    assert (rho.source, rho.target) == ("1", "3")
    assert W.rep == NcPoly.from_word(Q, ["a", "b", "rho"])


def test_qp_from_gldim2_no_relations():
    QA3 = a3_quiver()
    Q, W = qp_from_gldim2(QA3, [])
    assert Q == QA3 and W.is_zero


def test_qp_from_gldim2_parallel_relations():
    Q0 = GradedQuiver(
        ["1", "2", "3"],
        [Arrow("a", "2", "1"), Arrow("b", "3", "2"), Arrow("c", "2", "1"), Arrow("d", "3", "2")],
    )
    r1 = NcPoly.from_word(Q0, ["a", "b"])
    r2 = NcPoly.from_word(Q0, ["c", "d"])
    Q, W = qp_from_gldim2(Q0, [("p1", r1), ("p2", r2)])
    assert {a.name for a in Q.arrows} == {"a", "b", "c", "d", "p1", "p2"}
    expected = canonicalize(
        NcPoly.from_word(Q, ["a", "b", "p1"]) + NcPoly.from_word(Q, ["c", "d", "p2"])
    )
    assert W == expected


def test_qp_from_gldim2_bad_relation():
    QA3 = a3_quiver()
    with pytest.raises(BadRelation):
        qp_from_gldim2(QA3, [("r", NcPoly.generator(QA3, "a"))])
    mixed = NcPoly.from_word(QA3, ["a", "b"]) + NcPoly.generator(QA3, "a") * NcPoly.generator(QA3, "b")
    # parallel but with a length-2 and (same) length-2 term is fine; mixing endpoints is not
    Q0 = GradedQuiver(["1", "2"], [Arrow("a", "1", "2"), Arrow("b", "2", "1")])
    bad = NcPoly.from_word(Q0, ["a", "b"]) + NcPoly.from_word(Q0, ["b", "a"])
    with pytest.raises(BadRelation):
        qp_from_gldim2(Q0, [("r", bad)])


def test_jacobian_three_loops_matches_commutative_count():
    Q = three_loops()
    G = ginzburg(Q, necklace_potential(Q), 3)
    q = jacobian_quotient(G, 4)
    assert list(q.dims) == [commutative_monomial_count(3, l) for l in range(5)]
    assert list(q.dims) == [1, 3, 6, 10, 15]
    assert not q.stabilized
    assert q.length_homogeneous


def test_jacobian_three_loops_matches_dense_oracle():
    Q = three_loops()
    W = necklace_potential(Q)
    G = ginzburg(Q, W, 3)
    assert list(jacobian_quotient(G, 3).dims) == oracle_jacobian_dims(Q, W, 3)


def test_jacobian_cluster_tilted_a3():
    QA3 = a3_quiver()
    Q, W = qp_from_gldim2(QA3, [("rho", NcPoly.from_word(QA3, ["a", "b"]))])
    q = jacobian_quotient(ginzburg(Q, W, 3), 3)
    assert list(q.dims) == [3, 3, 0, 0]
    assert q.total_dimension == 6
    assert q.stabilized
    assert list(q.dims) == oracle_jacobian_dims(Q, W, 3)


def test_jacobian_free_when_no_relations():
    Q = GradedQuiver(["v"], [Arrow("x", "v", "v")])
    q = jacobian_quotient(ginzburg(Q, Potential.zero(Q), 3), 4)
    assert list(q.dims) == [1, 1, 1, 1, 1]
    assert not q.stabilized


def test_jacobian_dims_free_below_relation_length():
    Q = three_loops()
    W = canonicalize(
        NcPoly.from_word(Q, ["x", "x", "y", "z"]) - NcPoly.from_word(Q, ["x", "z", "z", "y"])
    )
    q = jacobian_quotient(ginzburg(Q, W, 3), 4)
    # relations have length 3, so lengths 0..2 count free paths
    assert list(q.dims)[:3] == [1, 3, 9]


def test_jacobian_surviving_basis_sizes():
    Q = three_loops()
    q = jacobian_quotient(ginzburg(Q, necklace_potential(Q), 3), 3)
    for length, dim in enumerate(q.dims):
        assert len(q.basis[length]) == dim


def test_jacobian_on_corpus_matches_oracle():
    for Q, W in random_qp_corpus(202, 12, max_vertices=3, max_arrows=4, max_len=4):
        lengths = {len(p) for p, _ in W.rep.items()}
        if len(lengths) > 1 or 1 in lengths or 0 in lengths:
            continue
        G = ginzburg(Q, W, 3)
        assert list(jacobian_quotient(G, 3).dims) == oracle_jacobian_dims(Q, W, 3)


def test_inverse_dualizing_single_loop():
    Q = GradedQuiver(["v"], [Arrow("a", "v", "v")])
    pres = inverse_dualizing_presentation(DgTensorAlgebra(Q, {}))
    assert pres.vertex_generators == ("v",)
    assert pres.dual_generators == ("a*",)
    assert pres.dual_differential["a*"].is_zero
    terms = pres.connecting["v"]
    # (-1)^0 (e, a*, a) - (a, a*, e)
    assert len(terms) == 2
    by_sign = {t.coeff: t for t in terms}
    assert by_sign[1].right == Path.of([pres.ext.quiver.arrow("a")])
    assert by_sign[-1].left == Path.of([pres.ext.quiver.arrow("a")])


def test_inverse_dualizing_graded_example():
    Q = GradedQuiver(["v"], [Arrow("a", "v", "v", 0), Arrow("r", "v", "v", -1)])
    A = DgTensorAlgebra(Q, {"r": NcPoly.from_word(Q, ["a", "a"])})
    pres = inverse_dualizing_presentation(A)
    assert pres.dual_differential["r*"].is_zero
    EQ = pres.ext.quiver
    # d(a*) = d/da of (-1)^{|r|} r* a a = -(a r* + r* a)
    expected = -(NcPoly.from_word(EQ, ["a", "r*"]) + NcPoly.from_word(EQ, ["r*", "a"]))
    assert pres.dual_differential["a*"] == expected


def test_corpus_ginzburg_d_squared():
    for Q, W in random_qp_corpus(7, 25):
        assert check_d_squared(ginzburg(Q, W, 3).algebra).passed
