"""Acceptance suite: one test per criterion, exact arithmetic, tolerance zero.

Each test prints a single PASS line on success (run with -s to see them all).
"""

import json
import random
import time
from fractions import Fraction

from cyforge import (
    Arrow,
    GradedQuiver,
    NcPoly,
    Potential,
    QuiverWithPotential,
    alpha,
    beta,
    canonicalize,
    check_d_squared,
    check_nondegenerate,
    check_pairing_compat,
    connes_B,
    delete_vertex,
    ext_ainfty,
    ginzburg,
    hc_dims,
    hh_dims,
    jacobian_quotient,
    leibniz_extend,
    premutate,
    qp_from_gldim2,
    reduce_trivial,
)
from cyforge.cli import main as cli_main
from cyforge.hochschild import CyclicChain0, pair_basis
from cyforge.io_doc import emit_qp, parse_qp
from cyforge.potential import necklace_sum

from corpus import (
    a3_quiver,
    enumerate_quivers,
    necklace_potential,
    random_potential,
    random_qp_corpus,
    random_quiver,
    three_cycle,
    three_loops,
)
from oracles import (
    commutative_monomial_count,
    oracle_jacobian_dims,
    oracle_small_complex_dims,
)

CORPUS_A1 = random_qp_corpus(1009, 100, max_vertices=4, max_arrows=6, max_len=5)


def _report(name: str, detail: str = "") -> None:
    suffix = f" ({detail})" if detail else ""
    print(f"{name} PASS{suffix}")


def test_a1_ginzburg_d_squared_on_corpus():
    start = time.monotonic()
    for Q, W in CORPUS_A1:
        report = check_d_squared(ginzburg(Q, W, 3).algebra)
        assert report.passed, f"d^2 != 0 on {Q!r}"
    elapsed = time.monotonic() - start
    assert elapsed < 10.0
    _report("A1", f"100 QPs in {elapsed:.2f}s")


def test_a2_necklace_identity_two_routes():
    for Q, W in CORPUS_A1:
        # route 1: assembled in the potential module
        assert necklace_sum(W).is_zero
        # route 2: Leibniz expansion of the loop differentials in dg
        G = ginzburg(Q, W, 3)
        for v in Q.vertices:
            residual = leibniz_extend(G.algebra, G.algebra.d.of_arrow(f"c_{v}"))
            assert residual.is_zero
    _report("A2", "potential-module sum and dg expansion both vanish")


def test_a3_jacobian_dimensions():
    start = time.monotonic()
    Q = three_loops()
    q = jacobian_quotient(ginzburg(Q, necklace_potential(Q), 3), 4)
    expected = [commutative_monomial_count(3, l) for l in range(5)]
    assert list(q.dims) == expected == [1, 3, 6, 10, 15]

    QA3 = a3_quiver()
    Qc, Wc = qp_from_gldim2(QA3, [("rho", NcPoly.from_word(QA3, ["a", "b"]))])
    qc = jacobian_quotient(ginzburg(Qc, Wc, 3), 3)
    assert list(qc.dims) == [3, 3, 0, 0]
    assert qc.stabilized and qc.total_dimension == 6
    elapsed = time.monotonic() - start
    assert elapsed < 5.0
    _report("A3", f"dims {list(q.dims)} and {list(qc.dims)} in {elapsed:.2f}s")


def test_a4_premutation_exact_structure():
    qp = QuiverWithPotential.build(a3_quiver())
    m = premutate(qp, "2")
    assert {(a.name, a.source, a.target) for a in m.quiver.arrows} == {
        ("a*", "1", "2"),
        ("b*", "2", "3"),
        ("[a.b]", "3", "1"),
    }
    terms = m.W.rep.items()
    assert len(terms) == 1 and len(terms[0][0]) == 3 and terms[0][1] == 1

    red, _ = reduce_trivial(premutate(m, "2"))
    assert len(red.quiver.arrows) == 2
    assert red.W.is_zero
    assert sorted((a.source, a.target) for a in red.quiver.arrows) == sorted(
        (a.source, a.target) for a in qp.quiver.arrows
    )
    _report("A4", "mutation at 2 and its square behave exactly")


def test_a5_hochschild_cyclic_oracle_equivalence():
    compared = 0
    skipped = 0
    for Q in enumerate_quivers(3, 4):
        # slices above 200 basis elements are gated out of the dense oracle
        max_ok = -1
        for length in range(7):
            n_cycles = len(Q.cycles_of_length(length))
            n_pairs = len(pair_basis(Q, length))
            if max(n_cycles, n_pairs) > 200:
                break
            max_ok = length
        skipped += 6 - max_ok
        if max_ok < 0:
            continue
        engine_hh = hh_dims(Q, max_ok)
        engine_hc = hc_dims(Q, max_ok)
        for length in range(max_ok + 1):
            hh0, hh1, hc0, hc1 = oracle_small_complex_dims(Q, length)
            assert engine_hh[length] == (hh0, hh1)
            assert engine_hc[length] == (hc0, hc1)
            compared += 1
    assert compared > 4000

    one_loop = GradedQuiver(["v"], [Arrow("x", "v", "v")])
    dims_hh = hh_dims(one_loop, 6)
    dims_hc = hc_dims(one_loop, 6)
    assert all(d == (1, 1) for d in dims_hh[1:])
    assert all(d == (1, 0) for d in dims_hc[1:])

    rng = random.Random(55)
    checked = 0
    while checked < 1000:
        Q = random_quiver(rng, 3, 4)
        length = rng.randint(1, 4)
        cycles = Q.cycles_of_length(length)
        if not cycles:
            continue
        terms = {
            rng.choice(cycles): Fraction(rng.randint(-4, 4), rng.randint(1, 3))
            for _ in range(rng.randint(1, 3))
        }
        chain0 = CyclicChain0(Q, NcPoly(Q, terms))
        assert alpha(beta(chain0)).is_zero
        checked += 1
    _report("A5", f"{compared} slices vs dense oracle, {skipped} gated, 1000 chains")


def test_a6_calabi_yau_pairing():
    start = time.monotonic()
    Q = three_loops()
    W = necklace_potential(Q)
    report = check_pairing_compat(Q, W)
    assert report.passed
    assert check_nondegenerate(Q, W).passed

    QA2 = GradedQuiver(["1", "2"], [Arrow("a", "2", "1")])
    assert check_pairing_compat(QA2, Potential.zero(QA2)).passed
    assert check_nondegenerate(QA2, Potential.zero(QA2)).passed

    rng = random.Random(606)
    for _ in range(50):
        Qr = random_quiver(rng, 3, 5)
        Wr = random_potential(rng, Qr, max_len=5)
        assert check_pairing_compat(Qr, Wr).passed
        assert check_nondegenerate(Qr, Wr).passed

    corrupted = check_pairing_compat(Q, W, corrupt_dc=True)
    assert not corrupted.case(1).passed
    assert corrupted.case(1).failures[0][2].items()
    elapsed = time.monotonic() - start
    assert elapsed < 30.0
    _report("A6", f"52 instances + corrupted case in {elapsed:.2f}s")


def test_a7_connes_b_closedness():
    rng = random.Random(707)
    checked = 0
    while checked < 200:
        Q = random_quiver(rng, 4, 6)
        W = random_potential(rng, Q, max_len=5, max_terms=4)
        assert alpha(connes_B(W)).is_zero
        checked += 1
    _report("A7", "alpha(B(W)) = 0 on 200 potentials")


def test_a8_ainfty_roundtrip():
    for Q, W in CORPUS_A1:
        if any(len(p) == 1 for p, _ in W.rep.items()):
            continue
        G = ginzburg(Q, W, 3)
        table = ext_ainfty(G)
        for arrow in G.quiver.arrows:
            expected = {
                tuple(a.name for a in p.arrows): c
                for p, c in G.algebra.d.of_arrow(arrow.name).items()
            }
            assert table.reassemble(arrow.name) == expected

    Q = three_loops()
    table = ext_ainfty(ginzburg(Q, necklace_potential(Q), 3))
    entry = {word: c for c, word in table.entry(2, "x*")}
    assert entry == {("y", "z"): 1, ("z", "y"): -1}
    _report("A8", "differentials reassemble exactly; arity-2 entry checked")


def test_a9_vertex_deletion():
    Q, W = three_cycle()
    qp = QuiverWithPotential(Q, W)
    result = delete_vertex(qp, "3")
    assert sorted((a.source, a.target) for a in result.quiver.arrows) == [("2", "1")]
    assert result.W.is_zero

    cases = [(Q, W, "3"), (Q, W, "1")]
    Q4 = GradedQuiver(
        ["1", "2", "3", "4"],
        [Arrow("a", "2", "1"), Arrow("b", "3", "2"), Arrow("c", "4", "3"), Arrow("d", "1", "4")],
    )
    W4 = canonicalize(NcPoly.from_word(Q4, ["a", "b", "c", "d"]))
    cases += [(Q4, W4, "2"), (Q4, W4, "4")]
    for Qx, Wx, vertex in cases:
        reduced = delete_vertex(QuiverWithPotential(Qx, Wx), vertex)
        G = ginzburg(reduced.quiver, reduced.W, 3)
        engine = list(jacobian_quotient(G, 4).dims)
        oracle = oracle_jacobian_dims(Qx, Wx, 4, kill_vertex=vertex)
        assert engine == oracle
    _report("A9", "deletion matches the quotient-by-idempotent oracle")


def test_a10_cli_determinism_and_roundtrip(tmp_path):
    rng = random.Random(10)
    for _ in range(100):
        Q = random_quiver(rng, 4, 5)
        qp = QuiverWithPotential(Q, random_potential(rng, Q, max_len=4))
        text = emit_qp(qp)
        assert parse_qp(text) == qp          # parse . emit = identity
        assert emit_qp(parse_qp(text)) == text

    # non-canonical input: emit . parse canonicalizes
    raw = json.dumps(
        {
            "vertices": ["v"],
            "arrows": [
                {"name": "x", "source": "v", "target": "v", "degree": 0},
                {"name": "y", "source": "v", "target": "v", "degree": 0},
                {"name": "z", "source": "v", "target": "v", "degree": 0},
            ],
            "potential": [
                {"coef": "1", "path": ["y", "z", "x"]},
                {"coef": "1", "path": ["z", "x", "y"]},
            ],
        }
    )
    doc = json.loads(emit_qp(parse_qp(raw)))
    assert doc["potential"] == [{"coef": "2", "path": ["x", "y", "z"]}]

    three_loop_file = tmp_path / "three.json"
    three_loop_file.write_text(raw)
    a3_file = tmp_path / "a3.json"
    a3_file.write_text(
        json.dumps(
            {
                "vertices": ["1", "2", "3"],
                "arrows": [
                    {"name": "a", "source": "2", "target": "1", "degree": 0},
                    {"name": "b", "source": "3", "target": "2", "degree": 0},
                ],
                "potential": [],
            }
        )
    )
    loop_file = tmp_path / "loop.json"
    loop_file.write_text(
        json.dumps(
            {
                "vertices": ["v"],
                "arrows": [{"name": "x", "source": "v", "target": "v", "degree": 0}],
                "potential": [],
            }
        )
    )
    bad_dg_file = tmp_path / "bad_dg.json"
    bad_dg_file.write_text(
        json.dumps(
            {
                "vertices": ["v"],
                "arrows": [
                    {"name": "a", "source": "v", "target": "v", "degree": 0},
                    {"name": "b", "source": "v", "target": "v", "degree": 1},
                ],
                "differential": {
                    "a": [{"coef": "1", "path": ["b"]}],
                    "b": [{"coef": "1", "path": ["b", "b"]}],
                },
            }
        )
    )

    fixtures = [
        (["ginzburg", "--input", str(three_loop_file), "--n", "3"], 0),
        (["check-d2", "--input", str(three_loop_file)], 0),
        (["check-d2", "--input", str(bad_dg_file)], 2),
        (["jacobian", "--input", str(three_loop_file), "--max-len", "3"], 0),
        (["mutate", "--input", str(a3_file), "--vertex", "2"], 0),
        (["mutate", "--input", str(a3_file), "--vertex", "9"], 1),
        (["mutate", "--input", str(loop_file), "--vertex", "v"], 1),
        (["delete-vertex", "--input", str(a3_file), "--vertex", "3"], 0),
        (["hh", "--input", str(three_loop_file), "--max-len", "2"], 0),
        (["hc", "--input", str(three_loop_file), "--max-len", "2"], 0),
        (["connes-b", "--input", str(three_loop_file)], 0),
        (["cy-check", "--input", str(three_loop_file)], 0),
        (["ainfty", "--input", str(three_loop_file)], 0),
        (["export-dot", "--input", str(a3_file)], 0),
        (["jacobian", "--input", str(tmp_path / "missing.json"), "--max-len", "2"], 1),
    ]
    for argv, expected in fixtures:
        assert cli_main(argv) == expected, argv
    _report("A10", f"round trips and {len(fixtures)} CLI fixtures")
