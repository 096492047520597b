from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cyforge import Arrow, GradedQuiver, NcPoly, Path, compose, koszul_sign, mul
from cyforge.errors import ValidationError

from corpus import three_loops


@pytest.fixture
def a2():
    return GradedQuiver(["1", "2"], [Arrow("a", "1", "2")])


def test_compose_identity(a2):
    a = Path.of([a2.arrow("a")])
    assert compose(Path.trivial("2"), a) == a
    assert compose(a, Path.trivial("1")) == a


def test_compose_concatenation():
    Q = GradedQuiver(["1", "2", "3"], [Arrow("a", "2", "1"), Arrow("b", "3", "2")])
    ab = compose(Path.of([Q.arrow("a")]), Path.of([Q.arrow("b")]))
    assert ab is not None
    assert [x.name for x in ab.arrows] == ["a", "b"]
    assert ab.source == "3" and ab.target == "1"


def test_compose_mismatch_is_absent(a2):
    a = Path.of([a2.arrow("a")])
    assert compose(a, a) is None


def test_incomposable_path_construction_fails(a2):
    with pytest.raises(ValidationError):
        Path.of([a2.arrow("a"), a2.arrow("a")])


def test_mul_bilinear():
    Q = three_loops()
    x, y, z = (NcPoly.generator(Q, n) for n in "xyz")
    assert (x + y) * z == x * z + y * z


def test_idempotent_projects_by_target():
    Q = GradedQuiver(["1", "2"], [Arrow("a", "1", "2"), Arrow("b", "2", "1")])
    f = NcPoly.generator(Q, "a") + NcPoly.generator(Q, "b")
    e1 = NcPoly.idempotent(Q, "1")
    assert e1 * f == NcPoly.generator(Q, "b")


def test_rational_coefficients_multiply():
    Q = three_loops()
    x = NcPoly.generator(Q, "x")
    lhs = x.scale(Fraction(2, 3)) * x.scale(Fraction(3, 2))
    assert lhs == x * x


def test_koszul_sign_values():
    assert koszul_sign(0, 5) == 1
    assert koszul_sign(1, 1) == -1
    assert koszul_sign(-1, 3) == -1


# -- property tests ---------------------------------------------------------

_QUIVERS = [
    three_loops(),
    GradedQuiver(
        ["1", "2"],
        [Arrow("a", "1", "2"), Arrow("b", "2", "1"), Arrow("c", "2", "2")],
    ),
    GradedQuiver(
        ["1", "2", "3"],
        [Arrow("a", "2", "1"), Arrow("b", "3", "2"), Arrow("r", "1", "3"), Arrow("s", "1", "1", -1)],
    ),
]


@st.composite
def poly(draw, quiver=None):
    Q = quiver or draw(st.sampled_from(_QUIVERS))
    paths = list(Q.trivial_paths())
    for length in (1, 2, 3):
        paths.extend(Q.paths_of_length(length))
    n_terms = draw(st.integers(0, 4))
    terms = {}
    for _ in range(n_terms):
        p = draw(st.sampled_from(paths))
        c = Fraction(draw(st.integers(-4, 4)), draw(st.integers(1, 3)))
        terms[p] = terms.get(p, Fraction(0)) + c
    return NcPoly(Q, terms)


@st.composite
def poly_triple(draw):
    Q = draw(st.sampled_from(_QUIVERS))
    return tuple(draw(poly(quiver=Q)) for _ in range(3))


@given(poly_triple())
@settings(max_examples=150, deadline=None)
def test_mul_associative(fgh):
    f, g, h = fgh
    assert mul(mul(f, g), h) == mul(f, mul(g, h))


@given(poly())
@settings(max_examples=100, deadline=None)
def test_unit_is_two_sided(f):
    one = NcPoly.unit(f.quiver)
    assert mul(one, f) == f
    assert mul(f, one) == f


@given(poly_triple())
@settings(max_examples=100, deadline=None)
def test_product_endpoints(fgh):
    f, g, _ = fgh
    for p, _c in mul(f, g).items():
        # every product term splits as (f-term)(g-term) with matching ends
        pass
    # check degree additivity on homogeneous pieces instead
    for p, _c in f.items():
        for q, _c2 in g.items():
            pq = compose(p, q)
            if pq is not None:
                assert pq.degree == p.degree + q.degree
                assert pq.source == q.source and pq.target == p.target
