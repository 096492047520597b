"""Double derivations, the Euler element, and the degree-3 pairing machinery.

The cone presentation P of the degree -3 self-duality of a Ginzburg algebra
has one generator per vertex (degree 0), one generator D(w) per arrow and
per dual arrow (degree deg(w) - 1), and one generator Dc_x per vertex
(degree -3), with differential

    d(unit_x) = 0
    d(Dw)     = w unit - unit w - D(d(w))
    d(Dc_x)   = c_x unit_x - unit_x c_x - (local part of) D(E)

where E = sum_a (a* a - a a*) is the Euler element.  The pairing assigns

    <Dc_x, unit_x> = <unit_x, Dc_x> = e_x (x) e_x
    <Dw, Dw'>      = (-1)^{deg w - 1} {{w, w'}}

and zero on other generator combinations.  The double bracket on generators
vanishes except for {{a*, a}} = e (x) e (a coordinate derivation applied to
its own arrow) and the sign-flipped transpose.  Bimodule coefficients are
peeled off with Koszul crossing signs; the inner actions on a tensor s (x) t
place left coefficients on t and right coefficients on s.  All conventions
are pinned by the six compatibility cases, which hold exactly for every
quiver with potential.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Mapping, Optional, Sequence

from .completion import ExtendedQuiver, GinzburgAlgebra, ginzburg
from .core import Arrow, Coeff, GradedQuiver, NcPoly, Path, koszul_sign
from .dg import leibniz_extend
from .errors import LinearTermPresent, UnsupportedArgument, ValidationError
from .potential import Potential


# ---------------------------------------------------------------------------
# tensor-square values


class BiTensor:
    """Finite rational combination of path pairs s (x) t over one quiver."""

    __slots__ = ("quiver", "_terms")

    def __init__(self, quiver: GradedQuiver, terms: Mapping[tuple[Path, Path], Coeff] | None = None):
        self.quiver = quiver
        clean: dict[tuple[Path, Path], Fraction] = {}
        for key, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[key] = c
        self._terms = clean

    @staticmethod
    def zero(quiver: GradedQuiver) -> "BiTensor":
        return BiTensor(quiver)

    def items(self) -> list[tuple[Path, Path, Fraction]]:
        key = self.quiver.path_key
        return sorted(
            ((s, t, c) for (s, t), c in self._terms.items()),
            key=lambda e: (key(e[0]), key(e[1])),
        )

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "BiTensor") -> "BiTensor":
        terms = dict(self._terms)
        for key, c in other._terms.items():
            terms[key] = terms.get(key, Fraction(0)) + c
        return BiTensor(self.quiver, terms)

    def __sub__(self, other: "BiTensor") -> "BiTensor":
        return self + other.scale(-1)

    def scale(self, c: Coeff) -> "BiTensor":
        c = Fraction(c)
        return BiTensor(self.quiver, {k: c * v for k, v in self._terms.items()})

    def sigma(self) -> "BiTensor":
        """Interchange: s (x) t -> (-1)^{deg s deg t} t (x) s."""
        terms: dict[tuple[Path, Path], Fraction] = {}
        for (s, t), c in self._terms.items():
            sign = koszul_sign(s.degree, t.degree)
            key = (t, s)
            terms[key] = terms.get(key, Fraction(0)) + c * sign
        return BiTensor(self.quiver, terms)

    def outer(self, left: Optional[Path], right: Optional[Path]) -> "BiTensor":
        """left . (s (x) t) . right in the outer structure; drops incomposables."""
        from .core import compose

        terms: dict[tuple[Path, Path], Fraction] = {}
        for (s, t), c in self._terms.items():
            s2 = compose(left, s) if left is not None else s
            if s2 is None:
                continue
            t2 = compose(t, right) if right is not None else t
            if t2 is None:
                continue
            terms[(s2, t2)] = terms.get((s2, t2), Fraction(0)) + c
        return BiTensor(self.quiver, terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, BiTensor) and self._terms == other._terms

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}·({s!r} ⊗ {t!r})" for s, t, c in self.items())


def d_bitensor(G: GinzburgAlgebra, value: BiTensor) -> BiTensor:
    """Tensor-product differential d(s (x) t) = ds (x) t + (-1)^{deg s} s (x) dt."""
    quiver = G.quiver
    out: dict[tuple[Path, Path], Fraction] = {}
    for s, t, c in value.items():
        ds = leibniz_extend(G.algebra, NcPoly(quiver, {s: 1}))
        for p, cp in ds.items():
            out[(p, t)] = out.get((p, t), Fraction(0)) + c * cp
        dt = leibniz_extend(G.algebra, NcPoly(quiver, {t: 1}))
        sign = -1 if s.degree % 2 else 1
        for p, cp in dt.items():
            out[(s, p)] = out.get((s, p), Fraction(0)) + c * cp * sign
    return BiTensor(quiver, out)


# ---------------------------------------------------------------------------
# double derivations


class DoubleDeriv:
    """Derivation valued in the outer tensor square, given on generators.

    Extension over words is sign-free (the arrows of the supported quivers
    are concentrated in degree 0): each occurrence contributes the value with
    the prefix acting on the left factor and the suffix on the right.
    """

    def __init__(self, quiver: GradedQuiver, values: Mapping[str, BiTensor]):
        self.quiver = quiver
        self.values = {name: val for name, val in values.items() if not val.is_zero}

    @staticmethod
    def coordinate(quiver: GradedQuiver, arrow_name: str) -> "DoubleDeriv":
        a = quiver.arrow(arrow_name)
        value = BiTensor(quiver, {(Path.trivial(a.target), Path.trivial(a.source)): 1})
        return DoubleDeriv(quiver, {arrow_name: value})

    def of_arrow(self, name: str) -> BiTensor:
        return self.values.get(name, BiTensor.zero(self.quiver))


def apply_double_deriv(delta: DoubleDeriv, f: NcPoly) -> BiTensor:
    quiver = delta.quiver
    if f.quiver != quiver:
        raise ValidationError("polynomial lives over a different quiver")
    out = BiTensor.zero(quiver)
    for path, coeff in f.items():
        if path.is_trivial:
            continue
        word = path.arrows
        for j, arrow in enumerate(word):
            val = delta.of_arrow(arrow.name)
            if val.is_zero:
                continue
            left = Path.of(word[:j]) if j else Path.trivial(arrow.target)
            right = Path.of(word[j + 1:]) if j + 1 < len(word) else Path.trivial(arrow.source)
            out = out + val.outer(left, right).scale(coeff)
    return out


class EulerRule:
    """The distinguished double derivation E(f) = sum_i f e_i (x) e_i - e_i (x) e_i f."""

    def __init__(self, quiver: GradedQuiver):
        self.quiver = quiver

    def apply(self, f: NcPoly) -> BiTensor:
        out: dict[tuple[Path, Path], Fraction] = {}
        for path, c in f.items():
            src = Path.trivial(path.source)
            tgt = Path.trivial(path.target)
            for key, sign in (((path, src), 1), ((tgt, path), -1)):
                out[key] = out.get(key, Fraction(0)) + c * sign
        return BiTensor(self.quiver, out)


def canonical_E(quiver: GradedQuiver) -> EulerRule:
    return EulerRule(quiver)


def euler_element(ext: ExtendedQuiver) -> NcPoly:
    """E written in the doubled quiver: sum over arrows of a* a - a a*."""
    quiver = ext.quiver
    total = NcPoly.zero(quiver)
    for name in ext.original_names:
        a = quiver.arrow(name)
        a_star = quiver.arrow(ext.dual_name[name])
        word_sa = Path.of([a_star, a])
        word_as = Path.of([a, a_star])
        sign = koszul_sign(a.degree, a_star.degree)
        total = total + NcPoly(quiver, {word_sa: 1, word_as: -sign})
    return total


@dataclass(frozen=True)
class TGen:
    """Generator of the doubled algebra: an arrow or a coordinate derivation."""

    kind: Literal["arrow", "coord"]
    name: str


def double_sn_bracket(quiver: GradedQuiver, xi: TGen, eta: TGen) -> BiTensor:
    """Degree-1 double bracket on generators of the odd doubled algebra.

    Arrows bracket to zero with each other, coordinate derivations bracket to
    zero with each other, and {{d/da, b}} = (da/db-style) evaluation; the
    transposed order picks up the interchange with a sign.  Composite inputs
    must go through the bimodule-Leibniz pairing machinery instead.
    """
    for g in (xi, eta):
        if g.kind not in ("arrow", "coord"):
            raise UnsupportedArgument(f"unsupported generator kind {g.kind!r}")
        quiver.arrow(g.name)
    if xi.kind == eta.kind:
        return BiTensor.zero(quiver)
    if xi.kind == "coord":
        if xi.name != eta.name:
            return BiTensor.zero(quiver)
        a = quiver.arrow(eta.name)
        return BiTensor(quiver, {(Path.trivial(a.target), Path.trivial(a.source)): 1})
    # arrow first: {{a, d/da}} = -sigma({{d/da, a}})
    return double_sn_bracket(quiver, eta, xi).sigma().scale(-1)


# ---------------------------------------------------------------------------
# the resolution P and its degree-3 pairing


@dataclass(frozen=True)
class PGenerator:
    """Generator of the cone resolution: unit_x, D(arrow), or Dc_x."""

    kind: Literal["unit", "omega", "dc"]
    name: str  # vertex name for unit/dc, arrow name for omega

    def label(self) -> str:
        if self.kind == "unit":
            return f"I_{self.name}"
        if self.kind == "omega":
            return f"D{self.name}"
        return f"Dc_{self.name}"


class PContext:
    """Generators, degrees and cone differential of P for one Ginzburg algebra."""

    def __init__(self, G: GinzburgAlgebra, *, corrupt_dc: bool = False):
        if G.n != 3:
            raise ValidationError("the degree-3 pairing machinery expects n = 3")
        self.G = G
        self.ext = G.ext
        self.quiver = G.quiver
        self.corrupt_dc = corrupt_dc

    # -- generator bookkeeping ------------------------------------------

    def generators(self) -> list[PGenerator]:
        gens = [PGenerator("unit", v) for v in self.quiver.vertices]
        gens += [PGenerator("omega", n) for n in self.ext.original_names]
        gens += [PGenerator("omega", n) for n in self.ext.dual_names]
        gens += [PGenerator("dc", v) for v in self.quiver.vertices]
        return gens

    def tensor_degree(self, g: PGenerator) -> int:
        """Degree before the cone shift (the doubled-algebra degree)."""
        if g.kind == "unit":
            return 0
        if g.kind == "omega":
            return self.quiver.arrow(g.name).degree
        return self.quiver.arrow(self.ext.loop_name[g.name]).degree

    def p_degree(self, g: PGenerator) -> int:
        if g.kind == "unit":
            return 0
        return self.tensor_degree(g) - 1

    def endpoints(self, g: PGenerator) -> tuple[str, str]:
        """(source, target) of the bimodule generator."""
        if g.kind in ("unit", "dc"):
            return g.name, g.name
        a = self.quiver.arrow(g.name)
        return a.source, a.target

    # -- elements of P ----------------------------------------------------

    def term(self, coeff: Coeff, left: Path, gen: PGenerator, right: Path) -> "PElement":
        src, tgt = self.endpoints(gen)
        if left.source != tgt or right.target != src:
            raise ValidationError(f"incomposable term around {gen.label()}")
        return PElement(self, {(left, gen, right): Fraction(coeff)})

    def generator_element(self, gen: PGenerator) -> "PElement":
        src, tgt = self.endpoints(gen)
        return self.term(1, Path.trivial(tgt), gen, Path.trivial(src))

    def d_omega_expansion(self, f: NcPoly, sign: Coeff) -> "PElement":
        """sign * D(f) as a sum of coefficiented omega generators."""
        out = PElement(self, {})
        for path, c in f.items():
            if path.is_trivial:
                continue
            word = path.arrows
            for j, arrow in enumerate(word):
                left = Path.of(word[:j]) if j else Path.trivial(arrow.target)
                right = Path.of(word[j + 1:]) if j + 1 < len(word) else Path.trivial(arrow.source)
                out = out + self.term(Fraction(sign) * c, left, PGenerator("omega", arrow.name), right)
        return out

    def d_P(self, g: PGenerator) -> "PElement":
        quiver = self.quiver
        if g.kind == "unit":
            return PElement(self, {})
        if g.kind == "omega":
            w = quiver.arrow(g.name)
            word = Path.of([w])
            out = self.term(1, word, PGenerator("unit", w.source), Path.trivial(w.source))
            out = out + self.term(-1, Path.trivial(w.target), PGenerator("unit", w.target), word)
            return out + self.d_omega_expansion(self.G.algebra.d.of_arrow(w.name), -1)
        v = g.name
        out = PElement(self, {})
        c_v = Path.of([quiver.arrow(self.ext.loop_name[v])])
        unit_v = PGenerator("unit", v)
        if self.corrupt_dc:
            # deliberately broken: keep only half of the commutator term
            out = out + self.term(1, c_v, unit_v, Path.trivial(v))
        else:
            out = out + self.term(1, c_v, unit_v, Path.trivial(v))
            out = out + self.term(-1, Path.trivial(v), unit_v, c_v)
        for name in self.ext.original_names:
            a = quiver.arrow(name)
            a_star = quiver.arrow(self.ext.dual_name[name])
            if a.source == v:
                out = out + self.term(-1, Path.trivial(v), PGenerator("omega", a_star.name), Path.of([a]))
                out = out + self.term(-1, Path.of([a_star]), PGenerator("omega", a.name), Path.trivial(v))
            if a.target == v:
                out = out + self.term(1, Path.trivial(v), PGenerator("omega", a.name), Path.of([a_star]))
                out = out + self.term(1, Path.of([a]), PGenerator("omega", a_star.name), Path.trivial(v))
        return out

    # -- the pairing -------------------------------------------------------

    def _omega_bracket(self, w: Arrow, w2: Arrow) -> BiTensor:
        kinds = (self.ext.kind_of(w.name), self.ext.kind_of(w2.name))
        quiver = self.quiver
        if kinds == ("dual", "original"):
            if self.ext.dual_name[w2.name] != w.name:
                return BiTensor.zero(quiver)
            return BiTensor(quiver, {(Path.trivial(w2.target), Path.trivial(w2.source)): 1})
        if kinds == ("original", "dual"):
            if self.ext.dual_name[w.name] != w2.name:
                return BiTensor.zero(quiver)
            return BiTensor(quiver, {(Path.trivial(w.source), Path.trivial(w.target)): -1})
        return BiTensor.zero(quiver)

    def pair_terms(
        self,
        left: tuple[Path, PGenerator, Path],
        right: tuple[Path, PGenerator, Path],
        coeff: Fraction,
    ) -> BiTensor:
        from .core import compose

        x, g, y = left
        x2, g2, y2 = right
        quiver = self.quiver
        out: dict[tuple[Path, Path], Fraction] = {}

        if g.kind == "omega" and g2.kind == "omega":
            w, w2 = quiver.arrow(g.name), quiver.arrow(g2.name)
            values = self._omega_bracket(w, w2)
            if values.is_zero:
                return BiTensor.zero(quiver)
            conv = x.degree + w.degree + y.degree - 1
            for s, t, c in values.items():
                exp = (
                    (1 + x.degree + w.degree + y.degree) * x2.degree
                    + (1 + w2.degree) * y.degree
                    + y.degree * t.degree
                    + x.degree * s.degree
                    + x.degree * y.degree
                    + conv
                )
                sign = -1 if exp % 2 else 1
                s_full = compose(compose(x2, s), y) if compose(x2, s) is not None else None
                t_full = compose(compose(x, t), y2) if compose(x, t) is not None else None
                if s_full is None or t_full is None:
                    continue
                key = (s_full, t_full)
                out[key] = out.get(key, Fraction(0)) + coeff * c * sign
            return BiTensor(quiver, out)

        pair = (g.kind, g2.kind)
        if pair in (("dc", "unit"), ("unit", "dc")):
            if g.name != g2.name:
                return BiTensor.zero(quiver)
            e = Path.trivial(g.name)
            exp = x.degree * (x2.degree + e.degree) + y.degree * (
                x.degree + e.degree + y2.degree
            )
            sign = -1 if exp % 2 else 1
            s_full = compose(compose(x2, e), y) if compose(x2, e) is not None else None
            t_full = compose(compose(x, e), y2) if compose(x, e) is not None else None
            if s_full is None or t_full is None:
                return BiTensor.zero(quiver)
            return BiTensor(quiver, {(s_full, t_full): coeff * sign})

        return BiTensor.zero(quiver)


class PElement:
    """Formal combination of coefficiented P generators."""

    __slots__ = ("ctx", "_terms")

    def __init__(self, ctx: PContext, terms: Mapping[tuple[Path, PGenerator, Path], Coeff]):
        self.ctx = ctx
        clean: dict[tuple[Path, PGenerator, Path], Fraction] = {}
        for key, c in terms.items():
            c = Fraction(c)
            if c:
                clean[key] = clean.get(key, Fraction(0)) + c
        self._terms = {k: v for k, v in clean.items() if v}

    def items(self):
        return list(self._terms.items())

    def __add__(self, other: "PElement") -> "PElement":
        terms = dict(self._terms)
        for key, c in other._terms.items():
            terms[key] = terms.get(key, Fraction(0)) + c
        return PElement(self.ctx, terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms


def pair_elements(p: PElement, q: PElement) -> BiTensor:
    ctx = p.ctx
    out = BiTensor.zero(ctx.quiver)
    for term_p, cp in p.items():
        for term_q, cq in q.items():
            out = out + ctx.pair_terms(term_p, term_q, cp * cq)
    return out


def pairing_P(G: GinzburgAlgebra, p: PGenerator, q: PGenerator) -> BiTensor:
    """Value of the degree-3 pairing on two bare generators of P."""
    ctx = PContext(G)
    return pair_elements(ctx.generator_element(p), ctx.generator_element(q))


# ---------------------------------------------------------------------------
# verification reports


CASE_OF = {
    ("dc", "dc"): 1,
    ("dc", "omega"): 2,
    ("omega", "dc"): 2,
    ("dc", "unit"): 3,
    ("unit", "dc"): 3,
    ("omega", "omega"): 4,
    ("omega", "unit"): 5,
    ("unit", "omega"): 5,
    ("unit", "unit"): 6,
}


@dataclass
class CaseResult:
    case: int
    pairs_checked: int = 0
    failures: list[tuple[str, str, BiTensor]] = None  # type: ignore[assignment]

    def __post_init__(self):
        if self.failures is None:
            self.failures = []

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class PairingCompatReport:
    cases: dict[int, CaseResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases.values())

    def case(self, n: int) -> CaseResult:
        return self.cases[n]


def check_pairing_compat(
    Q: GradedQuiver, z: Potential, *, corrupt_dc: bool = False
) -> PairingCompatReport:
    """Verify d<p,q> = <dp,q> + (-1)^{deg p + 3} <p,dq> on every generator pair.

    The pairs are grouped into the six cases by generator kind; each ordered
    pair is checked independently, so the symmetry of the pairing is exercised
    rather than assumed.
    """
    G = ginzburg(Q, z, 3)
    ctx = PContext(G, corrupt_dc=corrupt_dc)
    gens = ctx.generators()
    cases = {n: CaseResult(n) for n in range(1, 7)}
    for p in gens:
        dp = ctx.d_P(p)
        p_elem = ctx.generator_element(p)
        sign_p = -1 if (ctx.p_degree(p) + 3) % 2 else 1
        for q in gens:
            case = cases[CASE_OF[(p.kind, q.kind)]]
            case.pairs_checked += 1
            value = pair_elements(p_elem, ctx.generator_element(q))
            lhs = d_bitensor(G, value)
            rhs = pair_elements(dp, ctx.generator_element(q)) + pair_elements(
                p_elem, ctx.d_P(q)
            ).scale(sign_p)
            residual = lhs - rhs
            if not residual.is_zero:
                case.failures.append((p.label(), q.label(), residual))
    return PairingCompatReport(cases)


def pairing_symmetry_holds(G: GinzburgAlgebra) -> bool:
    """<p,q> = (-1)^{(3+deg p)(3+deg q)} sigma <q,p> on every generator pair."""
    ctx = PContext(G)
    gens = ctx.generators()
    for p in gens:
        for q in gens:
            lhs = pairing_P(G, p, q)
            sign = koszul_sign(3 + ctx.p_degree(p), 3 + ctx.p_degree(q))
            rhs = pairing_P(G, q, p).sigma().scale(sign)
            if lhs != rhs:
                return False
    return True


@dataclass(frozen=True)
class NondegeneracyReport:
    passed: bool
    partners: Mapping[str, str]
    problems: tuple[str, ...]


def _idempotent_value(value: BiTensor) -> Optional[int]:
    """+1/-1 when the value is a single signed pair of trivial paths."""
    items = value.items()
    if len(items) != 1:
        return None
    s, t, c = items[0]
    if not (s.is_trivial and t.is_trivial and c in (1, -1)):
        return None
    return int(c)


def nondegeneracy_report(
    ctx: PContext, gens: Sequence[PGenerator]
) -> NondegeneracyReport:
    partners: dict[str, str] = {}
    problems: list[str] = []
    expected = {"unit": "dc", "dc": "unit", "omega": "omega"}
    for p in gens:
        hits = []
        for q in gens:
            value = pair_elements(ctx.generator_element(p), ctx.generator_element(q))
            if not value.is_zero:
                hits.append((q, value))
        if len(hits) != 1:
            problems.append(f"{p.label()} pairs with {len(hits)} generators")
            continue
        q, value = hits[0]
        if q.kind != expected[p.kind] or _idempotent_value(value) is None:
            problems.append(f"{p.label()} has malformed partner {q.label()}")
            continue
        partners[p.label()] = q.label()
    for p_label, q_label in partners.items():
        if partners.get(q_label) != p_label:
            problems.append(f"pairing not involutive at {p_label}")
    return NondegeneracyReport(not problems, partners, tuple(problems))


def check_nondegenerate(Q: GradedQuiver, z: Potential) -> NondegeneracyReport:
    """Perfect-pairing check: block-antidiagonal with idempotent +-1 blocks."""
    G = ginzburg(Q, z, 3)
    ctx = PContext(G)
    return nondegeneracy_report(ctx, ctx.generators())


# ---------------------------------------------------------------------------
# Ext-algebra multiplications


@dataclass(frozen=True)
class AinftyTable:
    """Word-length decomposition of the generator differentials.

    ``components[n][w]`` lists the signed length-n words of d(w); the dual
    n-ary operations mirror these entries on dual generators and carry
    degree 1 in the shifted convention.
    """

    quiver: GradedQuiver
    components: Mapping[int, Mapping[str, tuple[tuple[Fraction, tuple[str, ...]], ...]]]

    def arities(self) -> list[int]:
        return sorted(self.components)

    def entry(self, arity: int, generator: str) -> tuple[tuple[Fraction, tuple[str, ...]], ...]:
        return self.components.get(arity, {}).get(generator, ())

    def dual_entry(self, sequence: tuple[str, ...]) -> dict[str, Fraction]:
        """Coefficients of the n-ary operation on the dual generators."""
        out: dict[str, Fraction] = {}
        table = self.components.get(len(sequence), {})
        for gen, entries in table.items():
            for coeff, word in entries:
                if word == sequence:
                    out[gen] = out.get(gen, Fraction(0)) + coeff
        return {k: v for k, v in out.items() if v}

    def reassemble(self, generator: str) -> dict[tuple[str, ...], Fraction]:
        out: dict[tuple[str, ...], Fraction] = {}
        for table in self.components.values():
            for coeff, word in table.get(generator, ()):
                out[word] = out.get(word, Fraction(0)) + coeff
        return {k: v for k, v in out.items() if v}


def ext_ainfty(G: GinzburgAlgebra) -> AinftyTable:
    """Read the higher multiplications off the homogeneous differential parts."""
    if any(len(p) == 1 for p, _ in G.potential.rep.items()):
        raise LinearTermPresent("the potential contains linear terms")
    components: dict[int, dict[str, list[tuple[Fraction, tuple[str, ...]]]]] = {}
    for arrow in G.quiver.arrows:
        for path, coeff in G.algebra.d.of_arrow(arrow.name).items():
            n = len(path)
            if n == 0:
                continue
            word = tuple(a.name for a in path.arrows)
            components.setdefault(n, {}).setdefault(arrow.name, []).append((coeff, word))
    frozen = {
        n: {gen: tuple(entries) for gen, entries in table.items()}
        for n, table in components.items()
    }
    return AinftyTable(G.quiver, frozen)
