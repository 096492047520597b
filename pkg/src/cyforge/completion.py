"""Ginzburg dg algebras, deformed completions, Jacobian truncations.

The extended quiver doubles every arrow by a reversed dual of degree
-deg(a) - (n-2) and attaches one loop of degree -(n-1) per vertex.  The
completion differential is

    d(a)   = (-1)^{deg a} d(W_tot)/d(a*),
    d(a*)  = d(W_tot)/d(a),
    d(c_x) = (-1)^n e_x (sum_i [a_i, a_i*]) e_x,

where W_tot combines the canonical term sum_j (-1)^{deg a_j} a_j* d(a_j)
with the chosen deformation class.  d^2 = 0 is verified exactly on every
construction; a failure raises rather than degrades.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .core import Arrow, GradedQuiver, NcPoly, Path
from .dg import DgTensorAlgebra, check_d_squared
from .errors import BadRelation, D2Failure, DegreeMismatch, NameCollision, ValidationError
from .linalg import Echelon, SparseRow
from .potential import Potential, canonicalize, cyclic_derivative, supercommutator


def lift_poly(f: NcPoly, target: GradedQuiver) -> NcPoly:
    """Reinterpret a polynomial over a quiver containing the same arrow names."""
    terms = {}
    for path, c in f.items():
        if path.is_trivial:
            terms[Path.trivial(path.vertex)] = c
        else:
            terms[Path.of([target.arrow(a.name) for a in path.arrows])] = c
    return NcPoly(target, terms)


class ExtendedQuiver:
    """Original arrows plus shifted duals and one shifted loop per vertex."""

    def __init__(self, base: GradedQuiver, n: int, *, with_loops: bool = True):
        self.base = base
        self.n = n
        taken = {a.name for a in base.arrows}
        duals = []
        self.dual_name: dict[str, str] = {}
        for a in base.arrows:
            name = a.name + "*"
            if name in taken:
                raise NameCollision(f"derived dual name {name!r} already exists")
            taken.add(name)
            duals.append(Arrow(name, a.target, a.source, -a.degree - (n - 2)))
            self.dual_name[a.name] = name
        loops = []
        self.loop_name: dict[str, str] = {}
        if with_loops:
            for v in base.vertices:
                name = f"c_{v}"
                if name in taken:
                    raise NameCollision(f"derived loop name {name!r} already exists")
                taken.add(name)
                loops.append(Arrow(name, v, v, -(n - 1)))
                self.loop_name[v] = name
        self.quiver = GradedQuiver(base.vertices, tuple(base.arrows) + tuple(duals) + tuple(loops))
        self.original_names = tuple(a.name for a in base.arrows)
        self.dual_names = tuple(a.name for a in duals)
        self.loop_names = tuple(a.name for a in loops)

    def kind_of(self, name: str) -> str:
        if name in self.original_names:
            return "original"
        if name in self.dual_names:
            return "dual"
        if name in self.loop_names:
            return "loop"
        raise ValidationError(f"unknown arrow {name!r}")

    def dual_of(self, name: str) -> Arrow:
        return self.quiver.arrow(self.dual_name[name])

    def loop_at(self, vertex: str) -> Arrow:
        return self.quiver.arrow(self.loop_name[vertex])


def extended_quiver(Q: GradedQuiver, n: int) -> ExtendedQuiver:
    return ExtendedQuiver(Q, n)


@dataclass(frozen=True)
class GinzburgAlgebra:
    algebra: DgTensorAlgebra
    ext: ExtendedQuiver
    base_quiver: GradedQuiver
    potential: Potential
    deformation: Optional[Potential]
    n: int

    @property
    def quiver(self) -> GradedQuiver:
        return self.algebra.quiver


def _loop_differential(ext: ExtendedQuiver) -> dict[str, NcPoly]:
    """d(c_x) = (-1)^n e_x (sum [a, a*]) e_x over the extended quiver."""
    quiver = ext.quiver
    sign = -1 if ext.n % 2 else 1
    total = NcPoly.zero(quiver)
    for name in ext.original_names:
        a = NcPoly.generator(quiver, name)
        a_star = NcPoly.generator(quiver, ext.dual_name[name])
        total = total + supercommutator(a, a_star)
    out = {}
    for v in quiver.vertices:
        e = NcPoly.idempotent(quiver, v)
        out[ext.loop_name[v]] = (e * total * e).scale(sign)
    return out


def _completion_differential(ext: ExtendedQuiver, W_tot: Potential) -> dict[str, NcPoly]:
    quiver = ext.quiver
    d: dict[str, NcPoly] = {}
    for name in ext.original_names:
        arrow = quiver.arrow(name)
        dual = ext.dual_of(name)
        sign = -1 if arrow.degree % 2 else 1
        d[name] = cyclic_derivative(W_tot, dual).scale(sign)
    for name in ext.original_names:
        d[ext.dual_name[name]] = cyclic_derivative(W_tot, quiver.arrow(name))
    d.update(_loop_differential(ext))
    return d


def _validated(ext, base, W, Wdef, n, d) -> GinzburgAlgebra:
    algebra = DgTensorAlgebra(ext.quiver, d, defer_check=True)
    report = check_d_squared(algebra)
    if not report.passed:
        raise D2Failure(
            "differential does not square to zero at generators "
            + ", ".join(name for name, _ in report.failures),
            failures=list(report.failures),
        )
    return GinzburgAlgebra(algebra, ext, base, W, Wdef, n)


def ginzburg(Q: GradedQuiver, W: Potential, n: int) -> GinzburgAlgebra:
    """The Ginzburg dg algebra of an ungraded quiver with potential."""
    if any(a.degree != 0 for a in Q.arrows):
        raise ValidationError("ginzburg expects an ungraded quiver; use cy_completion")
    if W.quiver != Q:
        raise ValidationError("potential lives over a different quiver")
    if not W.is_zero and W.degree != n - 3:
        raise DegreeMismatch(f"potential degree {W.degree} incompatible with n={n} (need n-3)")
    ext = extended_quiver(Q, n)
    W_lift = canonicalize(lift_poly(W.rep, ext.quiver), degree=W.degree if not W.is_zero else 0)
    d = _completion_differential(ext, W_lift)
    # originals are closed by construction: the lifted potential has no duals
    return _validated(ext, Q, W_lift, None, n, d)


def canonical_completion_potential(A: DgTensorAlgebra, ext: ExtendedQuiver) -> Potential:
    """sum_j (-1)^{deg a_j} a_j* d(a_j), the cycle encoding A's differential."""
    quiver = ext.quiver
    total = NcPoly.zero(quiver)
    for a in A.quiver.arrows:
        da = A.d.of_arrow(a.name)
        if da.is_zero:
            continue
        dual = NcPoly.generator(quiver, ext.dual_name[a.name])
        sign = -1 if a.degree % 2 else 1
        total = total + (dual * lift_poly(da, quiver)).scale(sign)
    return canonicalize(total, degree=3 - ext.n if total else 0)


def cy_completion(A: DgTensorAlgebra, n: int, Wdef: Optional[Potential] = None) -> GinzburgAlgebra:
    """Deformed n-Calabi-Yau completion of a tensor-quiver dg algebra.

    The deformation is a potential over A's quiver of cohomological degree
    3 - n (a degree n-3 class in the homological convention) whose cycle
    representative is closed under A's differential.
    """
    report = check_d_squared(A)
    if not report.passed:
        raise ValidationError("input algebra fails d^2 = 0; refusing to complete")
    ext = extended_quiver(A.quiver, n)
    W_can = canonical_completion_potential(A, ext)
    total = W_can.rep
    if Wdef is not None and not Wdef.is_zero:
        if Wdef.quiver != A.quiver:
            raise ValidationError("deformation lives over a different quiver")
        if Wdef.degree != 3 - n:
            raise DegreeMismatch(
                f"deformation degree {Wdef.degree} incompatible with n={n} "
                f"(cohomological 3-n = {3 - n})"
            )
        total = total + lift_poly(Wdef.rep, ext.quiver)
    W_tot = canonicalize(total, degree=3 - n if total else 0)
    d = _completion_differential(ext, W_tot)
    return _validated(ext, A.quiver, W_tot, Wdef, n, d)


def qp_from_gldim2(
    Qp: GradedQuiver,
    relations: Sequence[tuple[str, NcPoly]],
    Wdef: Optional[Potential] = None,
) -> tuple[GradedQuiver, Potential]:
    """Quiver with potential of a global-dimension-<=2 algebra presentation.

    Each minimal relation r: i -> j contributes a reversed arrow rho: j -> i
    (named by the relation) and a potential term r * rho.  The caller asserts
    the relations form a basis of minimal relations.
    """
    new_arrows = list(Qp.arrows)
    taken = {a.name for a in Qp.arrows}
    endpoints = []
    for name, rel in relations:
        if rel.is_zero:
            raise BadRelation(f"relation {name!r} is zero")
        sources = {p.source for p, _ in rel.items()}
        targets = {p.target for p, _ in rel.items()}
        if len(sources) != 1 or len(targets) != 1:
            raise BadRelation(f"relation {name!r} mixes endpoints")
        if any(len(p) < 2 for p, _ in rel.items()):
            raise BadRelation(f"relation {name!r} contains a path of length < 2")
        if name in taken:
            raise NameCollision(f"relation name {name!r} clashes with an arrow")
        taken.add(name)
        i, j = sources.pop(), targets.pop()
        # r runs i -> j, the new arrow runs j -> i
        new_arrows.append(Arrow(name, j, i, 0))
        endpoints.append((name, rel))
    Q = GradedQuiver(Qp.vertices, new_arrows)
    total = NcPoly.zero(Q)
    for name, rel in endpoints:
        rho = NcPoly.generator(Q, name)
        total = total + lift_poly(rel, Q) * rho
    if Wdef is not None and not Wdef.is_zero:
        total = total + lift_poly(Wdef.rep, Q)
    return Q, canonicalize(total, degree=0)


@dataclass(frozen=True)
class TruncatedQuotient:
    max_len: int
    dims: tuple[int, ...]
    basis: Mapping[int, tuple[Path, ...]]
    stabilized: bool
    length_homogeneous: bool

    @property
    def total_dimension(self) -> int:
        return sum(self.dims)


def jacobian_quotient(G: GinzburgAlgebra, max_len: int) -> TruncatedQuotient:
    """Per-length dimensions of the path algebra modulo cyclic derivatives.

    For a length-homogeneous potential the reported dimensions are exact
    graded dimensions of H^0.  Otherwise the ideal is only filtered by
    length; spans are cut off at the total length bound and the result is
    flagged via ``length_homogeneous=False``.

    The ``stabilized`` flag is sufficient-only: trailing zero dimensions
    past the relation span prove finite-dimensionality, but a False flag
    decides nothing (the question is undecidable in general).
    """
    if max_len < 0:
        raise ValidationError("max_len must be >= 0")
    if G.n != 3 or any(a.degree != 0 for a in G.base_quiver.arrows):
        raise ValidationError("Jacobian truncation expects n = 3 over an ungraded quiver")
    Q = G.base_quiver
    W = canonicalize(
        NcPoly(
            Q,
            {
                _project_path(p, Q): c
                for p, c in G.potential.rep.items()
            },
        ),
        degree=G.potential.degree if not G.potential.is_zero else 0,
    )
    relations = [cyclic_derivative(W, a) for a in Q.arrows]
    relations = [r for r in relations if not r.is_zero]

    homogeneous = True
    rel_lengths = []
    for r in relations:
        lengths = {len(p) for p, _ in r.items()}
        rel_lengths.extend(lengths)
        if len(lengths) > 1:
            homogeneous = False

    paths_by_len = {l: Q.paths_of_length(l) for l in range(max_len + 1)}
    col_index: dict[Path, int] = {}
    offset = 0
    for l in range(max_len + 1):
        for p in paths_by_len[l]:
            col_index[p] = offset
            offset += 1

    def product_rows(length_bound: int) -> list[tuple[int, SparseRow]]:
        """(max term length, row) for every p*r*q fitting under the bound."""
        rows = []
        for r in relations:
            r_min = min(len(p) for p, _ in r.items())
            r_max = max(len(p) for p, _ in r.items())
            r_items = r.items()
            src = r_items[0][0].source
            tgt = r_items[0][0].target
            for lp in range(0, length_bound - r_min + 1):
                lefts = [p for p in paths_by_len.get(lp, []) if p.source == tgt]
                if not lefts:
                    continue
                for lq in range(0, length_bound - r_min - lp + 1):
                    rights = [q for q in paths_by_len.get(lq, []) if q.target == src]
                    for p in lefts:
                        for q in rights:
                            if lp + r_max + lq > length_bound:
                                continue
                            row: SparseRow = {}
                            for mid, c in r_items:
                                word = p.arrows + mid.arrows + q.arrows
                                full = Path(None, word) if word else Path.trivial(p.target)
                                row[col_index[full]] = row.get(col_index[full], Fraction(0)) + c
                            row = {k: v for k, v in row.items() if v}
                            if row:
                                rows.append((lp + r_max + lq, row))
        return rows

    rows = product_rows(max_len)
    rows.sort(key=lambda t: t[0])
    ech = Echelon()
    dims = []
    basis: dict[int, tuple[Path, ...]] = {}
    cursor = 0
    prev_total = 0
    for l in range(max_len + 1):
        while cursor < len(rows) and rows[cursor][0] <= l:
            ech.add(rows[cursor][1])
            cursor += 1
        total_paths = sum(len(paths_by_len[k]) for k in range(l + 1))
        dim_cum = total_paths - ech.rank
        dims.append(dim_cum - prev_total)
        prev_total = dim_cum
        pivot_cols = ech.pivot_columns()
        basis[l] = tuple(p for p in paths_by_len[l] if col_index[p] not in pivot_cols)

    window = max(2, max(rel_lengths)) if rel_lengths else 2
    stabilized = (
        bool(relations)
        and min(rel_lengths) > 0
        and max_len + 1 >= window
        and all(d == 0 for d in dims[-window:])
    ) or (
        not relations and max_len + 1 >= 2 and all(d == 0 for d in dims[-2:])
    )
    return TruncatedQuotient(max_len, tuple(dims), basis, stabilized, homogeneous)


def _project_path(p: Path, Q: GradedQuiver) -> Path:
    if p.is_trivial:
        return Path.trivial(p.vertex)
    return Path.of([Q.arrow(a.name) for a in p.arrows])


@dataclass(frozen=True)
class ConnectingTerm:
    coeff: Fraction
    left: Path
    dual_of: str
    right: Path


@dataclass(frozen=True)
class TwoTermBimoduleComplex:
    """Cone presentation of the shifted inverse dualizing complex.

    One generator per vertex, one dual generator per arrow.  The connecting
    map realizes the commutator element: the vertex generator at x maps to

        sum_{source(a)=x} (-1)^{deg a} (e_x, a*, a) - sum_{target(a)=x} (a, a*, e_x)

    written as (left coefficient, dual generator, right coefficient).
    """

    base: GradedQuiver
    ext: ExtendedQuiver
    vertex_generators: tuple[str, ...]
    dual_generators: tuple[str, ...]
    connecting: Mapping[str, tuple[ConnectingTerm, ...]]
    dual_differential: Mapping[str, NcPoly]


def inverse_dualizing_presentation(A: DgTensorAlgebra) -> TwoTermBimoduleComplex:
    report = check_d_squared(A)
    if not report.passed:
        raise ValidationError("input algebra fails d^2 = 0")
    ext = ExtendedQuiver(A.quiver, 2, with_loops=False)
    quiver = ext.quiver
    connecting: dict[str, tuple[ConnectingTerm, ...]] = {}
    for x in quiver.vertices:
        terms = []
        for a in A.quiver.arrows:
            dual = ext.dual_name[a.name]
            if a.source == x:
                sign = Fraction(-1 if a.degree % 2 else 1)
                terms.append(
                    ConnectingTerm(sign, Path.trivial(x), dual, Path.of([quiver.arrow(a.name)]))
                )
            if a.target == x:
                terms.append(
                    ConnectingTerm(Fraction(-1), Path.of([quiver.arrow(a.name)]), dual, Path.trivial(x))
                )
        connecting[x] = tuple(terms)
    W = canonical_completion_potential(A, ext)
    dual_differential = {
        ext.dual_name[a.name]: cyclic_derivative(W, quiver.arrow(a.name))
        for a in A.quiver.arrows
    }
    return TwoTermBimoduleComplex(
        A.quiver,
        ext,
        tuple(quiver.vertices),
        tuple(ext.dual_names),
        connecting,
        dual_differential,
    )
