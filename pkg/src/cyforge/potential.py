"""Cyclic classes of cycle-supported polynomials, cyclic derivatives, Connes' B.

A potential is a class of cycle sums up to signed rotation.  All rotation
signs follow one convention, shared with the rotation-splitting map beta:
rotating the prefix b_1...b_k past b_{k+1}...b_s multiplies by
(-1)^{deg(prefix) * deg(rest)}.  Canonical representatives rotate every term
to its minimal word under the arrow total order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .core import Arrow, Coeff, GradedQuiver, NcPoly, Path, koszul_sign
from .errors import NonCycleTerm, ValidationError


def rotations_with_signs(path: Path) -> list[tuple[Path, int]]:
    """All rotations of a cycle with their Koszul signs (identity first)."""
    if not path.is_cycle:
        raise NonCycleTerm(f"{path!r} is not a cycle")
    if path.is_trivial:
        return [(path, 1)]
    word = path.arrows
    out = []
    prefix_degree = 0
    total = path.degree
    for k in range(len(word)):
        rotated = Path(None, word[k:] + word[:k])
        out.append((rotated, koszul_sign(prefix_degree, total - prefix_degree)))
        prefix_degree += word[k].degree
    return out


@dataclass(frozen=True)
class HochschildOneChain:
    """Element of the degree-1 column of the small complex: sum of v (x) u with vu a cycle."""

    quiver: GradedQuiver
    entries: tuple[tuple[Arrow, Path, Fraction], ...]

    @staticmethod
    def build(quiver: GradedQuiver, data: Mapping[tuple[Arrow, Path], Coeff]) -> "HochschildOneChain":
        clean: dict[tuple[Arrow, Path], Fraction] = {}
        for (arrow, tail), c in data.items():
            if arrow.source != tail.target or arrow.target != tail.source:
                raise ValidationError(
                    f"entry {arrow.name} (x) {tail!r} is not a cycle splitting"
                )
            c = Fraction(c)
            if c:
                clean[(arrow, tail)] = clean.get((arrow, tail), Fraction(0)) + c
        entries = sorted(
            ((a, p, c) for (a, p), c in clean.items() if c),
            key=lambda e: (quiver.arrow_order(e[0]), quiver.path_key(e[1])),
        )
        return HochschildOneChain(quiver, tuple(entries))

    @property
    def is_zero(self) -> bool:
        return not self.entries


class Potential:
    """Cyclic-equivalence class with a canonical signed representative."""

    __slots__ = ("quiver", "rep", "degree")

    def __init__(self, quiver: GradedQuiver, rep: NcPoly, degree: int):
        self.quiver = quiver
        self.rep = rep
        self.degree = degree

    @staticmethod
    def zero(quiver: GradedQuiver, degree: int = 0) -> "Potential":
        return Potential(quiver, NcPoly.zero(quiver), degree)

    @property
    def is_zero(self) -> bool:
        return self.rep.is_zero

    def __add__(self, other: "Potential") -> "Potential":
        if self.quiver != other.quiver:
            raise ValidationError("potentials live over different quivers")
        if not (self.is_zero or other.is_zero) and self.degree != other.degree:
            raise ValidationError("potentials of different degrees")
        degree = other.degree if self.is_zero else self.degree
        return canonicalize(self.rep + other.rep, degree=degree)

    def scale(self, c: Coeff) -> "Potential":
        return Potential(self.quiver, self.rep.scale(c), self.degree)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Potential)
            and self.quiver == other.quiver
            and self.rep == other.rep
        )

    def __hash__(self) -> int:
        return hash(self.rep)

    def __repr__(self) -> str:
        return f"Potential({self.rep!r})"


def canonicalize(f: NcPoly, degree: int | None = None) -> Potential:
    """Rotate every term to its minimal rotation and merge like terms.

    A term whose minimal rotation is reachable with both signs represents a
    2-torsion class and vanishes over the rationals.
    """
    quiver = f.quiver
    terms: dict[Path, Fraction] = {}
    for path, coeff in f.items():
        if not path.is_cycle:
            raise NonCycleTerm(f"term {path!r} has source != target")
        rotations = rotations_with_signs(path)
        best = min(rotations, key=lambda rs: quiver.path_key(rs[0]))[0]
        signs = {s for rotated, s in rotations if rotated == best}
        if len(signs) == 2:
            # the minimal rotation is reachable with both signs: 2-torsion
            continue
        terms[best] = terms.get(best, Fraction(0)) + coeff * signs.pop()
    rep = NcPoly(quiver, terms)
    if degree is None:
        degree = rep.degree() or 0
    elif not rep.is_zero and rep.degree() != degree:
        raise ValidationError(f"potential has degree {rep.degree()}, expected {degree}")
    return Potential(quiver, rep, degree)


def cyclic_derivative(W: Potential, a: Arrow) -> NcPoly:
    """Signed sum over occurrences of ``a`` of the rotated remainder path.

    The sign rotates the prefix before the occurrence past the rest of the
    cycle (occurrence included), matching the splitting map beta; for
    degree-zero quivers every sign is +1.
    """
    quiver = W.quiver
    out: dict[Path, Fraction] = {}
    for path, coeff in W.rep.items():
        if path.is_trivial:
            continue
        word = path.arrows
        total = path.degree
        prefix_degree = 0
        for j, arrow in enumerate(word):
            if arrow == a:
                sign = koszul_sign(prefix_degree, total - prefix_degree)
                rest = word[j + 1:] + word[:j]
                remainder = Path(None, rest) if rest else Path.trivial(a.source)
                out[remainder] = out.get(remainder, Fraction(0)) + coeff * sign
            prefix_degree += arrow.degree
    return NcPoly(quiver, out)


def connes_B(W: Potential) -> HochschildOneChain:
    """Signed one-rotation splitting of every cycle term; alpha kills the result."""
    quiver = W.quiver
    data: dict[tuple[Arrow, Path], Fraction] = {}
    for path, coeff in W.rep.items():
        if path.is_trivial:
            continue
        word = path.arrows
        total = path.degree
        prefix_degree = 0
        for i, arrow in enumerate(word):
            sign = koszul_sign(prefix_degree, total - prefix_degree)
            rest = word[i + 1:] + word[:i]
            tail = Path(None, rest) if rest else Path.trivial(arrow.source)
            key = (arrow, tail)
            data[key] = data.get(key, Fraction(0)) + coeff * sign
            prefix_degree += arrow.degree
    return HochschildOneChain.build(quiver, data)


def supercommutator(f: NcPoly, g: NcPoly) -> NcPoly:
    """[f, g] = fg - (-1)^{deg f * deg g} gf, extended bilinearly over terms."""
    quiver = f.quiver
    out = NcPoly.zero(quiver)
    for p, cp in f.items():
        fp = NcPoly(quiver, {p: cp})
        for q, cq in g.items():
            gq = NcPoly(quiver, {q: cq})
            sign = koszul_sign(p.degree, q.degree)
            out = out + fp * gq - (gq * fp).scale(sign)
    return out


def necklace_check(W: Potential) -> bool:
    """Exact vanishing of sum_a [a, dW/da] over all arrows of the quiver."""
    return necklace_sum(W).is_zero


def necklace_sum(W: Potential) -> NcPoly:
    quiver = W.quiver
    total = NcPoly.zero(quiver)
    for arrow in quiver.arrows:
        a_poly = NcPoly(quiver, {Path.of([arrow]): 1})
        total = total + supercommutator(a_poly, cyclic_derivative(W, arrow))
    return total
