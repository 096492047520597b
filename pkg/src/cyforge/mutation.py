"""DWZ pre-mutation, restricted 2-cycle reduction, vertex deletion.

Pre-mutation at a loop-free vertex i composes every length-2 passage
through i into a fresh arrow, reverses the arrows at i, and corrects the
potential by the canonical cubic terms.  Reduction implements only the
substitution-free part of the trivial-part splitting: a quadratic term
c * u v may be cancelled when one of its arrows occurs nowhere else and
the other occurs at most once per remaining term, which is exactly the
unitriangular substitution u |-> u - complement followed by deleting the
pair.  Anything beyond that needs genuine right-equivalences and is out
of scope.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .core import Arrow, GradedQuiver, NcPoly, Path
from .errors import LoopAtVertex, UnknownVertex, ValidationError
from .potential import Potential, canonicalize


class QuiverWithPotential:
    """Ungraded quiver plus a degree-0 potential in canonical form."""

    def __init__(self, quiver: GradedQuiver, W: Potential):
        if any(a.degree != 0 for a in quiver.arrows):
            raise ValidationError("quivers with potential are ungraded")
        if W.quiver != quiver:
            raise ValidationError("potential lives over a different quiver")
        if not W.is_zero and W.degree != 0:
            raise ValidationError("potential must have degree 0")
        self.quiver = quiver
        self.W = W

    @staticmethod
    def build(quiver: GradedQuiver, terms: Optional[NcPoly] = None) -> "QuiverWithPotential":
        W = canonicalize(terms, degree=0) if terms is not None else Potential.zero(quiver)
        return QuiverWithPotential(quiver, W)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QuiverWithPotential)
            and self.quiver == other.quiver
            and self.W == other.W
        )

    def __repr__(self) -> str:
        return f"QP({self.quiver!r}, W={self.W.rep!r})"


def _fresh_name(base: str, taken: set[str]) -> str:
    if base not in taken:
        return base
    k = 2
    while f"{base}_{k}" in taken:
        k += 1
    return f"{base}_{k}"


def premutate(qp: QuiverWithPotential, i: str) -> QuiverWithPotential:
    """DWZ pre-mutation at vertex i (no reduction applied)."""
    quiver = qp.quiver
    if not quiver.has_vertex(i):
        raise UnknownVertex(f"unknown vertex {i!r}")
    if quiver.loops_at(i):
        raise LoopAtVertex(f"vertex {i!r} carries a loop")

    incoming = [a for a in quiver.arrows if a.target == i]   # beta: l -> i
    outgoing = [a for a in quiver.arrows if a.source == i]   # alpha: i -> j
    incident = {a.name for a in incoming + outgoing}

    taken = {a.name for a in quiver.arrows if a.name not in incident}
    new_arrows: list[Arrow] = []
    reversed_name: dict[str, str] = {}
    composite_name: dict[tuple[str, str], str] = {}

    for a in quiver.arrows:
        if a.name not in incident:
            new_arrows.append(a)
    for a in incoming + outgoing:
        name = _fresh_name(a.name + "*", taken)
        taken.add(name)
        reversed_name[a.name] = name
        new_arrows.append(Arrow(name, a.target, a.source, 0))
    for alpha_ in outgoing:
        for beta_ in incoming:
            name = _fresh_name(f"[{alpha_.name}.{beta_.name}]", taken)
            taken.add(name)
            composite_name[(alpha_.name, beta_.name)] = name
            # the composite alpha o beta runs l -> j
            new_arrows.append(Arrow(name, beta_.source, alpha_.target, 0))

    new_quiver = GradedQuiver(quiver.vertices, new_arrows)

    # [W]: rewrite every passage through i as the composite arrow.  Rotate
    # each term so the seam does not split a passage, then scan-replace.
    rewritten: dict[Path, Fraction] = {}
    for path, coeff in qp.W.rep.items():
        word = list(path.arrows)
        if word:
            if i not in {a.source for a in word} | {a.target for a in word}:
                new_word = [new_quiver.arrow(a.name) for a in word]
                p = Path.of(new_word)
                rewritten[p] = rewritten.get(p, Fraction(0)) + coeff
                continue
            for _ in range(len(word)):
                if not (word[0].target == i and word[-1].source == i):
                    break
                word = word[1:] + word[:1]
            else:
                raise ValidationError(
                    f"term {path!r} transits {i!r} at every vertex; cannot rewrite"
                )
            out: list[Arrow] = []
            k = 0
            while k < len(word):
                a = word[k]
                if a.source == i:
                    b = word[k + 1]  # the cycle must continue through i
                    comp = composite_name[(a.name, b.name)]
                    out.append(new_quiver.arrow(comp))
                    k += 2
                else:
                    out.append(new_quiver.arrow(a.name))
                    k += 1
            p = Path.of(out)
            rewritten[p] = rewritten.get(p, Fraction(0)) + coeff
        else:
            # a trivial cycle has no composition through i to rewrite
            p = Path.trivial(path.vertex)
            rewritten[p] = rewritten.get(p, Fraction(0)) + coeff

    correction = NcPoly.zero(new_quiver)
    for alpha_ in outgoing:
        for beta_ in incoming:
            word = [
                new_quiver.arrow(composite_name[(alpha_.name, beta_.name)]),
                new_quiver.arrow(reversed_name[beta_.name]),
                new_quiver.arrow(reversed_name[alpha_.name]),
            ]
            correction = correction + NcPoly(new_quiver, {Path.of(word): 1})

    W_new = canonicalize(NcPoly(new_quiver, rewritten) + correction, degree=0)
    return QuiverWithPotential(new_quiver, W_new)


def _cancel_pair(qp: QuiverWithPotential) -> Optional[tuple[QuiverWithPotential, tuple[str, str]]]:
    """Find and cancel one removable 2-cycle term; None when nothing fires.

    A quadratic term c * u v is removable when no other term contains u or v
    more than once, and none contains both.  Rotating the u-terms (resp.
    v-terms) as u*A (resp. v*B), the unitriangular substitution
    u |-> u - B-complement, v |-> v - A-complement is a right-equivalence
    taking W to c*uv + rest - (1/c) A B; splitting off the trivial pair
    leaves rest - (1/c) A B over the quiver without u and v.
    """
    from .potential import cyclic_derivative

    W = qp.W
    quiver = qp.quiver
    for path, coeff in W.rep.items():
        if len(path.arrows) != 2:
            continue
        u, v = path.arrows
        if u.name == v.name:
            continue
        others = NcPoly(quiver, {p: c for p, c in W.rep.items() if p != path})
        ok = True
        for p, _c in others.items():
            count_u = sum(1 for a in p.arrows if a.name == u.name)
            count_v = sum(1 for a in p.arrows if a.name == v.name)
            if count_u > 1 or count_v > 1 or (count_u and count_v):
                ok = False
                break
        if not ok:
            continue
        rest_potential = Potential(quiver, others, 0)
        A = cyclic_derivative(rest_potential, u)
        B = cyclic_derivative(rest_potential, v)
        correction = (A * B).scale(Fraction(-1) / coeff)
        removed = {u.name, v.name}
        new_arrows = [a for a in quiver.arrows if a.name not in removed]
        new_quiver = GradedQuiver(quiver.vertices, new_arrows)
        surviving: dict[Path, Fraction] = {}
        for p, c in (others + correction).items():
            if {a.name for a in p.arrows} & removed:
                continue
            q = Path.of([new_quiver.arrow(a.name) for a in p.arrows]) if p.arrows else Path.trivial(p.vertex)
            surviving[q] = surviving.get(q, Fraction(0)) + c
        W_new = canonicalize(NcPoly(new_quiver, surviving), degree=0)
        return QuiverWithPotential(new_quiver, W_new), (u.name, v.name)
    return None


def reduce_trivial(qp: QuiverWithPotential) -> tuple[QuiverWithPotential, list[tuple[str, str]]]:
    """Repeatedly cancel removable 2-cycle terms; returns the removed pairs."""
    removed: list[tuple[str, str]] = []
    while True:
        step = _cancel_pair(qp)
        if step is None:
            return qp, removed
        qp, pair = step
        removed.append(pair)


def delete_vertex(qp: QuiverWithPotential, i: str) -> QuiverWithPotential:
    """Remove a vertex, its incident arrows, and every potential term through it."""
    quiver = qp.quiver
    if not quiver.has_vertex(i):
        raise UnknownVertex(f"unknown vertex {i!r}")
    new_quiver = GradedQuiver(
        [v for v in quiver.vertices if v != i],
        [a for a in quiver.arrows if a.source != i and a.target != i],
    )
    surviving: dict[Path, Fraction] = {}
    for path, coeff in qp.W.rep.items():
        if path.is_trivial:
            if path.vertex == i:
                continue
            surviving[Path.trivial(path.vertex)] = coeff
            continue
        visits = {a.source for a in path.arrows} | {a.target for a in path.arrows}
        if i in visits:
            continue
        surviving[Path.of([new_quiver.arrow(a.name) for a in path.arrows])] = coeff
    return QuiverWithPotential(new_quiver, canonicalize(NcPoly(new_quiver, surviving), degree=0))


@dataclass
class MutationStep:
    vertex: str
    reduced: bool
    removed_pairs: list[tuple[str, str]]
    result: QuiverWithPotential


@dataclass
class MutationHistory:
    """Session state: the initial QP and the replayable step list."""

    initial: QuiverWithPotential
    steps: list[MutationStep] = field(default_factory=list)

    @property
    def current(self) -> QuiverWithPotential:
        return self.steps[-1].result if self.steps else self.initial

    def mutate(self, vertex: str, reduce: bool = False) -> QuiverWithPotential:
        qp = premutate(self.current, vertex)
        pairs: list[tuple[str, str]] = []
        if reduce:
            qp, pairs = reduce_trivial(qp)
        self.steps.append(MutationStep(vertex, reduce, pairs, qp))
        return qp

    def undo(self) -> QuiverWithPotential:
        if self.steps:
            self.steps.pop()
        return self.current

    def replay(self) -> QuiverWithPotential:
        """Recompute the current QP from the initial one; must match exactly."""
        qp = self.initial
        for step in self.steps:
            qp = premutate(qp, step.vertex)
            if step.reduced:
                qp, _ = reduce_trivial(qp)
        return qp
