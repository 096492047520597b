"""Graded tensor algebras with a differential given on generators.

The differential is extended to words by the graded Leibniz rule

    d(v1 ... vn) = sum_i (-1)^{deg(v1...v_{i-1})} v1 ... d(vi) ... vn

and squares to zero iff it does so on every generator (d^2 is again a
derivation, so checking generators is exact and complete).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .core import GradedQuiver, NcPoly, Path
from .errors import ValidationError


class Differential:
    """Degree +1 assignment on generators, validated against endpoints."""

    def __init__(self, quiver: GradedQuiver, assignments: Mapping[str, NcPoly] | None = None):
        self.quiver = quiver
        self._d: dict[str, NcPoly] = {}
        for name, poly in (assignments or {}).items():
            arrow = quiver.arrow(name)
            for path, _ in poly.items():
                if path.source != arrow.source or path.target != arrow.target:
                    raise ValidationError(
                        f"d({name}) term {path!r} has endpoints "
                        f"{path.source}->{path.target}, expected {arrow.source}->{arrow.target}"
                    )
                if path.degree != arrow.degree + 1:
                    raise ValidationError(
                        f"d({name}) term {path!r} has degree {path.degree}, "
                        f"expected {arrow.degree + 1}"
                    )
            if poly:
                self._d[name] = poly

    def of_arrow(self, name: str) -> NcPoly:
        return self._d.get(name, NcPoly.zero(self.quiver))

    def items(self) -> list[tuple[str, NcPoly]]:
        order = {a.name: i for i, a in enumerate(self.quiver.arrows)}
        return sorted(self._d.items(), key=lambda kv: order[kv[0]])

    @property
    def is_zero(self) -> bool:
        return not self._d


@dataclass(frozen=True)
class D2Report:
    passed: bool
    generator_count: int
    failures: tuple[tuple[str, NcPoly], ...] = ()

    def first_failure(self) -> Optional[tuple[str, NcPoly]]:
        return self.failures[0] if self.failures else None


class DgTensorAlgebra:
    """A graded quiver together with a differential on generators.

    Construction verifies d^2 = 0 on every generator unless ``defer_check``
    is set (used to build deliberately broken algebras in diagnostics).
    """

    def __init__(
        self,
        quiver: GradedQuiver,
        differential: Differential | Mapping[str, NcPoly] | None = None,
        *,
        defer_check: bool = False,
    ):
        self.quiver = quiver
        if isinstance(differential, Differential):
            if differential.quiver != quiver:
                raise ValidationError("differential defined over a different quiver")
            self.d = differential
        else:
            self.d = Differential(quiver, differential)
        if not defer_check:
            report = check_d_squared(self)
            if not report.passed:
                name, residual = report.failures[0]
                raise ValidationError(f"d^2 != 0 at generator {name}: {residual!r}")

    def d_of(self, f: NcPoly) -> NcPoly:
        return leibniz_extend(self, f)


def leibniz_extend(algebra: DgTensorAlgebra, f: NcPoly) -> NcPoly:
    """Apply the differential to an arbitrary polynomial."""
    quiver = algebra.quiver
    out = NcPoly.zero(quiver)
    for path, coeff in f.items():
        if path.is_trivial:
            continue
        prefix_degree = 0
        for i, arrow in enumerate(path.arrows):
            dv = algebra.d.of_arrow(arrow.name)
            if dv:
                left = (
                    NcPoly(quiver, {Path.of(path.arrows[:i]): 1})
                    if i
                    else NcPoly.idempotent(quiver, arrow.target)
                )
                right = (
                    NcPoly(quiver, {Path.of(path.arrows[i + 1:]): 1})
                    if i + 1 < len(path.arrows)
                    else NcPoly.idempotent(quiver, arrow.source)
                )
                sign = -1 if prefix_degree % 2 else 1
                out = out + (left * dv * right).scale(sign * coeff)
            prefix_degree += arrow.degree
    return out


def check_d_squared(algebra: DgTensorAlgebra) -> D2Report:
    """Exact evaluation of d(d(v)) for every generator; reports residuals."""
    failures = []
    for arrow in algebra.quiver.arrows:
        residual = leibniz_extend(algebra, algebra.d.of_arrow(arrow.name))
        if not residual.is_zero:
            failures.append((arrow.name, residual))
    return D2Report(not failures, len(algebra.quiver.arrows), tuple(failures))


def check_filtration_triangular(algebra: DgTensorAlgebra) -> Optional[list[set[str]]]:
    """Greedy stratification of generators by the support of their differentials.

    Returns cumulative layers F_0 <= ... <= F_N with d(F_p) supported on words
    in F_{p-1}, or None when the self-referencing differential admits no
    finite stratification.
    """
    known: set[str] = set()
    layers: list[set[str]] = []
    remaining = {a.name for a in algebra.quiver.arrows}
    while remaining:
        addable = set()
        for name in remaining:
            support: set[str] = set()
            for path, _ in algebra.d.of_arrow(name).items():
                support.update(a.name for a in path.arrows)
            if support <= known:
                addable.add(name)
        if not addable:
            return None
        known |= addable
        layers.append(set(known))
        remaining -= addable
    if not layers:
        layers.append(set())
    return layers
