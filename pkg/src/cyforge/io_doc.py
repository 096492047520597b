"""The QP document dialect: JSON with exact string-encoded rationals.

A document carries ``vertices`` (list of names), ``arrows`` (records with
name/source/target/degree) and ``potential`` (records with coef/path).  An
optional ``differential`` section maps arrow names to polynomial records and
turns the document into a dg-algebra description.  Emission is canonical:
declaration order for vertices and arrows, canonical term order for the
potential, rationals as "p/q" or integer strings.  Parsing an emitted
document reproduces the object exactly.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Mapping, Optional

from .core import Arrow, GradedQuiver, NcPoly, Path
from .dg import DgTensorAlgebra
from .errors import ParseError, ValidationError
from .mutation import QuiverWithPotential
from .potential import Potential, canonicalize


def _coef_to_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _coef_from_str(text: Any, where: str) -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"{where}: coef must be a string or integer")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"{where}: bad rational {text!r}: {exc}") from None


def _poly_records(poly: NcPoly) -> list[dict]:
    records = []
    for path, c in poly.items():
        names = [] if path.is_trivial else [a.name for a in path.arrows]
        rec: dict[str, Any] = {"coef": _coef_to_str(c), "path": names}
        if path.is_trivial:
            rec["vertex"] = path.vertex
        records.append(rec)
    return records


def _poly_from_records(quiver: GradedQuiver, records, where: str) -> NcPoly:
    if not isinstance(records, list):
        raise ParseError(f"{where}: expected a list")
    total = NcPoly.zero(quiver)
    for k, rec in enumerate(records):
        ctx = f"{where}[{k}]"
        if not isinstance(rec, Mapping) or "coef" not in rec or "path" not in rec:
            raise ParseError(f"{ctx}: need coef and path fields")
        coef = _coef_from_str(rec["coef"], ctx)
        names = rec["path"]
        if not isinstance(names, list):
            raise ParseError(f"{ctx}: path must be a list of arrow names")
        if not names:
            vertex = rec.get("vertex")
            if vertex is None or not quiver.has_vertex(vertex):
                raise ValidationError(f"{ctx}: empty path needs a valid vertex field")
            total = total + NcPoly.idempotent(quiver, vertex).scale(coef)
            continue
        try:
            arrows = [quiver.arrow(n) for n in names]
            path = Path.of(arrows)
        except ValidationError as exc:
            raise ValidationError(f"{ctx}: {exc}") from None
        total = total + NcPoly(quiver, {path: coef})
    return total


def quiver_to_data(quiver: GradedQuiver) -> dict:
    return {
        "vertices": list(quiver.vertices),
        "arrows": [
            {"name": a.name, "source": a.source, "target": a.target, "degree": a.degree}
            for a in quiver.arrows
        ],
    }


def quiver_from_data(data: Mapping, where: str = "document") -> GradedQuiver:
    if not isinstance(data, Mapping):
        raise ParseError(f"{where}: expected an object")
    vertices = data.get("vertices")
    arrows_data = data.get("arrows", [])
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise ParseError(f"{where}: vertices must be a list of strings")
    if not isinstance(arrows_data, list):
        raise ParseError(f"{where}: arrows must be a list")
    arrows = []
    for k, rec in enumerate(arrows_data):
        ctx = f"{where}.arrows[{k}]"
        if not isinstance(rec, Mapping):
            raise ParseError(f"{ctx}: expected an object")
        try:
            name, source, target = rec["name"], rec["source"], rec["target"]
        except KeyError as exc:
            raise ParseError(f"{ctx}: missing field {exc}") from None
        degree = rec.get("degree", 0)
        if not isinstance(degree, int):
            raise ParseError(f"{ctx}: degree must be an integer")
        arrows.append(Arrow(name, source, target, degree))
    try:
        return GradedQuiver(vertices, arrows)
    except ValidationError as exc:
        raise ValidationError(f"{where}: {exc}") from None


def emit_qp(qp: QuiverWithPotential) -> str:
    doc = quiver_to_data(qp.quiver)
    doc["potential"] = _poly_records(qp.W.rep)
    return json.dumps(doc, indent=2) + "\n"


def parse_qp(text: str) -> QuiverWithPotential:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}: {exc.msg}") from None
    quiver = quiver_from_data(data)
    poly = _poly_from_records(quiver, data.get("potential", []), "potential")
    for path, _ in poly.items():
        if not path.is_cycle:
            raise ValidationError(f"potential term {path!r} is not a cycle")
    return QuiverWithPotential(quiver, canonicalize(poly, degree=0))


def emit_dg(algebra: DgTensorAlgebra, extra: Optional[dict] = None) -> str:
    doc = quiver_to_data(algebra.quiver)
    doc["differential"] = {
        name: _poly_records(poly) for name, poly in algebra.d.items()
    }
    if extra:
        doc.update(extra)
    return json.dumps(doc, indent=2) + "\n"


def parse_dg(text: str) -> DgTensorAlgebra:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}: {exc.msg}") from None
    quiver = quiver_from_data(data)
    d_data = data.get("differential", {})
    if not isinstance(d_data, Mapping):
        raise ParseError("differential: expected an object")
    assignments = {
        name: _poly_from_records(quiver, records, f"differential.{name}")
        for name, records in d_data.items()
    }
    return DgTensorAlgebra(quiver, assignments, defer_check=True)


def potential_to_records(W: Potential) -> list[dict]:
    return _poly_records(W.rep)


def export_dot(qp: QuiverWithPotential) -> str:
    """DOT digraph; arrow degrees become edge labels."""
    lines = ["digraph quiver {"]
    for v in qp.quiver.vertices:
        lines.append(f'  "{v}";')
    for a in qp.quiver.arrows:
        label = a.name if a.degree == 0 else f"{a.name} ({a.degree})"
        lines.append(f'  "{a.source}" -> "{a.target}" [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
