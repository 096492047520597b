"""Exact arithmetic for paths and noncommutative polynomials over a graded quiver.

The base ring is the semisimple ring with one idempotent per vertex; all
coefficients are exact rationals (:class:`fractions.Fraction`).  Paths are
stored function-style: the word ``[v1, ..., vn]`` denotes the composite in
which ``vn`` is applied first, so ``source(path) = source(vn)`` and
``target(path) = target(v1)``.  Every value here is immutable and safe to
share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Union

from .errors import ValidationError

Coeff = Union[Fraction, int]


def koszul_sign(p: int, q: int) -> int:
    """Sign picked up when homogeneous factors of degrees p and q transpose."""
    return -1 if (p * q) % 2 else 1


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str
    degree: int = 0

    def __repr__(self) -> str:
        deg = f", deg {self.degree}" if self.degree else ""
        return f"Arrow({self.name}: {self.source}->{self.target}{deg})"


@dataclass(frozen=True)
class Path:
    """Either a trivial path at a vertex or a composable word of arrows.

    ``arrows`` is empty exactly for trivial paths, in which case ``vertex``
    names the base point.
    """

    vertex: Optional[str]
    arrows: tuple[Arrow, ...]

    @staticmethod
    def trivial(vertex: str) -> "Path":
        return Path(vertex, ())

    @staticmethod
    def of(arrows: Sequence[Arrow]) -> "Path":
        arrows = tuple(arrows)
        if not arrows:
            raise ValidationError("a nonempty arrow sequence is required; use Path.trivial")
        for left, right in zip(arrows, arrows[1:]):
            if left.source != right.target:
                raise ValidationError(
                    f"arrows {left.name} and {right.name} do not compose: "
                    f"{left.source} != {right.target}"
                )
        return Path(None, arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def __len__(self) -> int:
        return len(self.arrows)

    @property
    def source(self) -> str:
        return self.vertex if self.is_trivial else self.arrows[-1].source  # type: ignore[return-value]

    @property
    def target(self) -> str:
        return self.vertex if self.is_trivial else self.arrows[0].target  # type: ignore[return-value]

    @property
    def degree(self) -> int:
        return sum(a.degree for a in self.arrows)

    @property
    def is_cycle(self) -> bool:
        return self.source == self.target

    def __repr__(self) -> str:
        if self.is_trivial:
            return f"e_{self.vertex}"
        return ".".join(a.name for a in self.arrows)


def compose(p: Path, q: Path) -> Optional[Path]:
    """Composite with ``q`` applied first; ``None`` when endpoints mismatch."""
    if p.source != q.target:
        return None
    if p.is_trivial:
        return q
    if q.is_trivial:
        return p
    return Path(None, p.arrows + q.arrows)


class GradedQuiver:
    """Finite vertex set plus graded arrows; declaration order is the total order.

    The declaration order of arrows canonicalizes every downstream choice:
    term ordering of polynomials, minimal rotations of cycles, and document
    serialization.
    """

    def __init__(self, vertices: Iterable[str], arrows: Iterable[Arrow]):
        self.vertices: tuple[str, ...] = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValidationError("duplicate vertex names")
        self.arrows: tuple[Arrow, ...] = tuple(arrows)
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValidationError("duplicate arrow names")
        vset = set(self.vertices)
        for a in self.arrows:
            if a.source not in vset or a.target not in vset:
                raise ValidationError(f"arrow {a.name} references unknown vertices")
        self._arrow_index = {a.name: i for i, a in enumerate(self.arrows)}
        self._vertex_index = {v: i for i, v in enumerate(self.vertices)}
        self._by_name = {a.name: a for a in self.arrows}
        self._path_cache: dict[int, tuple[Path, ...]] = {}

    def arrow(self, name: str) -> Arrow:
        try:
            return self._by_name[name]
        except KeyError:
            raise ValidationError(f"unknown arrow {name!r}") from None

    def has_vertex(self, v: str) -> bool:
        return v in self._vertex_index

    def arrow_order(self, a: Arrow) -> int:
        return self._arrow_index[a.name]

    def path_key(self, p: Path):
        """Total order on paths: length, then lexicographic in arrow order."""
        if p.is_trivial:
            return (0, (self._vertex_index[p.vertex],))
        return (len(p.arrows), tuple(self._arrow_index[a.name] for a in p.arrows))

    def trivial_paths(self) -> list[Path]:
        return [Path.trivial(v) for v in self.vertices]

    def loops_at(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v and a.target == v]

    def arrows_from(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def arrows_into(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def paths_of_length(self, length: int) -> list[Path]:
        """All paths of the exact length, in canonical order (memoized)."""
        cached = self._path_cache.get(length)
        if cached is not None:
            return list(cached)
        if length == 0:
            paths = self.trivial_paths()
        else:
            words = [(a,) for a in self.arrows]
            for _ in range(length - 1):
                words = [w + (b,) for w in words for b in self.arrows_from_target(w[-1].source)]
            paths = [Path(None, w) for w in words]
            paths.sort(key=self.path_key)
        self._path_cache[length] = tuple(paths)
        return paths

    def arrows_from_target(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def cycles_of_length(self, length: int) -> list[Path]:
        return [p for p in self.paths_of_length(length) if p.is_cycle]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GradedQuiver)
            and self.vertices == other.vertices
            and self.arrows == other.arrows
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.arrows))

    def __repr__(self) -> str:
        return f"GradedQuiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"


class NcPoly:
    """Finite rational linear combination of paths of one quiver.

    Zero coefficients are never stored.  Instances are immutable; arithmetic
    returns fresh objects.
    """

    __slots__ = ("quiver", "_terms")

    def __init__(self, quiver: GradedQuiver, terms: Mapping[Path, Coeff] | None = None):
        self.quiver = quiver
        clean: dict[Path, Fraction] = {}
        for path, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[path] = c
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(quiver: GradedQuiver) -> "NcPoly":
        return NcPoly(quiver)

    @staticmethod
    def unit(quiver: GradedQuiver) -> "NcPoly":
        """The two-sided unit: the sum of all trivial paths."""
        return NcPoly(quiver, {p: 1 for p in quiver.trivial_paths()})

    @staticmethod
    def idempotent(quiver: GradedQuiver, vertex: str) -> "NcPoly":
        if not quiver.has_vertex(vertex):
            raise ValidationError(f"unknown vertex {vertex!r}")
        return NcPoly(quiver, {Path.trivial(vertex): 1})

    @staticmethod
    def generator(quiver: GradedQuiver, name: str) -> "NcPoly":
        return NcPoly(quiver, {Path.of([quiver.arrow(name)]): 1})

    @staticmethod
    def from_word(quiver: GradedQuiver, names: Sequence[str], coeff: Coeff = 1) -> "NcPoly":
        if not names:
            raise ValidationError("empty word; use NcPoly.idempotent")
        return NcPoly(quiver, {Path.of([quiver.arrow(n) for n in names]): coeff})

    # -- mapping view ------------------------------------------------------

    def items(self) -> list[tuple[Path, Fraction]]:
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda kv: self.quiver.path_key(kv[0]))

    def coeff(self, path: Path) -> Fraction:
        return self._terms.get(path, Fraction(0))

    def __iter__(self) -> Iterator[Path]:
        return iter(sorted(self._terms, key=self.quiver.path_key))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def is_homogeneous(self) -> bool:
        degrees = {p.degree for p in self._terms}
        return len(degrees) <= 1

    def degree(self) -> Optional[int]:
        """Common degree of all terms, or None for the zero polynomial."""
        degrees = {p.degree for p in self._terms}
        if not degrees:
            return None
        if len(degrees) > 1:
            raise ValidationError(f"inhomogeneous polynomial has degrees {sorted(degrees)}")
        return degrees.pop()

    # -- arithmetic --------------------------------------------------------

    def _require_same_quiver(self, other: "NcPoly") -> None:
        if self.quiver is not other.quiver and self.quiver != other.quiver:
            raise ValidationError("operands live over different quivers")

    def __add__(self, other: "NcPoly") -> "NcPoly":
        self._require_same_quiver(other)
        terms = dict(self._terms)
        for path, c in other._terms.items():
            terms[path] = terms.get(path, Fraction(0)) + c
        return NcPoly(self.quiver, terms)

    def __sub__(self, other: "NcPoly") -> "NcPoly":
        return self + (-other)

    def __neg__(self) -> "NcPoly":
        return NcPoly(self.quiver, {p: -c for p, c in self._terms.items()})

    def scale(self, c: Coeff) -> "NcPoly":
        c = Fraction(c)
        return NcPoly(self.quiver, {p: c * v for p, v in self._terms.items()})

    def __mul__(self, other: "NcPoly") -> "NcPoly":
        """Bilinear extension of path composition; incomposable pairs give 0."""
        self._require_same_quiver(other)
        terms: dict[Path, Fraction] = {}
        for p, cp in self._terms.items():
            for q, cq in other._terms.items():
                pq = compose(p, q)
                if pq is None:
                    continue
                terms[pq] = terms.get(pq, Fraction(0)) + cp * cq
        return NcPoly(self.quiver, terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NcPoly)
            and self.quiver == other.quiver
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.quiver, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for path, c in self.items():
            parts.append(f"{c}·{path!r}" if c != 1 else f"{path!r}")
        return " + ".join(parts)


def mul(f: NcPoly, g: NcPoly) -> NcPoly:
    return f * g
