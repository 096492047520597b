"""The small complex of a path algebra: per-length HH0, HH1, HC0, HC1.

For a tensor algebra with zero differential the small complex is graded by
path length, so each slice is a finite exact linear-algebra problem:

    0 -> span{ v (x) u : vu a cycle } --alpha--> span{ cycles } -> 0

with alpha(v (x) u) = vu - (-1)^{deg v deg u} uv and beta the signed
one-rotation splitting going the other way.  Over the rationals HC1 is
ker(alpha)/im(beta) sliceswise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from .core import Arrow, GradedQuiver, NcPoly, Path, koszul_sign
from .errors import ValidationError
from .linalg import Echelon, SparseRow
from .potential import HochschildOneChain


@dataclass(frozen=True)
class CyclicChain0:
    """Plain sum of cycles, no cyclic identification applied."""

    quiver: GradedQuiver
    poly: NcPoly

    @property
    def is_zero(self) -> bool:
        return self.poly.is_zero


def alpha(ch: HochschildOneChain) -> CyclicChain0:
    """Linear extension of v (x) u |-> vu - (-1)^{deg v deg u} uv."""
    quiver = ch.quiver
    out = NcPoly.zero(quiver)
    for arrow, tail, coeff in ch.entries:
        v = NcPoly(quiver, {Path.of([arrow]): 1})
        u = NcPoly(quiver, {tail: 1}) if not tail.is_trivial else NcPoly.idempotent(quiver, tail.vertex)
        sign = koszul_sign(arrow.degree, tail.degree)
        out = out + (v * u - (u * v).scale(sign)).scale(coeff)
    return CyclicChain0(quiver, out)


def beta(ch: CyclicChain0) -> HochschildOneChain:
    """Signed one-rotation splitting of every cycle; trivial paths map to 0."""
    quiver = ch.quiver
    data: dict[tuple[Arrow, Path], Fraction] = {}
    for path, coeff in ch.poly.items():
        if not path.is_cycle:
            raise ValidationError(f"{path!r} is not a cycle")
        if path.is_trivial:
            continue
        word = path.arrows
        total = path.degree
        prefix = 0
        for i, arrow in enumerate(word):
            sign = koszul_sign(prefix, total - prefix)
            rest = word[i + 1:] + word[:i]
            tail = Path(None, rest) if rest else Path.trivial(arrow.source)
            key = (arrow, tail)
            data[key] = data.get(key, Fraction(0)) + coeff * sign
            prefix += arrow.degree
    return HochschildOneChain.build(quiver, data)


@dataclass(frozen=True)
class SmallComplexSlice:
    """Length-l slice of the small cyclic complex with exact matrices.

    ``alpha_rows[i]`` is the image of the i-th pair basis element in cycle
    coordinates; ``beta_rows[j]`` is the image of the j-th cycle in pair
    coordinates.  alpha o beta = 0 holds exactly.
    """

    length: int
    cycle_basis: tuple[Path, ...]
    pair_basis: tuple[tuple[Arrow, Path], ...]
    alpha_rows: tuple[SparseRow, ...]
    beta_rows: tuple[SparseRow, ...]


def pair_basis(quiver: GradedQuiver, length: int) -> list[tuple[Arrow, Path]]:
    """Basis of (Q (x) A) (x)_{R^e} R in total length ``length``."""
    if length == 0:
        return []
    out = []
    tails = quiver.paths_of_length(length - 1)
    for arrow in quiver.arrows:
        for tail in tails:
            if tail.target == arrow.source and tail.source == arrow.target:
                out.append((arrow, tail))
    return out


def small_complex_slice(quiver: GradedQuiver, length: int) -> SmallComplexSlice:
    cycles = quiver.cycles_of_length(length)
    pairs = pair_basis(quiver, length)
    cycle_index = {p: i for i, p in enumerate(cycles)}
    pair_index = {k: i for i, k in enumerate(pairs)}

    alpha_rows = []
    for arrow, tail in pairs:
        chain = HochschildOneChain.build(quiver, {(arrow, tail): 1})
        row: SparseRow = {}
        for path, c in alpha(chain).poly.items():
            row[cycle_index[path]] = row.get(cycle_index[path], Fraction(0)) + c
        alpha_rows.append({k: v for k, v in row.items() if v})

    beta_rows = []
    for cyc in cycles:
        chain0 = CyclicChain0(quiver, NcPoly(quiver, {cyc: 1}))
        row = {}
        for arrow, tail, c in beta(chain0).entries:
            idx = pair_index[(arrow, tail)]
            row[idx] = row.get(idx, Fraction(0)) + c
        beta_rows.append({k: v for k, v in row.items() if v})

    return SmallComplexSlice(length, tuple(cycles), tuple(pairs), tuple(alpha_rows), tuple(beta_rows))


def _rank(rows) -> int:
    ech = Echelon()
    for row in rows:
        ech.add(dict(row))
    return ech.rank


def hh_dims(quiver: GradedQuiver, max_len: int) -> list[tuple[int, int]]:
    """Per-length (dim HH0, dim HH1) of the path algebra, exact over Q."""
    if max_len < 0:
        raise ValidationError("max_len must be >= 0")
    out = []
    for length in range(max_len + 1):
        sl = small_complex_slice(quiver, length)
        r = _rank(sl.alpha_rows)
        hh0 = len(sl.cycle_basis) - r
        hh1 = len(sl.pair_basis) - r
        out.append((hh0, hh1))
    return out


def hc_dims(quiver: GradedQuiver, max_len: int) -> list[tuple[int, int]]:
    """Per-length (dim HC0, dim HC1): coker(alpha) and ker(alpha)/im(beta)."""
    if max_len < 0:
        raise ValidationError("max_len must be >= 0")
    out = []
    for length in range(max_len + 1):
        sl = small_complex_slice(quiver, length)
        r_alpha = _rank(sl.alpha_rows)
        r_beta = _rank(sl.beta_rows)
        hc0 = len(sl.cycle_basis) - r_alpha
        hc1 = (len(sl.pair_basis) - r_alpha) - r_beta
        out.append((hc0, hc1))
    return out
