"""Reduced simplicial homology, graded Betti numbers, depth and Hilbert series."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from . import guards
from .complex import SimplicialComplex, maximal_sets, popcount, submasks
from .errors import NotCohenMacaulay
from .fields import FieldSpec
from .linalg import rank, rank_gf2


@dataclass(frozen=True)
class HomologyProfile:
    """``dims[i + 1] = dim H~_i`` for ``i = -1 .. dim``."""

    dims: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        idx = i + 1
        if 0 <= idx < len(self.dims):
            return self.dims[idx]
        return 0

    @property
    def top(self) -> int:
        return len(self.dims) - 2

    def euler(self) -> int:
        return sum(d if idx % 2 else -d for idx, d in enumerate(self.dims))

    def nonzero(self) -> list[int]:
        return [idx - 1 for idx, d in enumerate(self.dims) if d]


def _faces_by_size(facets: tuple[int, ...]) -> list[list[int]]:
    faces: set[int] = set()
    for f in facets:
        faces.update(submasks(f))
    top = max(popcount(f) for f in facets)
    buckets: list[list[int]] = [[] for _ in range(top + 1)]
    for face in faces:
        buckets[popcount(face)].append(face)
    for b in buckets:
        b.sort()
    return buckets


def _boundary_ranks(buckets: list[list[int]], char: int) -> list[int]:
    """``ranks[s]`` is the rank of the boundary map out of the size-``s`` chains."""
    ranks = [0] * (len(buckets) + 1)
    field_ = FieldSpec.rationals() if char == 0 else FieldSpec.gf(char)
    for s in range(1, len(buckets)):
        index = {face: i for i, face in enumerate(buckets[s - 1])}
        if char == 2:
            cols = []
            for face in buckets[s]:
                m = 0
                rest = face
                while rest:
                    low = rest & -rest
                    m |= 1 << index[face ^ low]
                    rest ^= low
                cols.append(m)
            ranks[s] = rank_gf2(cols)
        else:
            cols = []
            for face in buckets[s]:
                col = {}
                sign = 1
                rest = face
                while rest:
                    low = rest & -rest
                    col[index[face ^ low]] = sign
                    sign = -sign
                    rest ^= low
                cols.append(col)
            ranks[s] = rank(cols, field_)
    return ranks


@lru_cache(maxsize=1 << 18)
def _homology(facets: tuple[int, ...], char: int) -> tuple[int, ...]:
    buckets = _faces_by_size(facets)
    ranks = _boundary_ranks(buckets, char)
    return tuple(len(buckets[s]) - ranks[s] - ranks[s + 1] for s in range(len(buckets)))


def reduced_homology(cx: SimplicialComplex, field: FieldSpec) -> HomologyProfile:
    return HomologyProfile(_homology(tuple(sorted(cx.facets)), field.characteristic))


def homology_of_facets(facets: tuple[int, ...], field: FieldSpec) -> HomologyProfile:
    """Same as :func:`reduced_homology` for a sorted facet tuple."""
    return HomologyProfile(_homology(facets, field.characteristic))


# -- Betti tables ----------------------------------------------------------


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers ``beta[i, j]`` of ``S/I``; zero entries are omitted."""

    field: FieldSpec
    entries: dict = dc_field(hash=False)

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: dict[int, dict[int, int]]) -> "BettiTable":
        """Build from the diagram layout ``{row: {column: value}}`` (row = j - i)."""
        entries = {}
        for r, cols in rows.items():
            for i, b in cols.items():
                if b:
                    entries[(i, i + r)] = b
        return cls(field, entries)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.entries == other.entries

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    @property
    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    @property
    def regularity(self) -> int:
        return max(j - i for i, j in self.entries)

    def rows(self) -> dict[int, dict[int, int]]:
        out: dict[int, dict[int, int]] = {}
        for (i, j), b in sorted(self.entries.items()):
            out.setdefault(j - i, {})[i] = b
        return dict(sorted(out.items()))

    def column(self, i: int) -> dict[int, int]:
        """``{row: value}`` of homological degree ``i``."""
        return {j - i: b for (ii, j), b in sorted(self.entries.items()) if ii == i}

    def total(self, i: int) -> int:
        return sum(b for (ii, _), b in self.entries.items() if ii == i)

    def render(self) -> str:
        pd = self.projective_dimension
        reg = self.regularity
        rows = self.rows()
        cells = [[str(rows.get(r, {}).get(i, "-")) for i in range(pd + 1)] for r in range(reg + 1)]
        width = max([len(str(pd))] + [len(c) for row in cells for c in row])
        label_w = len(str(reg))
        header = " " * label_w + " | " + " ".join(f"{i:>{width}}" for i in range(pd + 1))
        rule = "-" * (label_w + 1) + "+" + "-" * (len(header) - label_w - 2)
        lines = [header, rule]
        for r, row in enumerate(cells):
            lines.append(f"{r:>{label_w}} | " + " ".join(f"{c:>{width}}" for c in row))
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "field": str(self.field),
            "pd": self.projective_dimension,
            "rows": [
                {"regdeg": r, "cols": {str(i): b for i, b in cols.items()}}
                for r, cols in self.rows().items()
            ],
        }


def hochster_betti(cx: SimplicialComplex, field: FieldSpec, guard_n: int | None = None) -> BettiTable:
    """Graded Betti numbers of ``S/I_cx`` via Hochster's formula."""
    guards.check("hochster_n", cx.n, guard_n)
    char = field.characteristic
    verts = cx.existing_vertices
    memo: dict[int, tuple[int, ...]] = {}
    entries: dict[tuple[int, int], int] = {}
    for w in range(1 << cx.n):
        key = w & verts
        dims = memo.get(key)
        if dims is None:
            facets = tuple(sorted(maximal_sets(f & key for f in cx.facets)))
            dims = memo[key] = _homology(facets, char)
        j = popcount(w)
        for idx, d in enumerate(dims):
            if d:
                i = j - idx  # homological degree for H~_{idx-1}
                entries[(i, j)] = entries.get((i, j), 0) + d
    return BettiTable(field, entries)


@dataclass(frozen=True)
class DepthReport:
    depth: int
    dim: int
    cohen_macaulay: bool


def depth_report(cx: SimplicialComplex, field: FieldSpec, guard_n: int | None = None) -> DepthReport:
    """Depth of ``K[cx]`` by Auslander-Buchsbaum from the Betti table."""
    table = hochster_betti(cx, field, guard_n)
    depth = cx.n - table.projective_dimension
    dim = cx.dim + 1
    return DepthReport(depth, dim, depth == dim)


def is_level(cx: SimplicialComplex, field: FieldSpec) -> bool:
    table = hochster_betti(cx, field)
    if cx.n - table.projective_dimension != cx.dim + 1:
        raise NotCohenMacaulay("levelness is only defined here for Cohen-Macaulay complexes")
    return len(table.column(table.projective_dimension)) == 1


# -- Hilbert series ----------------------------------------------------------


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return out


def _one_minus_t_pow(e: int) -> list[int]:
    out = [1]
    for _ in range(e):
        out = _poly_mul(out, [1, -1])
    return out


def _trim(p: list[int]) -> tuple[int, ...]:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


@dataclass(frozen=True)
class HilbertSeries:
    """``numerator(t) / (1 - t)^denom_exp`` in lowest terms."""

    numerator: tuple[int, ...]
    denom_exp: int

    @classmethod
    def reduced(cls, numerator: list[int], denom_exp: int) -> "HilbertSeries":
        num = list(numerator) or [0]
        while denom_exp > 0 and sum(num) == 0 and any(num):
            # divide by (1 - t)
            q = []
            acc = 0
            for c in num[:-1]:
                acc += c
                q.append(acc)
            num = q or [0]
            denom_exp -= 1
        if not any(num):
            return cls((0,), 0)
        return cls(_trim(num), denom_exp)

    @classmethod
    def from_terms(cls, terms) -> "HilbertSeries":
        """Sum of ``t^a / (1 - t)^b`` over ``(a, b)`` pairs."""
        terms = list(terms)
        if not terms:
            return cls((0,), 0)
        d = max(b for _, b in terms)
        num = [0]
        for a, b in terms:
            num = _poly_add(num, [0] * a + _one_minus_t_pow(d - b))
        return cls.reduced(num, d)

    def __str__(self):
        parts = []
        for i, c in enumerate(self.numerator):
            if c:
                mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
                coef = str(c) if (c != 1 or i == 0) else ""
                parts.append(f"{coef}{mono}")
        num = " + ".join(parts) or "0"
        return f"({num})/(1-t)^{self.denom_exp}" if self.denom_exp else num


def hilbert_series(cx: SimplicialComplex) -> HilbertSeries:
    """``sum_i f_{i-1} t^i / (1 - t)^i`` reduced to lowest terms."""
    d = cx.dim + 1
    num = [0]
    for size, count in enumerate(cx.f_vector()):
        term = [0] * size + _one_minus_t_pow(d - size)
        num = _poly_add(num, [count * c for c in term])
    return HilbertSeries.reduced(num, d)
