"""Finite simplicial complexes on a ground set [n], encoded with bitmasks.

A face is an ``int`` whose bit ``v - 1`` is set iff vertex ``v`` belongs to
it.  Vertex labels are 1-based everywhere in the public API.
"""

from __future__ import annotations

import json
from functools import cached_property
from typing import Iterable, Iterator, Union

from .errors import (
    ApexExists,
    DimensionOutOfRange,
    EmptyInput,
    NotAFace,
    ParseError,
    VertexOutOfRange,
)

FaceLike = Union[int, Iterable[int]]

# Above this many faces the face set is not materialised.
FACE_SET_LIMIT = 1 << 22


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def face_key(mask: int) -> tuple[int, ...]:
    """Sort key giving the lexicographic order on sorted vertex tuples."""
    return vertices_of(mask)


def submasks(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def maximal_sets(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal members of ``masks`` (duplicates removed)."""
    kept: list[int] = []
    for m in sorted(set(masks), key=popcount, reverse=True):
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return kept


def minimal_sets(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal members of ``masks`` (duplicates removed)."""
    kept: list[int] = []
    for m in sorted(set(masks), key=popcount):
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    return kept


def full_mask(n: int) -> int:
    return (1 << n) - 1


class SimplicialComplex:
    """An immutable simplicial complex on [n] stored by its facets.

    The void complex (no faces at all) is not representable; the complex
    ``{∅}`` has the single facet ``0``.
    """

    __slots__ = ("n", "facets", "__dict__")

    def __init__(self, n: int, facet_masks: Iterable[int]):
        facets = maximal_sets(facet_masks)
        if not facets:
            raise EmptyInput("a simplicial complex needs at least one facet")
        if n < 0:
            raise VertexOutOfRange(f"ground set size must be >= 0, got {n}")
        if any(f >> n for f in facets):
            raise VertexOutOfRange(f"facet uses a vertex outside [{n}]")
        self.n = n
        self.facets: tuple[int, ...] = tuple(sorted(facets, key=face_key))

    @classmethod
    def from_facets(cls, n: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        masks = []
        for facet in facets:
            facet = list(facet)
            for v in facet:
                if not isinstance(v, int) or v < 1 or v > n:
                    raise VertexOutOfRange(f"vertex {v!r} not in [1, {n}]")
            masks.append(mask_of(facet))
        if not masks:
            raise EmptyInput("facet list is empty")
        return cls(n, masks)

    @classmethod
    def simplex(cls, n: int, vertices: Iterable[int] | None = None) -> "SimplicialComplex":
        if vertices is None:
            return cls(n, [full_mask(n)])
        return cls.from_facets(n, [vertices])

    # -- basic data -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.n == other.n and self.facets == other.facets

    def __hash__(self):
        return hash((self.n, self.facets))

    def __repr__(self):
        return f"SimplicialComplex({self.n}, {self.facet_lists()})"

    def facet_lists(self) -> list[list[int]]:
        return [list(vertices_of(f)) for f in self.facets]

    @cached_property
    def dim(self) -> int:
        return max(popcount(f) for f in self.facets) - 1

    @cached_property
    def existing_vertices(self) -> int:
        m = 0
        for f in self.facets:
            m |= f
        return m

    @property
    def vertex_list(self) -> tuple[int, ...]:
        return vertices_of(self.existing_vertices)

    def is_pure(self) -> bool:
        sizes = {popcount(f) for f in self.facets}
        return len(sizes) == 1

    @cached_property
    def faces(self) -> frozenset[int]:
        total = sum(1 << popcount(f) for f in self.facets)
        if total > FACE_SET_LIMIT:
            raise MemoryError(f"complex has up to {total} faces; too many to list")
        out: set[int] = set()
        for f in self.facets:
            out.update(submasks(f))
        return frozenset(out)

    @cached_property
    def faces_by_size(self) -> tuple[tuple[int, ...], ...]:
        buckets: list[list[int]] = [[] for _ in range(self.dim + 2)]
        for face in self.faces:
            buckets[popcount(face)].append(face)
        return tuple(tuple(sorted(b)) for b in buckets)

    def contains(self, face: FaceLike) -> bool:
        m = self._mask(face)
        if "faces" in self.__dict__:
            return m in self.faces
        return any(m & ~f == 0 for f in self.facets)

    __contains__ = contains

    def _mask(self, face: FaceLike) -> int:
        if isinstance(face, int):
            if face < 0 or face >> self.n:
                raise VertexOutOfRange(f"face mask {face} outside [{self.n}]")
            return face
        verts = list(face)
        for v in verts:
            if v < 1 or v > self.n:
                raise VertexOutOfRange(f"vertex {v} not in [1, {self.n}]")
        return mask_of(verts)

    def f_vector(self) -> tuple[int, ...]:
        """Face counts ``(f_-1, f_0, ..., f_dim)``."""
        return tuple(len(b) for b in self.faces_by_size)

    def reduced_euler(self) -> int:
        return sum(count if size % 2 else -count for size, count in enumerate(self.f_vector()))

    # -- operations -------------------------------------------------------

    def link(self, face: FaceLike) -> "SimplicialComplex":
        m = self._mask(face)
        if not self.contains(m):
            raise NotAFace(f"{list(vertices_of(m))} is not a face")
        return SimplicialComplex(self.n, [f & ~m for f in self.facets if f & m == m])

    def deletion(self, face: FaceLike) -> "SimplicialComplex":
        m = self._mask(face)
        return SimplicialComplex(self.n, [f & ~m for f in self.facets])

    def cone(self, apex: int) -> "SimplicialComplex":
        if apex < 1 or apex > self.n:
            raise VertexOutOfRange(f"apex {apex} not in [1, {self.n}]")
        bit = 1 << (apex - 1)
        if self.existing_vertices & bit:
            raise ApexExists(f"vertex {apex} already belongs to the complex")
        return SimplicialComplex(self.n, [f | bit for f in self.facets])

    def is_cone_with_apex(self, k: int) -> bool:
        bit = 1 << (k - 1)
        return all(f & bit for f in self.facets)

    def cone_points(self) -> int:
        """Mask of the vertices lying in every facet."""
        m = self.facets[0]
        for f in self.facets[1:]:
            m &= f
        return m

    def restriction(self, vertices: FaceLike) -> "SimplicialComplex":
        w = self._mask(vertices)
        return SimplicialComplex(self.n, [f & w for f in self.facets])

    def skeleton(self, i: int) -> "SimplicialComplex":
        if i < -1 or i > self.dim:
            raise DimensionOutOfRange(f"skeleton dimension {i} outside [-1, {self.dim}]")
        if i == self.dim:
            return self
        return SimplicialComplex(self.n, [f for f in self.faces if popcount(f) <= i + 1])

    def minimal_nonfaces(self) -> list[int]:
        """Generator supports of the Stanley-Reisner ideal, sorted lexicographically."""
        faces = self.faces
        out = set()
        for face in faces:
            for v in range(self.n):
                bit = 1 << v
                if face & bit:
                    continue
                cand = face | bit
                if cand in faces or cand in out:
                    continue
                if all((cand & ~(1 << u)) in faces for u in range(self.n) if cand >> u & 1):
                    out.add(cand)
        return sorted(out, key=face_key)

    # -- canonical form ---------------------------------------------------

    def canonical_form(self) -> tuple[int, tuple[int, ...]]:
        """Isomorphism-invariant key ``(|V|, facets)`` on the existing vertices.

        Vertices absent from every facet are dropped, so two complexes get the
        same key iff they agree up to relabelling and unused ground elements.
        """
        return _canonical_form(self.facets)

    # -- serialisation ----------------------------------------------------

    def to_text(self) -> str:
        lines = [f"n {self.n}"]
        for f in self.facets:
            lines.append(" ".join(map(str, vertices_of(f))) if f else "{}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {"n": self.n, "facets": self.facet_lists()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _refine(verts, facets, colors):
    while True:
        sigs = {}
        for v in verts:
            nb = []
            for f in facets:
                if f >> v & 1:
                    nb.append(tuple(sorted(colors[u] for u in verts if u != v and f >> u & 1)))
            sigs[v] = (colors[v], tuple(sorted(nb)))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs.values())))}
        new = {v: ranks[sigs[v]] for v in verts}
        if len(ranks) == len(set(colors[v] for v in verts)):
            return new
        colors = new


def _canonical_form(facets: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    union = 0
    for f in facets:
        union |= f
    verts = [v for v in range(union.bit_length()) if union >> v & 1]
    best = None

    def search(colors):
        nonlocal best
        colors = _refine(verts, facets, colors)
        cells: dict[int, list[int]] = {}
        for v in verts:
            cells.setdefault(colors[v], []).append(v)
        target = next((c for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            form = tuple(sorted(sum(1 << colors[v] for v in verts if f >> v & 1) for f in facets))
            if best is None or form < best:
                best = form
            return
        for v in cells[target]:
            branch = {u: 2 * colors[u] + 1 for u in verts}
            branch[v] = 2 * colors[v]
            search(branch)

    search({v: 0 for v in verts})
    return len(verts), best if best is not None else tuple(sorted(facets))


def complex_from_canonical(form: tuple[int, tuple[int, ...]]) -> SimplicialComplex:
    m, facets = form
    return SimplicialComplex(m, facets)


# -- parsing ---------------------------------------------------------------


def parse_complex_text(text: str) -> SimplicialComplex:
    """Read the line format: ``n <int>`` then one facet per line."""
    n = None
    facets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "n":
                raise ParseError("expected header 'n <int>'", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(f"bad vertex count {parts[1]!r}", lineno) from None
            if n < 0:
                raise ParseError("vertex count must be nonnegative", lineno)
            continue
        if line == "{}":
            facets.append([])
            continue
        try:
            facet = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
        bad = [v for v in facet if v < 1 or v > n]
        if bad:
            raise ParseError(f"vertex {bad[0]} outside [1, {n}]", lineno)
        facets.append(facet)
    if n is None:
        raise ParseError("missing header 'n <int>'")
    if not facets:
        raise ParseError("no facets listed")
    return SimplicialComplex.from_facets(n, facets)


def parse_complex_json(text: str) -> SimplicialComplex:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(data, dict) or "n" not in data or "facets" not in data:
        raise ParseError("JSON complex needs keys 'n' and 'facets'")
    try:
        return SimplicialComplex.from_facets(int(data["n"]), data["facets"])
    except (VertexOutOfRange, EmptyInput, TypeError) as exc:
        raise ParseError(str(exc)) from None


def parse_complex(text: str) -> SimplicialComplex:
    """Read either format; JSON is recognised by a leading ``{``."""
    if text.lstrip().startswith("{"):
        return parse_complex_json(text)
    return parse_complex_text(text)


def load_complex(path) -> SimplicialComplex:
    with open(path, encoding="utf-8") as fh:
        return parse_complex(fh.read())
