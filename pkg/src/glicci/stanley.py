"""Squarefree Stanley decompositions, sdepth and partitionability.

A decomposition ``K[cx] = sum_i u_i K[Z_i]`` is stored as the list of
intervals ``[supp u_i, Z_i]`` of the face poset; it is valid exactly when the
intervals partition the faces.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import guards
from .complex import SimplicialComplex, face_key, mask_of, popcount, submasks, vertices_of
from .errors import (
    NoRouteAvailable,
    Not2CM,
    NotAShelling,
    NotCohenMacaulay,
    NotPure,
    SearchExhausted,
    SizeGuardExceeded,
    WrongCodim,
)
from .fields import FieldSpec
from .homology import HilbertSeries, depth_report, hilbert_series
from .recognizers import PropertyVerdict, find_shelling, is_2cm, is_cm_fast, is_shelling_order


@dataclass(frozen=True, order=True)
class StanleySpace:
    u: int  # support of the monomial u
    Z: int

    def __post_init__(self):
        if self.u & ~self.Z:
            raise ValueError("supp u must be contained in Z")

    @property
    def dim(self) -> int:
        return popcount(self.Z)

    def faces(self):
        for extra in submasks(self.Z & ~self.u):
            yield self.u | extra

    def to_dict(self, keys=("u", "Z")) -> dict:
        return {keys[0]: list(vertices_of(self.u)), keys[1]: list(vertices_of(self.Z))}


@dataclass(frozen=True)
class StanleyDecomposition:
    spaces: tuple[StanleySpace, ...]
    complex: SimplicialComplex

    @classmethod
    def from_pairs(cls, cx: SimplicialComplex, pairs) -> "StanleyDecomposition":
        return cls(tuple(StanleySpace(mask_of(u), mask_of(z)) for u, z in pairs), cx)

    def sorted_spaces(self) -> list[StanleySpace]:
        """Sorted by ``(|Z| desc, lex)`` for display."""
        return sorted(self.spaces, key=lambda s: (-popcount(s.Z), face_key(s.Z), face_key(s.u)))

    def to_dict(self) -> dict:
        return {"spaces": [s.to_dict() for s in self.sorted_spaces()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass(frozen=True)
class IntervalPartition:
    intervals: tuple[tuple[int, int], ...]  # (F, G) masks

    def as_decomposition(self, cx: SimplicialComplex) -> StanleyDecomposition:
        return StanleyDecomposition(tuple(StanleySpace(f, g) for f, g in self.intervals), cx)

    def to_dict(self) -> dict:
        ordered = sorted(self.intervals, key=lambda fg: (-popcount(fg[1]), face_key(fg[1]), face_key(fg[0])))
        return {"intervals": [{"F": list(vertices_of(f)), "G": list(vertices_of(g))} for f, g in ordered]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass(frozen=True)
class DecompositionCheck:
    valid: bool
    face: tuple[int, ...] | None = None
    message: str = ""
    hilbert_agrees: bool = True

    def __bool__(self):
        return self.valid


def verify_decomposition(cx: SimplicialComplex, dec: StanleyDecomposition) -> DecompositionCheck:
    """Exact-cover check on faces, confirmed by the Hilbert-series identity."""
    hs = HilbertSeries.from_terms((popcount(s.u), popcount(s.Z)) for s in dec.spaces)
    hilbert_ok = hs == hilbert_series(cx)
    faces = cx.faces
    seen: set[int] = set()
    for s in dec.spaces:
        if s.Z not in faces:
            return DecompositionCheck(False, vertices_of(s.Z), "Z is not a face", hilbert_ok)
        for face in s.faces():
            if face in seen:
                return DecompositionCheck(False, vertices_of(face), "face covered twice", hilbert_ok)
            seen.add(face)
    missing = sorted(faces - seen, key=lambda f: (popcount(f), face_key(f)))
    if missing:
        return DecompositionCheck(False, vertices_of(missing[0]), "face not covered", hilbert_ok)
    return DecompositionCheck(True, None, "exact cover", hilbert_ok)


def sdepth_of(dec: StanleyDecomposition) -> int:
    return min(s.dim for s in dec.spaces)


# -- exact-cover search -------------------------------------------------------


def _cover_search(cx: SimplicialComplex, tops_for) -> list[tuple[int, int]] | None:
    """Partition faces into intervals ``[F, G]`` with ``G`` drawn from ``tops_for(F)``.

    The smallest uncovered face is always the bottom of its interval, so
    branching is only over the top.
    """
    order = sorted(cx.faces, key=lambda f: (popcount(f), face_key(f)))
    covered: set[int] = set()
    chosen: list[tuple[int, int]] = []
    dead: set[frozenset] = set()

    def step(pos: int) -> bool:
        while pos < len(order) and order[pos] in covered:
            pos += 1
        if pos == len(order):
            return True
        key = frozenset(covered)
        if key in dead:
            return False
        bottom = order[pos]
        for top in tops_for(bottom):
            block = [bottom | extra for extra in submasks(top & ~bottom)]
            if any(f in covered for f in block):
                continue
            covered.update(block)
            chosen.append((bottom, top))
            if step(pos + 1):
                return True
            chosen.pop()
            covered.difference_update(block)
        dead.add(key)
        return False

    return list(chosen) if step(0) else None


def facet_partition(cx: SimplicialComplex) -> IntervalPartition | None:
    """Facet-topped interval partition, facets tried in lexicographic order."""
    facets = sorted(cx.facets, key=face_key)
    found = _cover_search(cx, lambda b: [g for g in facets if g & b == b])
    return None if found is None else IntervalPartition(tuple(found))


def _partition_with_min_top(cx: SimplicialComplex, target: int) -> list[tuple[int, int]] | None:
    tops = sorted(
        (f for f in cx.faces if popcount(f) >= target),
        key=lambda f: (-popcount(f), face_key(f)),
    )
    return _cover_search(cx, lambda b: [g for g in tops if g & b == b])


def sdepth(cx: SimplicialComplex, guard_n: int | None = None) -> tuple[int, StanleyDecomposition]:
    """Exact sdepth with an optimal decomposition (targets tried from the top down)."""
    guards.check("sdepth_n", cx.n, guard_n)
    for target in range(cx.dim + 1, -1, -1):
        found = _partition_with_min_top(cx, target)
        if found is not None:
            dec = StanleyDecomposition(tuple(StanleySpace(f, g) for f, g in found), cx)
            return target, dec
    raise AssertionError("the singleton partition always exists")


# -- constructive routes ---------------------------------------------------------


def _codim(cx: SimplicialComplex, ground: int) -> int:
    return popcount(ground) - (cx.dim + 1)


def _codim2(cx: SimplicialComplex) -> list[StanleySpace]:
    part = facet_partition(cx)
    if part is None:
        raise SearchExhausted("no facet-topped partition of a Cohen-Macaulay codimension-2 complex")
    return [StanleySpace(f, g) for f, g in part.intervals]


def stanley_decomposition_codim2(cx: SimplicialComplex, field: FieldSpec) -> StanleyDecomposition:
    codim = _codim(cx, (1 << cx.n) - 1)
    if codim > 2:
        raise WrongCodim(f"codimension is {codim}, expected at most 2")
    if not is_cm_fast(cx, field):
        raise NotCohenMacaulay(f"complex is not Cohen-Macaulay over {field}")
    return StanleyDecomposition(tuple(_codim2(cx)), cx)


def _depth(cx: SimplicialComplex, field: FieldSpec) -> int:
    return depth_report(cx, field).depth


def _codim3(cx: SimplicialComplex, ground: int, field: FieldSpec, check_depths: bool) -> list[StanleySpace]:
    verts = cx.existing_vertices
    if verts == 0:
        return [StanleySpace(0, 0)]
    if popcount(verts) == 1:
        return [StanleySpace(0, verts)]
    k = (verts & -verts).bit_length()
    bit = 1 << (k - 1)
    rest = ground & ~bit
    lk = cx.link([k])
    dele = cx.deletion([k])
    if check_depths:
        d_lk, d_del, d_all = _depth(lk, field), _depth(dele, field), _depth(cx, field)
        # S/J_{lk k} is S'/I'_{lk k} adjoined x_k, so its depth is one more.
        assert d_all == d_lk + 1 == d_del, (k, d_all, d_lk, d_del)
    spaces = [StanleySpace(s.u | bit, s.Z | bit) for s in _codim3(lk, rest, field, check_depths)]
    spaces.extend(_codim2(dele))
    return spaces


def stanley_decomposition_2cm_codim3(
    cx: SimplicialComplex, field: FieldSpec, check_depths: bool = True
) -> StanleyDecomposition:
    """Recursive decomposition for doubly Cohen-Macaulay complexes of codimension 3.

    The least existing vertex ``k`` splits ``K[cx]`` into ``x_k`` times the
    link part and the deletion part, the latter of codimension 2.
    """
    ground = (1 << cx.n) - 1
    if _codim(cx, ground) != 3:
        raise WrongCodim(f"codimension is {_codim(cx, ground)}, expected 3")
    if not is_2cm(cx, field):
        raise Not2CM(f"complex is not 2-CM over {field}")
    dec = StanleyDecomposition(tuple(_codim3(cx, ground, field, check_depths)), cx)
    if check_depths:
        assert sdepth_of(dec) >= _depth(cx, field)
    return dec


# -- partitions ------------------------------------------------------------------


def partition_from_shelling(cx: SimplicialComplex, order) -> IntervalPartition:
    order = [f if isinstance(f, int) else mask_of(f) for f in order]
    if not is_shelling_order(cx, order):
        raise NotAShelling("the given order is not a shelling")
    intervals = []
    for i, f in enumerate(order):
        earlier = order[:i]
        r = 0
        for v in vertices_of(f):
            ridge = f & ~(1 << (v - 1))
            if any(ridge & ~g == 0 for g in earlier):
                r |= 1 << (v - 1)
        intervals.append((r, f))
    return IntervalPartition(tuple(intervals))


def is_partitionable(
    cx: SimplicialComplex, guard_n: int | None = None, use_shelling: bool = True
) -> PropertyVerdict:
    if not cx.is_pure():
        raise NotPure("partitionability is tested for pure complexes only")
    guards.check("partition_n", cx.n, guard_n)
    part = None
    if use_shelling and len(cx.facets) <= guards.guard("shelling_facets"):
        order = find_shelling(cx)
        if order is not None:
            part = partition_from_shelling(cx, order)
    if part is None:
        part = facet_partition(cx)
    if part is None:
        return PropertyVerdict("partitionable", False)
    assert verify_decomposition(cx, part.as_decomposition(cx))
    return PropertyVerdict("partitionable", True, part.to_dict())


@dataclass(frozen=True)
class DepthSdepthReport:
    depth: int
    sdepth_lower_bound: int
    conjecture_holds: bool
    route: str
    decomposition: StanleyDecomposition

    def to_dict(self) -> dict:
        return {
            "depth": self.depth,
            "sdepth_lower_bound": self.sdepth_lower_bound,
            "conjecture_holds": self.conjecture_holds,
            "route": self.route,
            **self.decomposition.to_dict(),
        }


def best_decomposition(
    cx: SimplicialComplex, field: FieldSpec, guard_n: int | None = None
) -> tuple[str, StanleyDecomposition]:
    """Pick the first applicable route and return ``(route, decomposition)``."""
    ground = (1 << cx.n) - 1
    codim = _codim(cx, ground)
    pure = cx.is_pure()
    if pure and codim == 3 and is_2cm(cx, field):
        return "2cm-codim3", stanley_decomposition_2cm_codim3(cx, field)
    if pure and codim <= 2 and is_cm_fast(cx, field):
        part = facet_partition(cx)
        if part is None:
            raise SearchExhausted("no facet-topped partition of a Cohen-Macaulay codimension-2 complex")
        return "cm-codim2", part.as_decomposition(cx)
    if pure and len(cx.facets) <= guards.guard("shelling_facets"):
        order = find_shelling(cx)
        if order is not None:
            return "shelling", partition_from_shelling(cx, order).as_decomposition(cx)
    try:
        _, dec = sdepth(cx, guard_n)
    except SizeGuardExceeded:
        raise NoRouteAvailable("no decomposition route applies within the size guard") from None
    return "exhaustive", dec


def depth_vs_sdepth(cx: SimplicialComplex, field: FieldSpec, guard_n: int | None = None) -> DepthSdepthReport:
    route, dec = best_decomposition(cx, field, guard_n)
    d = _depth(cx, field)
    s = sdepth_of(dec)
    return DepthSdepthReport(d, s, d <= s, route, dec)
