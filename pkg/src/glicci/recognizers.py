"""Decision procedures for the combinatorial and homological properties.

Every procedure returns a :class:`PropertyVerdict`.  Witnesses are stored in
JSON-ready form (vertex lists rather than bitmasks).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Any

from . import guards
from .complex import (
    SimplicialComplex,
    face_key,
    mask_of,
    maximal_sets,
    popcount,
    submasks,
    vertices_of,
)
from .errors import NotPure
from .fields import FieldSpec
from .homology import _homology, depth_report

# Canonical-form memo keys are only computed up to this many vertices.
CANONICAL_MEMO_MAX_N = 9


@dataclass(frozen=True)
class PropertyVerdict:
    property: str
    value: bool
    witness: Any = None
    field: FieldSpec | None = None

    def __bool__(self):
        return self.value

    def to_dict(self) -> dict:
        return {
            "property": self.property,
            "field": None if self.field is None else str(self.field),
            "value": self.value,
            "witness": self.witness,
        }


def _verts(mask: int) -> list[int]:
    return list(vertices_of(mask))


def _link_facets(facets, face: int) -> tuple[int, ...]:
    return tuple(sorted(maximal_sets(f & ~face for f in facets if f & face == face)))


def _restrict_facets(facets, w: int) -> tuple[int, ...]:
    return tuple(sorted(maximal_sets(f & w for f in facets)))


def _all_faces(facets) -> list[int]:
    out: set[int] = set()
    for f in facets:
        out.update(submasks(f))
    return sorted(out, key=lambda m: (popcount(m), face_key(m)))


def memo_key(cx: SimplicialComplex):
    if popcount(cx.existing_vertices) <= CANONICAL_MEMO_MAX_N:
        return cx.canonical_form()
    return (cx.n, cx.facets)


# -- Cohen-Macaulay (Reisner) ---------------------------------------------


@lru_cache(maxsize=1 << 17)
def _reisner(facets: tuple[int, ...], char: int):
    """``None`` if Cohen-Macaulay, else ``(face, degree, dims)`` of a failure."""
    facet_set = set(facets)
    for face in _all_faces(facets):
        if face in facet_set:
            continue
        dims = _homology(_link_facets(facets, face), char)
        for idx in range(len(dims) - 1):  # degrees -1 .. dim(lk) - 1
            if dims[idx]:
                return face, idx - 1, dims
    return None


def is_cm_fast(cx: SimplicialComplex, field: FieldSpec) -> bool:
    return _reisner(tuple(sorted(cx.facets)), field.characteristic) is None


def is_cohen_macaulay(cx: SimplicialComplex, field: FieldSpec) -> PropertyVerdict:
    bad = _reisner(tuple(sorted(cx.facets)), field.characteristic)
    if bad is None:
        return PropertyVerdict("cohen_macaulay", True, None, field)
    face, degree, dims = bad
    witness = {"face": _verts(face), "degree": degree, "homology": list(dims)}
    return PropertyVerdict("cohen_macaulay", False, witness, field)


def is_2cm(cx: SimplicialComplex, field: FieldSpec) -> PropertyVerdict:
    cm = is_cohen_macaulay(cx, field)
    if not cm:
        return PropertyVerdict("2cm", False, {"reason": "not Cohen-Macaulay", **cm.witness}, field)
    for k in cx.vertex_list:
        dele = cx.deletion([k])
        if dele.dim != cx.dim:
            return PropertyVerdict("2cm", False, {"vertex": k, "reason": "deletion drops dimension"}, field)
        if not is_cm_fast(dele, field):
            return PropertyVerdict("2cm", False, {"vertex": k, "reason": "deletion not Cohen-Macaulay"}, field)
    return PropertyVerdict("2cm", True, None, field)


def core(cx: SimplicialComplex) -> SimplicialComplex:
    """Restriction to the vertices that miss at least one facet."""
    return cx.restriction(cx.existing_vertices & ~cx.cone_points())


def is_gorenstein(cx: SimplicialComplex, field: FieldSpec) -> PropertyVerdict:
    """Gorenstein iff the core is a homology sphere over the field."""
    cc = core(cx)
    facets = tuple(sorted(cc.facets))
    char = field.characteristic
    for face in _all_faces(facets):
        dims = _homology(_link_facets(facets, face), char)
        expected = [0] * (len(dims) - 1) + [1]
        if list(dims) != expected:
            witness = {"core": cc.facet_lists(), "face": _verts(face), "homology": list(dims)}
            return PropertyVerdict("gorenstein", False, witness, field)
    return PropertyVerdict("gorenstein", True, None, field)


# -- shifted ----------------------------------------------------------------


def _shift_violation(facets, n: int, facet_set=None):
    faces = facet_set
    if faces is None:
        faces = set()
        for f in facets:
            faces.update(submasks(f))
    for f in sorted(facets, key=face_key):
        for j in range(n):
            if not f >> j & 1:
                continue
            for i in range(j + 1, n):
                if f >> i & 1:
                    continue
                if (f & ~(1 << j)) | (1 << i) not in faces:
                    return f, j + 1, i + 1
    return None


def _dominates(facets, faces, u: int, v: int) -> bool:
    """``v`` dominates ``u``: replacing ``u`` by ``v`` keeps every face a face."""
    ub, vb = 1 << u, 1 << v
    return all((f & ~ub) | vb in faces for f in facets if f & ub and not f & vb)


def is_shifted(cx: SimplicialComplex, any_labeling: bool = False, guard_n: int | None = None) -> PropertyVerdict:
    faces = cx.faces
    bad = _shift_violation(cx.facets, cx.n, faces)
    if bad is None:
        return PropertyVerdict("shifted", True, {"labeling": list(range(1, cx.n + 1))} if any_labeling else None)
    if not any_labeling:
        f, j, i = bad
        return PropertyVerdict("shifted", False, {"face": _verts(f), "j": j, "i": i})
    guards.check("any_labeling_n", cx.n, guard_n)
    labeling = shifting_labeling(cx)
    if labeling is None:
        return PropertyVerdict("shifted", False, {"reason": "no labeling makes the complex shifted"})
    return PropertyVerdict("shifted", True, {"labeling": labeling})


def relabel(cx: SimplicialComplex, labeling: list[int]) -> SimplicialComplex:
    """Rename vertex ``v`` to ``labeling[v - 1]``."""
    out = []
    for f in cx.facets:
        out.append(mask_of(labeling[v - 1] for v in vertices_of(f)))
    return SimplicialComplex(cx.n, out)


def shifting_labeling(cx: SimplicialComplex) -> list[int] | None:
    """A labeling under which ``cx`` is shifted, or ``None``.

    Labels are handed out from 1 upward, each time to a remaining vertex that
    is dominated by every other remaining vertex.  Such a greedy choice never
    loses a solution because dominated-by-all vertices are interchangeable.
    """
    faces = cx.faces
    remaining = list(range(cx.n))
    labeling = [0] * cx.n
    label = 1
    while remaining:
        pick = next(
            (u for u in remaining if all(_dominates(cx.facets, faces, u, v) for v in remaining if v != u)),
            None,
        )
        if pick is None:
            return None
        labeling[pick] = label
        label += 1
        remaining.remove(pick)
    if _shift_violation(relabel(cx, labeling).facets, cx.n) is not None:
        raise AssertionError("greedy shifting labeling failed to verify")
    return labeling


def is_shifted_bruteforce(cx: SimplicialComplex) -> bool:
    """Try every permutation; the reference for :func:`shifting_labeling`."""
    for perm in permutations(range(1, cx.n + 1)):
        if _shift_violation(relabel(cx, list(perm)).facets, cx.n) is None:
            return True
    return False


# -- matroid ----------------------------------------------------------------


def _basis_exchange(facets) -> bool:
    fs = set(facets)
    for b1 in facets:
        for b2 in facets:
            diff1 = b1 & ~b2
            diff2 = b2 & ~b1
            x = diff1
            while x:
                xb = x & -x
                x ^= xb
                y = diff2
                found = False
                while y:
                    yb = y & -y
                    y ^= yb
                    if (b1 & ~xb) | yb in fs:
                        found = True
                        break
                if not found:
                    return False
    return True


def impure_restriction(cx: SimplicialComplex) -> int | None:
    """Smallest (by size, then lexicographically) W with impure restriction."""
    for w in sorted(range(1 << cx.n), key=lambda m: (popcount(m), face_key(m))):
        sizes = {popcount(f) for f in maximal_sets(f & w for f in cx.facets)}
        if len(sizes) > 1:
            return w
    return None


def is_matroid(cx: SimplicialComplex, verify: bool = False) -> PropertyVerdict:
    value = _basis_exchange(cx.facets)
    w = impure_restriction(cx) if (verify or not value) else None
    if verify and value != (w is None):
        raise AssertionError("basis exchange and restriction purity disagree")
    if value:
        return PropertyVerdict("matroid", True)
    return PropertyVerdict("matroid", False, {"W": _verts(w)})


# -- shellability -------------------------------------------------------------


class _ShellingData:
    """Precomputed facet adjacency for the shelling step test."""

    def __init__(self, cx: SimplicialComplex):
        self.facets = list(cx.facets)  # lexicographic order
        t = len(self.facets)
        self.full = (1 << t) - 1
        self.ridge_nbrs = []
        for a, fa in enumerate(self.facets):
            per_v = []
            rest = fa
            while rest:
                vb = rest & -rest
                rest ^= vb
                m = 0
                for b, fb in enumerate(self.facets):
                    if b != a and fa & ~fb == vb:
                        m |= 1 << b
                per_v.append((vb, m))
            self.ridge_nbrs.append(per_v)
        self._contain: dict[tuple[int, int], int] = {}

    def containing(self, a: int, r: int) -> int:
        key = (a, r)
        m = self._contain.get(key)
        if m is None:
            m = 0
            for b, fb in enumerate(self.facets):
                if b != a and r & ~fb == 0:
                    m |= 1 << b
            self._contain[key] = m
        return m

    def restriction_face(self, a: int, state: int) -> int:
        r = 0
        for vb, m in self.ridge_nbrs[a]:
            if m & state:
                r |= vb
        return r

    def addable(self, a: int, state: int) -> bool:
        if state == 0:
            return True
        r = self.restriction_face(a, state)
        if r == 0:
            return False
        return self.containing(a, r) & state == 0


def _shelling_prep(cx: SimplicialComplex, guard_facets: int | None):
    if not cx.is_pure():
        raise NotPure("shellability is tested for pure complexes only")
    guards.check("shelling_facets", len(cx.facets), guard_facets)
    return _ShellingData(cx)


def find_shelling(cx: SimplicialComplex, guard_facets: int | None = None) -> list[int] | None:
    """Lexicographically first shelling order (as facet masks), or ``None``."""
    data = _shelling_prep(cx, guard_facets)
    t = len(data.facets)
    dead: set[int] = set()
    order: list[int] = []

    def dfs(state: int) -> bool:
        if state == data.full:
            return True
        if state in dead:
            return False
        for a in range(t):
            bit = 1 << a
            if state & bit or not data.addable(a, state):
                continue
            order.append(a)
            if dfs(state | bit):
                return True
            order.pop()
        dead.add(state)
        return False

    if dfs(0):
        return [data.facets[a] for a in order]
    return None


def is_shelling_order(cx: SimplicialComplex, order: list[int]) -> bool:
    data = _ShellingData(cx)
    index = {f: a for a, f in enumerate(data.facets)}
    if sorted(order) != sorted(data.facets) or len(set(order)) != len(order):
        return False
    state = 0
    for f in order:
        a = index[f]
        if not data.addable(a, state):
            return False
        state |= 1 << a
    return True


def is_shellable(cx: SimplicialComplex, guard_facets: int | None = None) -> PropertyVerdict:
    order = find_shelling(cx, guard_facets)
    if order is None:
        return PropertyVerdict("shellable", False)
    return PropertyVerdict("shellable", True, {"order": [_verts(f) for f in order]})


def is_extendably_shellable(cx: SimplicialComplex, guard_facets: int | None = None) -> PropertyVerdict:
    """Every partial shelling extends to a full one (searched over facet sets)."""
    data = _shelling_prep(cx, guard_facets)
    t = len(data.facets)
    parent: dict[int, tuple[int, int]] = {0: (-1, -1)}
    queue = deque([0])
    while queue:
        state = queue.popleft()
        if state == data.full:
            continue
        extended = False
        for a in range(t):
            bit = 1 << a
            if state & bit or not data.addable(a, state):
                continue
            extended = True
            nxt = state | bit
            if nxt not in parent:
                parent[nxt] = (state, a)
                queue.append(nxt)
        if not extended:
            prefix = []
            s = state
            while s:
                s, a = parent[s]
                prefix.append(data.facets[a])
            prefix.reverse()
            return PropertyVerdict("extendably_shellable", False, {"stuck_prefix": [_verts(f) for f in prefix]})
    return PropertyVerdict("extendably_shellable", True)


# -- vertex decomposability ---------------------------------------------------

_VD_MEMO: dict = {}
_WVD_MEMO: dict = {}


def clear_memos() -> None:
    _VD_MEMO.clear()
    _WVD_MEMO.clear()


def _vd(cx: SimplicialComplex) -> bool:
    if len(cx.facets) == 1:
        return True
    key = memo_key(cx)
    hit = _VD_MEMO.get(key)
    if hit is not None:
        return hit
    result = _vd_vertex(cx) is not None
    _VD_MEMO[key] = result
    return result


def _vd_vertex(cx: SimplicialComplex):
    for k in cx.vertex_list:
        dele = cx.deletion([k])
        if dele.dim != cx.dim or not dele.is_pure():
            continue
        lk = cx.link([k])
        if _vd(lk) and _vd(dele):
            return k, lk, dele
    return None


def _vd_tree(cx: SimplicialComplex):
    if len(cx.facets) == 1:
        return {"simplex": _verts(cx.facets[0])}
    k, lk, dele = _vd_vertex(cx)
    return {"vertex": k, "link": _vd_tree(lk), "deletion": _vd_tree(dele)}


def is_vertex_decomposable(cx: SimplicialComplex) -> PropertyVerdict:
    if not cx.is_pure():
        raise NotPure("vertex decomposability is defined for pure complexes")
    if _vd(cx):
        return PropertyVerdict("vertex_decomposable", True, {"tree": _vd_tree(cx)})
    return PropertyVerdict("vertex_decomposable", False)


def _candidate_vertices(cx: SimplicialComplex, order: str):
    verts = cx.vertex_list
    return verts[::-1] if order == "descending" else verts


def _wvd_step(cx: SimplicialComplex, field: FieldSpec, order: str):
    """First successful ``(k, branch, child)`` or ``None``."""
    for k in _candidate_vertices(cx, order):
        if cx.is_cone_with_apex(k):
            dele = cx.deletion([k])
            if _wvd(dele, field, order):
                return k, "cone", dele
            continue
        dele = cx.deletion([k])
        if dele.dim == cx.dim and is_cm_fast(dele, field):
            lk = cx.link([k])
            if _wvd(lk, field, order):
                return k, "link", lk
    return None


def _wvd(cx: SimplicialComplex, field: FieldSpec, order: str) -> bool:
    if len(cx.facets) == 1:
        return True
    key = (memo_key(cx), field.characteristic, order)
    hit = _WVD_MEMO.get(key)
    if hit is not None:
        return hit
    result = _wvd_step(cx, field, order) is not None
    _WVD_MEMO[key] = result
    return result


def wvd_witness(cx: SimplicialComplex, field: FieldSpec, order: str = "descending"):
    """Branch sequence ``[(k, "cone"|"link"), ...]`` ending at a simplex."""
    path = []
    node = cx
    while len(node.facets) > 1:
        step = _wvd_step(node, field, order)
        if step is None:
            return None
        k, branch, node = step
        path.append((k, branch))
    return path


def wvd_failure_trace(cx: SimplicialComplex, field: FieldSpec, order: str = "descending") -> list[dict]:
    """Per failing node, why each candidate vertex was rejected."""
    nodes: list[dict] = []
    index: dict = {}

    def visit(node: SimplicialComplex) -> int:
        key = memo_key(node)
        if key in index:
            return index[key]
        idx = index[key] = len(nodes)
        entry = {"node": idx, "facets": node.facet_lists(), "candidates": []}
        nodes.append(entry)
        for k in _candidate_vertices(node, order):
            cand: dict[str, Any] = {"k": k}
            dele = node.deletion([k])
            if node.is_cone_with_apex(k):
                cand["link"] = "deletion drops dimension (k is a cone point)"
                cand["cone"] = "deletion not weakly vertex-decomposable"
                cand["cone_node"] = visit(dele)
            else:
                cand["cone"] = "k is not in every facet"
                if not is_cm_fast(dele, field):
                    rep = depth_report(dele.cone(k), field)
                    cand["link"] = (
                        f"deletion not Cohen-Macaulay: S/J has depth {rep.depth} < dim {rep.dim}"
                    )
                    cand["deletion_depth"] = rep.depth
                    cand["deletion_dim"] = rep.dim
                else:
                    cand["link"] = "link not weakly vertex-decomposable"
                    cand["link_node"] = visit(node.link([k]))
            entry["candidates"].append(cand)
        return idx

    visit(cx)
    return nodes


def is_weakly_vertex_decomposable(
    cx: SimplicialComplex, field: FieldSpec, order: str = "descending"
) -> PropertyVerdict:
    if not cx.is_pure():
        raise NotPure("weak vertex decomposability is defined for pure complexes")
    path = wvd_witness(cx, field, order)
    if path is not None:
        return PropertyVerdict(
            "weakly_vertex_decomposable", True, {"steps": [[k, b] for k, b in path]}, field
        )
    return PropertyVerdict(
        "weakly_vertex_decomposable", False, {"trace": wvd_failure_trace(cx, field, order)}, field
    )


def all_verdicts(
    cx: SimplicialComplex, field: FieldSpec, any_labeling: bool = False
) -> list[PropertyVerdict]:
    """Every recognizer applicable to ``cx``; pure-only ones are skipped otherwise."""
    from .homology import is_level
    from .errors import NotCohenMacaulay

    out = [
        is_cohen_macaulay(cx, field),
        is_2cm(cx, field),
        is_gorenstein(cx, field),
        is_shifted(cx, any_labeling=any_labeling),
        is_matroid(cx),
    ]
    try:
        out.append(PropertyVerdict("level", is_level(cx, field), None, field))
    except NotCohenMacaulay:
        out.append(PropertyVerdict("level", False, {"reason": "not Cohen-Macaulay"}, field))
    if cx.is_pure():
        out.append(is_shellable(cx))
        out.append(is_extendably_shellable(cx))
        out.append(is_vertex_decomposable(cx))
        out.append(is_weakly_vertex_decomposable(cx, field))
    return out
