"""Exhaustive census of small pure complexes against the implication diagram.

Complexes are enumerated up to isomorphism as uniform hypergraphs covering
[n], grown one facet at a time and deduplicated by a permutation-table
canonical form.  Every property and identity is then evaluated over each
requested field.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field
from itertools import combinations, permutations

import numpy as np

from . import guards
from .complex import SimplicialComplex, mask_of, popcount
from .errors import NotWeaklyVertexDecomposable
from .fields import FieldSpec
from .homology import depth_report, is_level, reduced_homology
from .ideal import SquarefreeMonomialIdeal, bdl_compose, complex_of_ideal, stanley_reisner_ideal
from .liaison import build_glicci_certificate, certificate_length_stats, chain_ideals, descends, verify_glicci_certificate
from .recognizers import (
    find_shelling,
    is_2cm,
    is_cm_fast,
    is_extendably_shellable,
    is_gorenstein,
    is_matroid,
    is_shifted,
    is_vertex_decomposable,
    is_weakly_vertex_decomposable,
)
from .stanley import (
    facet_partition,
    partition_from_shelling,
    sdepth_of,
    stanley_decomposition_2cm_codim3,
    verify_decomposition,
)

# -- enumeration ----------------------------------------------------------------


def _uniform_hypergraphs(n: int, k: int):
    """Facet sets of ``k``-subsets of [n] covering [n], one per isomorphism class."""
    subsets = [mask_of(c) for c in combinations(range(1, n + 1), k)]
    pos = {s: i for i, s in enumerate(subsets)}
    perms = list(permutations(range(n)))
    table = np.empty((len(perms), len(subsets)), dtype=np.int64)
    for g, perm in enumerate(perms):
        for i, s in enumerate(subsets):
            img = 0
            for v in range(n):
                if s >> v & 1:
                    img |= 1 << perm[v]
            table[g, i] = pos[img]
    weights = np.left_shift(np.int64(1), table)

    def canon(idx: tuple[int, ...]) -> int:
        return int(weights[:, list(idx)].sum(axis=1).min())

    everything = (1 << n) - 1
    level = {canon((0,)): (0,)}
    while level:
        for idx in level.values():
            cover = 0
            for i in idx:
                cover |= subsets[i]
            if cover == everything:
                yield [subsets[i] for i in idx]
        nxt: dict[int, tuple[int, ...]] = {}
        for idx in level.values():
            present = set(idx)
            for j in range(len(subsets)):
                if j in present:
                    continue
                cand = tuple(sorted(idx + (j,)))
                key = canon(cand)
                if key not in nxt:
                    nxt[key] = cand
        level = nxt


def pure_complexes(n: int):
    """Pure complexes whose vertex set is exactly [n], up to isomorphism."""
    for k in range(1, n + 1):
        for facets in _uniform_hypergraphs(n, k):
            yield SimplicialComplex(n, facets)


# -- checks --------------------------------------------------------------------

# (name, premise, conclusion); field-dependent keys carry the field suffix.
IMPLICATIONS = [
    ("shifted => vd", "shifted", "vd"),
    ("matroid => vd", "matroid", "vd"),
    ("coneless matroid => 2cm", "coneless_matroid", "2cm"),
    ("coneless gorenstein => 2cm", "coneless_gorenstein", "2cm"),
    ("vd => extendably shellable", "vd", "ext_shellable"),
    ("extendably shellable => shellable", "ext_shellable", "shellable"),
    ("shellable => cm", "shellable", "cm"),
    ("vd => wvd", "vd", "wvd"),
    ("2cm => wvd", "2cm", "wvd"),
    ("wvd => cm", "wvd", "cm"),
    ("2cm => level", "2cm", "level"),
    ("gorenstein => cm", "gorenstein", "cm"),
]


@dataclass
class CensusReport:
    fields: list[FieldSpec]
    max_n: int
    counts: dict = dc_field(default_factory=dict)
    violations: dict = dc_field(default_factory=dict)
    strict: dict = dc_field(default_factory=dict)
    identity_failures: dict = dc_field(default_factory=dict)
    notes: dict = dc_field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations and not self.identity_failures

    def _bump(self, table: dict, key, cx: SimplicialComplex | None = None) -> None:
        entry = table.setdefault(key, {"count": 0, "witness": None})
        entry["count"] += 1
        if cx is not None and entry["witness"] is None:
            entry["witness"] = cx.to_dict()

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "fields": [str(f) for f in self.fields],
            "complexes": self.counts,
            "violations": self.violations,
            "strictness_witnesses": self.strict,
            "identity_failures": self.identity_failures,
            "notes": self.notes,
        }

    def render(self) -> str:
        lines = [f"census up to n = {self.max_n} over {', '.join(map(str, self.fields))}"]
        lines.append("complexes: " + ", ".join(f"n={n}: {c}" for n, c in sorted(self.counts.items())))
        lines.append(f"implication violations: {sum(v['count'] for v in self.violations.values())}")
        for key, v in sorted(self.violations.items()):
            lines.append(f"  VIOLATION {key}: {v['count']} (first {v['witness']})")
        lines.append(f"identity failures: {sum(v['count'] for v in self.identity_failures.values())}")
        for key, v in sorted(self.identity_failures.items()):
            lines.append(f"  FAILURE {key}: {v['count']} (first {v['witness']})")
        lines.append("strictness witnesses (conclusion holds, premise fails):")
        for key, v in sorted(self.strict.items()):
            lines.append(f"  {key}: {v['count']}")
        for key, v in sorted(self.notes.items()):
            lines.append(f"note {key}: {v['count'] if isinstance(v, dict) else v}")
        return "\n".join(lines)


def _sr_in(cx: SimplicialComplex, drop: int) -> SquarefreeMonomialIdeal:
    """Stanley-Reisner ideal of ``cx`` in the ring without ``x_drop``."""
    bit = 1 << (drop - 1)
    gens = [g for g in stanley_reisner_ideal(cx).gens if g != bit]
    return SquarefreeMonomialIdeal(cx.n, gens)


def _skeleton_depth(cx: SimplicialComplex, fieldspec: FieldSpec) -> int:
    """``1 + max{i : the i-skeleton is CM}``, with the (-1)-skeleton always CM."""
    best = 0
    for i in range(0, cx.dim + 1):
        if is_cm_fast(cx.skeleton(i), fieldspec):
            best = i + 1
    return best


def _field_independent(cx: SimplicialComplex) -> dict[str, bool]:
    props = {
        "shifted": bool(is_shifted(cx, any_labeling=True)),
        "matroid": bool(is_matroid(cx)),
        "vd": bool(is_vertex_decomposable(cx)),
    }
    props["coneless_matroid"] = props["matroid"] and cx.cone_points() == 0
    order = find_shelling(cx)
    props["shellable"] = order is not None
    props["ext_shellable"] = props["shellable"] and bool(is_extendably_shellable(cx))
    props["_order"] = order
    return props


def _check_complex(cx: SimplicialComplex, fields: list[FieldSpec], report: CensusReport) -> None:
    base = _field_independent(cx)
    order = base.pop("_order")
    ideal = stanley_reisner_ideal(cx)
    fail = report.identity_failures

    for k in cx.vertex_list:
        composed = bdl_compose(_sr_in(cx.link([k]), k), _sr_in(cx.deletion([k]), k), k)
        if composed.gens != ideal.gens:
            report._bump(fail, "I = x_k J_lk + J_del", cx)

    if order is not None:
        check = verify_decomposition(cx, partition_from_shelling(cx, order).as_decomposition(cx))
        if not check:
            report._bump(fail, "partition_from_shelling verifies", cx)
        if not check.hilbert_agrees:
            report._bump(fail, "hilbert series identity (shelling partition)", cx)
        report._bump(report.notes, "shelling partitions verified")

    any_cm = False
    for F in fields:
        tag = str(F)
        props = dict(base)
        props["cm"] = is_cm_fast(cx, F)
        any_cm |= props["cm"]
        rep = depth_report(cx, F)
        if rep.cohen_macaulay != props["cm"]:
            report._bump(fail, f"reisner cm == depth cm [{tag}]", cx)
        if _skeleton_depth(cx, F) != rep.depth:
            report._bump(fail, f"auslander-buchsbaum depth == skeleton depth [{tag}]", cx)
        if reduced_homology(cx, F).euler() != cx.reduced_euler():
            report._bump(fail, f"euler-poincare [{tag}]", cx)

        props["2cm"] = bool(is_2cm(cx, F))
        props["gorenstein"] = bool(is_gorenstein(cx, F))
        props["coneless_gorenstein"] = props["gorenstein"] and cx.cone_points() == 0
        props["level"] = is_level(cx, F) if props["cm"] else False
        props["wvd"] = bool(is_weakly_vertex_decomposable(cx, F))

        for name, a, b in IMPLICATIONS:
            if props[a] and not props[b]:
                report._bump(report.violations, f"{name} [{tag}]", cx)
            elif props[b] and not props[a]:
                report._bump(report.strict, f"{name} [{tag}]")
        if props["cm"] and not props["shellable"]:
            report._bump(report.notes, f"cm but not shellable [{tag}]", cx)
        if props["wvd"] and not props["2cm"]:
            report._bump(report.notes, f"wvd but not 2cm [{tag}]", cx)

        if props["wvd"]:
            _check_certificate(cx, F, report)
        if props["2cm"] and cx.n - cx.dim - 1 == 3:
            _check_stanley(cx, F, report)

    if any_cm:
        if facet_partition(cx) is None:
            report._bump(report.notes, "cm but not partitionable", cx)
        else:
            report._bump(report.notes, "cm and partitionable")


def _check_certificate(cx: SimplicialComplex, F: FieldSpec, report: CensusReport) -> None:
    tag = str(F)
    fail = report.identity_failures
    try:
        cert = build_glicci_certificate(cx, F)
    except NotWeaklyVertexDecomposable:
        report._bump(fail, f"certificate builds for wvd complexes [{tag}]", cx)
        return
    if not verify_glicci_certificate(cert):
        report._bump(fail, f"certificate soundness [{tag}]", cx)
    if not descends(cert):
        report._bump(fail, f"certificate descent [{tag}]", cx)
    if certificate_length_stats(cert)[1] > popcount(cx.existing_vertices):
        report._bump(fail, f"links <= f_0 [{tag}]", cx)
    for ideal in chain_ideals(cert):
        if not is_cm_fast(complex_of_ideal(ideal), F):
            report._bump(fail, f"chain stays cohen-macaulay [{tag}]", cx)
            break
    report._bump(report.notes, f"certificates verified [{tag}]")


def _check_stanley(cx: SimplicialComplex, F: FieldSpec, report: CensusReport) -> None:
    tag = str(F)
    fail = report.identity_failures
    dec = stanley_decomposition_2cm_codim3(cx, F)
    check = verify_decomposition(cx, dec)
    if not check:
        report._bump(fail, f"2cm codim 3 decomposition verifies [{tag}]", cx)
    if not check.hilbert_agrees:
        report._bump(fail, f"hilbert series identity [{tag}]", cx)
    depth = depth_report(cx, F).depth
    if sdepth_of(dec) < depth:
        report._bump(fail, f"sdepth >= depth [{tag}]", cx)
    if any(s.Z not in cx.facets for s in dec.spaces):
        report._bump(fail, f"induced partition is facet-topped [{tag}]", cx)
    k = (cx.existing_vertices & -cx.existing_vertices).bit_length()
    bit = 1 << (k - 1)
    for s in dec.spaces:
        if s.Z & bit and not s.u & bit:
            report._bump(fail, f"link and deletion branches separate [{tag}]", cx)
            break
    report._bump(report.notes, f"2cm codim-3 decompositions verified [{tag}]")


def run_census(max_n: int, fields: list[FieldSpec], guard_n: int | None = None, progress=None) -> CensusReport:
    guards.check("census_n", max_n, guard_n)
    report = CensusReport(list(fields), max_n)
    start = time.perf_counter()
    for n in range(1, max_n + 1):
        count = 0
        for cx in pure_complexes(n):
            _check_complex(cx, report.fields, report)
            count += 1
        report.counts[n] = count
        if progress is not None:
            progress(n, count)
    report.elapsed = time.perf_counter() - start
    return report


def find_in_census(max_n: int, predicate):
    """First census complex satisfying ``predicate`` (for tests and demos)."""
    for n in range(1, max_n + 1):
        for cx in pure_complexes(n):
            if predicate(cx):
                return cx
    return None


__all__ = ["CensusReport", "IMPLICATIONS", "find_in_census", "pure_complexes", "run_census"]
