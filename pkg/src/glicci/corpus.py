"""Bundled example complexes with their published fixtures."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from importlib import resources

from .complex import SimplicialComplex, parse_complex_text
from .fields import FieldSpec
from .homology import BettiTable, depth_report, hochster_betti, is_level
from .ideal import SquarefreeMonomialIdeal, complex_of_ideal

RP2_IDEAL = [
    [1, 2, 3], [1, 2, 4], [1, 3, 5], [1, 4, 6], [1, 5, 6],
    [2, 3, 6], [2, 4, 5], [2, 5, 6], [3, 4, 5], [3, 4, 6],
]

# Ideals as printed; each data file is the complex of its ideal.
IDEALS = {
    "ex24-four-points": (4, [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]),
    "ex52-shifted-not-level": (5, [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4, 5]]),
    "ex53-rp2": (6, RP2_IDEAL),
    "ex55-v6f10-6": (6, [
        [1, 2, 6], [1, 3, 5], [1, 4, 5], [1, 4, 6], [1, 5, 6],
        [2, 3, 4], [2, 3, 5], [2, 3, 6], [2, 4, 6], [3, 4, 5],
    ]),
    "ex54-char-dependent": (7, RP2_IDEAL + [[1, 7], [2, 7], [3, 7], [4, 7]]),
}

PROVENANCE = {
    "ex24-four-points": "four isolated vertices; a basic double link of (x1, x2, x3)",
    "ex52-shifted-not-level": "shifted one-dimensional complex, Cohen-Macaulay but not level",
    "ex53-rp2": "six-vertex real projective plane",
    "ex55-v6f10-6": "V6F10-6, extendably shellable but not vertex-decomposable",
    "ex54-char-dependent": "x7 (x1, ..., x4) + the projective plane ideal; WVD only off characteristic 2",
}

GF31013 = FieldSpec.gf(31013)

BETTI = {
    ("ex52-shifted-not-level", "q"): {0: {0: 1}, 1: {1: 5, 2: 6, 3: 2}, 2: {1: 1, 2: 2, 3: 1}},
    ("ex54-char-dependent", "gf:31013"): {
        0: {0: 1},
        1: {1: 4, 2: 6, 3: 4, 4: 1},
        2: {1: 10, 2: 25, 3: 21, 4: 6},
    },
    ("ex54-char-dependent", "gf:2"): {
        0: {0: 1},
        1: {1: 4, 2: 6, 3: 4, 4: 1},
        2: {1: 10, 2: 25, 3: 21, 4: 7, 5: 1},
        3: {3: 1, 4: 1},
    },
}

# (property, field or None) -> expected verdict
VERDICTS = {
    "ex24-four-points": {("matroid", None): True, ("2cm", "q"): True, ("gorenstein", "q"): False},
    "ex52-shifted-not-level": {
        ("shifted", None): True,
        ("cohen_macaulay", "q"): True,
        ("vertex_decomposable", None): True,
        ("level", "q"): False,
        ("2cm", "q"): False,
    },
    "ex53-rp2": {
        ("cohen_macaulay", "q"): True,
        ("cohen_macaulay", "gf:3"): True,
        ("cohen_macaulay", "gf:2"): False,
        ("weakly_vertex_decomposable", "q"): False,
    },
    "ex55-v6f10-6": {
        ("shellable", None): True,
        ("extendably_shellable", None): True,
        ("vertex_decomposable", None): False,
        ("weakly_vertex_decomposable", "q"): False,
    },
    "ex54-char-dependent": {
        ("weakly_vertex_decomposable", "gf:31013"): True,
        ("weakly_vertex_decomposable", "gf:2"): False,
    },
}

DEPTHS = {
    ("ex54-char-dependent", "gf:31013"): (3, 3),
    ("ex54-char-dependent", "gf:2"): (2, 3),
}


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    complex: SimplicialComplex
    provenance: str
    expected: dict = dc_field(default_factory=dict, hash=False)

    @property
    def ideal(self) -> SquarefreeMonomialIdeal:
        n, gens = IDEALS[self.id]
        return SquarefreeMonomialIdeal.from_lists(n, gens)


def complex_from_printed_ideal(entry_id: str) -> SimplicialComplex:
    n, gens = IDEALS[entry_id]
    return complex_of_ideal(SquarefreeMonomialIdeal.from_lists(n, gens))


def _expected(entry_id: str) -> dict:
    out: dict = {}
    for (prop, fld), value in VERDICTS.get(entry_id, {}).items():
        out[(prop, fld)] = value
    for (eid, fld), rows in BETTI.items():
        if eid == entry_id:
            out[("betti", fld)] = rows
    for (eid, fld), dd in DEPTHS.items():
        if eid == entry_id:
            out[("depth", fld)] = dd
    return out


@lru_cache(maxsize=None)
def load_entry(entry_id: str) -> CorpusEntry:
    text = resources.files("glicci.data").joinpath(f"{entry_id}.cplx").read_text()
    return CorpusEntry(entry_id, parse_complex_text(text), PROVENANCE[entry_id], _expected(entry_id))


def corpus_ids() -> list[str]:
    return list(IDEALS)


def load_corpus() -> list[CorpusEntry]:
    return [load_entry(i) for i in corpus_ids()]


def verify_entry(entry: CorpusEntry) -> list[str]:
    """Recompute every fixture of ``entry``; returns the mismatches."""
    from .recognizers import (
        is_2cm,
        is_cohen_macaulay,
        is_extendably_shellable,
        is_gorenstein,
        is_matroid,
        is_shellable,
        is_shifted,
        is_vertex_decomposable,
        is_weakly_vertex_decomposable,
    )

    by_field = {
        "cohen_macaulay": is_cohen_macaulay,
        "2cm": is_2cm,
        "gorenstein": is_gorenstein,
        "weakly_vertex_decomposable": is_weakly_vertex_decomposable,
        "level": is_level,
    }
    plain = {
        "matroid": is_matroid,
        "shifted": lambda cx: is_shifted(cx, any_labeling=True),
        "vertex_decomposable": is_vertex_decomposable,
        "shellable": is_shellable,
        "extendably_shellable": is_extendably_shellable,
    }
    cx = entry.complex
    bad = []
    if cx != complex_from_printed_ideal(entry.id):
        bad.append("bundled facets differ from the printed ideal")
    for (prop, fld), want in entry.expected.items():
        F = FieldSpec.parse(fld) if fld else None
        if prop == "betti":
            got = hochster_betti(cx, F)
            ok = got == BettiTable.from_rows(F, want)
        elif prop == "depth":
            rep = depth_report(cx, F)
            ok = (rep.depth, rep.dim) == want
        elif prop in by_field:
            ok = bool(by_field[prop](cx, F)) == want
        else:
            ok = bool(plain[prop](cx)) == want
        if not ok:
            bad.append(f"{prop} [{fld}]")
    return bad


__all__ = ["CorpusEntry", "GF31013", "corpus_ids", "load_corpus", "load_entry", "verify_entry"]
