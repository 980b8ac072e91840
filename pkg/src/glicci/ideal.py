"""Squarefree monomial ideals and the Stanley-Reisner dictionary.

An ideal lives in the polynomial ring whose variables are the elements of
``ground`` (a bitmask over [n], all of [n] by default).  Generators are
stored as their supports and are always kept inclusion-minimal.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .complex import (
    SimplicialComplex,
    face_key,
    full_mask,
    mask_of,
    minimal_sets,
    popcount,
    vertices_of,
)
from .errors import NotSubideal, ParseError, UnitIdeal, VariableCollision, VertexOutOfRange


class SquarefreeMonomialIdeal:
    __slots__ = ("n", "ground", "gens")

    def __init__(self, n: int, gens: Iterable[int], ground: int | None = None):
        self.n = n
        self.ground = full_mask(n) if ground is None else ground
        gens = minimal_sets(gens)
        if any(g & ~self.ground for g in gens):
            raise VertexOutOfRange("generator uses a variable outside the ground set")
        self.gens: tuple[int, ...] = tuple(sorted(gens, key=face_key))

    @classmethod
    def from_lists(cls, n: int, gens: Iterable[Iterable[int]], ground: Iterable[int] | None = None):
        masks = []
        for g in gens:
            g = list(g)
            if any(v < 1 or v > n for v in g):
                raise VertexOutOfRange(f"variable index outside [1, {n}] in {g}")
            masks.append(mask_of(g))
        return cls(n, masks, None if ground is None else mask_of(ground))

    @classmethod
    def variables(cls, n: int, indices: Iterable[int], ground: int | None = None):
        return cls(n, [1 << (i - 1) for i in indices], ground)

    def __eq__(self, other):
        if not isinstance(other, SquarefreeMonomialIdeal):
            return NotImplemented
        return (self.n, self.ground, self.gens) == (other.n, other.ground, other.gens)

    def __hash__(self):
        return hash((self.n, self.ground, self.gens))

    def __repr__(self):
        return f"SquarefreeMonomialIdeal({self.n}, {self.gen_lists()})"

    def __str__(self):
        if not self.gens:
            return "(0)"
        parts = ["1" if g == 0 else "".join(f"x{v}" for v in vertices_of(g)) for g in self.gens]
        return "(" + ", ".join(parts) + ")"

    def gen_lists(self) -> list[list[int]]:
        return [list(vertices_of(g)) for g in self.gens]

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == (0,)

    def contains_monomial(self, support: int) -> bool:
        return any(g & ~support == 0 for g in self.gens)

    def contains_ideal(self, other: "SquarefreeMonomialIdeal") -> bool:
        return all(self.contains_monomial(g) for g in other.gens)

    def involves(self, k: int) -> bool:
        bit = 1 << (k - 1)
        return any(g & bit for g in self.gens)

    def with_ground(self, ground: int) -> "SquarefreeMonomialIdeal":
        return SquarefreeMonomialIdeal(self.n, self.gens, ground)

    def same_generators(self, other: "SquarefreeMonomialIdeal") -> bool:
        return self.n == other.n and self.gens == other.gens

    def to_text(self) -> str:
        return "".join(" ".join(map(str, vertices_of(g))) + "\n" for g in self.gens)

    def to_dict(self) -> dict:
        return {"n": self.n, "gens": self.gen_lists()}


@dataclass(frozen=True)
class IdealCodimReport:
    codim: int
    unmixed: bool
    dim_quotient: int


def stanley_reisner_ideal(cx: SimplicialComplex) -> SquarefreeMonomialIdeal:
    return SquarefreeMonomialIdeal(cx.n, cx.minimal_nonfaces())


def complex_of_ideal(ideal: SquarefreeMonomialIdeal) -> SimplicialComplex:
    """Complex of subsets of the ground set that contain no generator."""
    if ideal.is_unit:
        raise UnitIdeal("the unit ideal has no associated complex")
    gens = ideal.gens
    # Grow faces one vertex at a time; stop at sets that cannot be enlarged.
    facets = []
    frontier = {0}
    seen = {0}
    ground_bits = [1 << v for v in range(ideal.n) if ideal.ground >> v & 1]
    while frontier:
        nxt = set()
        for face in frontier:
            grown = False
            for bit in ground_bits:
                if face & bit:
                    continue
                cand = face | bit
                if any(g & ~cand == 0 for g in gens):
                    continue
                grown = True
                if cand not in seen:
                    seen.add(cand)
                    nxt.add(cand)
            if not grown:
                facets.append(face)
        frontier = nxt
    return SimplicialComplex(ideal.n, facets)


def colon_by_variable(ideal: SquarefreeMonomialIdeal, k: int) -> SquarefreeMonomialIdeal:
    """``I : x_k`` for a squarefree monomial ideal."""
    if k < 1 or k > ideal.n:
        raise VertexOutOfRange(f"variable {k} not in [1, {ideal.n}]")
    bit = 1 << (k - 1)
    return SquarefreeMonomialIdeal(ideal.n, [g & ~bit for g in ideal.gens], ideal.ground)


def variable_free_part(ideal: SquarefreeMonomialIdeal, k: int) -> SquarefreeMonomialIdeal:
    """Generators of ``ideal`` not divisible by ``x_k``."""
    bit = 1 << (k - 1)
    return SquarefreeMonomialIdeal(ideal.n, [g for g in ideal.gens if not g & bit], ideal.ground)


def bdl_compose(
    J: SquarefreeMonomialIdeal, c: SquarefreeMonomialIdeal, k: int
) -> SquarefreeMonomialIdeal:
    """Return the minimal generators of ``x_k J + c``."""
    if J.involves(k) or c.involves(k):
        raise VariableCollision(f"x{k} divides a generator of J or c")
    if not J.contains_ideal(c):
        raise NotSubideal("c is not contained in J")
    bit = 1 << (k - 1)
    return SquarefreeMonomialIdeal(J.n, [g | bit for g in J.gens] + list(c.gens), J.ground | c.ground)


def codim_report(ideal: SquarefreeMonomialIdeal) -> IdealCodimReport:
    cx = complex_of_ideal(ideal)
    dim_q = cx.dim + 1
    return IdealCodimReport(popcount(ideal.ground) - dim_q, cx.is_pure(), dim_q)


def is_complete_intersection(ideal: SquarefreeMonomialIdeal) -> bool:
    if ideal.is_unit:
        raise UnitIdeal("the unit ideal is not a complete intersection")
    seen = 0
    for g in ideal.gens:
        if g & seen:
            return False
        seen |= g
    return True


def parse_ideal_text(text: str, n: int) -> SquarefreeMonomialIdeal:
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            gen = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"non-integer variable index in {line!r}", lineno) from None
        if any(v < 1 or v > n for v in gen):
            raise ParseError(f"variable index outside [1, {n}]", lineno)
        gens.append(mask_of(gen))
    return SquarefreeMonomialIdeal(n, gens)


def parse_ideal_json(text: str) -> SquarefreeMonomialIdeal:
    data = json.loads(text)
    return SquarefreeMonomialIdeal.from_lists(int(data["n"]), data["gens"])

