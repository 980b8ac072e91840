"""Exact rank computations over GF(2), GF(p) and the rationals.

Vectors are sparse: ``{index: coefficient}`` dicts, or ints used as bitsets
over GF(2).  Elimination always pivots on the largest index.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping

from .fields import FieldSpec


def rank_gf2(vectors: Iterable[int]) -> int:
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            h = v.bit_length() - 1
            b = basis.get(h)
            if b is None:
                basis[h] = v
                break
            v ^= b
    return len(basis)


def rank_mod_p(vectors: Iterable[Mapping[int, int]], p: int) -> int:
    basis: dict[int, dict[int, int]] = {}
    for vec in vectors:
        v = {k: c % p for k, c in vec.items() if c % p}
        while v:
            h = max(v)
            b = basis.get(h)
            if b is None:
                inv = pow(v[h], p - 2, p)
                basis[h] = {k: c * inv % p for k, c in v.items()}
                break
            c = v[h]
            for k, bc in b.items():
                nv = (v.get(k, 0) - c * bc) % p
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
    return len(basis)


def rank_rational(vectors: Iterable[Mapping[int, int]]) -> int:
    """Fraction-free elimination on integer vectors; exact rank over Q."""
    basis: dict[int, dict[int, int]] = {}
    for vec in vectors:
        v = {k: c for k, c in vec.items() if c}
        while v:
            h = max(v)
            b = basis.get(h)
            if b is None:
                g = 0
                for c in v.values():
                    g = gcd(g, c)
                if v[h] < 0:
                    g = -g
                basis[h] = {k: c // g for k, c in v.items()}
                break
            bh, vh = b[h], v[h]
            out = {}
            for k in v.keys() | b.keys():
                c = bh * v.get(k, 0) - vh * b.get(k, 0)
                if c:
                    out[k] = c
            g = 0
            for c in out.values():
                g = gcd(g, c)
            v = {k: c // g for k, c in out.items()} if g > 1 else out
    return len(basis)


def rank(vectors: list[Mapping[int, int]], field: FieldSpec) -> int:
    """Rank of the span of integer vectors reduced into ``field``."""
    if field.p is None:
        return rank_rational(vectors)
    if field.p == 2:
        bits = []
        for vec in vectors:
            m = 0
            for k, c in vec.items():
                if c % 2:
                    m |= 1 << k
            bits.append(m)
        return rank_gf2(bits)
    return rank_mod_p(vectors, field.p)


def matrix_rank(rows: list[list[int]], field: FieldSpec) -> int:
    """Rank of a dense integer matrix given by rows."""
    return rank([{j: c for j, c in enumerate(r) if c} for r in rows], field)
