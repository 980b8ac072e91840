"""Coefficient fields: the rationals or a prime field GF(p)."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotPrime, ParseError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Only the characteristic matters for every computation here."""

    kind: str  # "Rationals" or "PrimeField"
    p: int | None = None

    def __post_init__(self):
        if self.kind == "Rationals":
            if self.p is not None:
                raise ValueError("the rationals take no modulus")
        elif self.kind == "PrimeField":
            if self.p is None or not (2 <= self.p < 2**31) or not _is_prime(self.p):
                raise NotPrime(f"{self.p!r} is not a prime below 2^31")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls("Rationals")

    @classmethod
    def gf(cls, p: int) -> "FieldSpec":
        return cls("PrimeField", p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls.rationals()
        if t.startswith("gf:"):
            try:
                p = int(t[3:])
            except ValueError:
                raise ParseError(f"bad field spec {text!r}") from None
            return cls.gf(p)
        raise ParseError(f"bad field spec {text!r}; use 'q' or 'gf:<prime>'")

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def __str__(self):
        return "q" if self.p is None else f"gf:{self.p}"


QQ = FieldSpec.rationals()
GF2 = FieldSpec.gf(2)
GF3 = FieldSpec.gf(3)
