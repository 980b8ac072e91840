"""Glicci certificates: chains of cone peelings and basic double links.

A certificate replays the weak vertex decomposition of a complex.  A link
branch at ``k`` becomes the basic double link ``I = x_k J + c`` with
``J = I : x_k`` and ``c`` the generators of ``I`` avoiding ``x_k``; the
resulting ``J`` is the ideal of a cone with apex ``k``, so it is followed by a
cone peeling that drops ``x_k`` from the ring.  The chain stops once the
ideal is generated by variables.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

from .complex import SimplicialComplex, full_mask, mask_of, popcount
from .errors import NotPure, NotWeaklyVertexDecomposable, ParseError, UnitIdeal
from .fields import FieldSpec
from .ideal import (
    SquarefreeMonomialIdeal,
    bdl_compose,
    codim_report,
    colon_by_variable,
    complex_of_ideal,
    is_complete_intersection,
    stanley_reisner_ideal,
    variable_free_part,
)
from .recognizers import is_cm_fast, wvd_failure_trace, wvd_witness

PEEL = "peel"
BDL = "bdl"


@dataclass(frozen=True)
class CertificateStep:
    kind: str  # PEEL or BDL
    vertex: int
    before: SquarefreeMonomialIdeal
    after: SquarefreeMonomialIdeal
    cm_ideal: SquarefreeMonomialIdeal | None
    field: FieldSpec


@dataclass(frozen=True)
class GlicciCertificate:
    n: int
    field: FieldSpec
    start: SquarefreeMonomialIdeal
    steps: tuple[CertificateStep, ...]
    terminal: SquarefreeMonomialIdeal

    def with_field(self, field: FieldSpec) -> "GlicciCertificate":
        steps = tuple(replace(s, field=field) for s in self.steps)
        return replace(self, field=field, steps=steps)

    def to_dict(self) -> dict:
        steps = []
        for s in self.steps:
            entry = {"kind": s.kind, "k": s.vertex, "I": s.before.gen_lists(), "J": s.after.gen_lists()}
            entry["c"] = s.cm_ideal.gen_lists() if s.cm_ideal is not None else []
            steps.append(entry)
        return {
            "n": self.n,
            "field": str(self.field),
            "start": self.start.gen_lists(),
            "steps": steps,
            "terminal": self.terminal.gen_lists(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass(frozen=True)
class CertificateCheck:
    valid: bool
    step: int | None = None
    condition: str | None = None
    message: str = ""

    def __bool__(self):
        return self.valid

    def to_dict(self) -> dict:
        return {"valid": self.valid, "step": self.step, "condition": self.condition, "message": self.message}


def build_glicci_certificate(
    cx: SimplicialComplex, field: FieldSpec, order: str = "descending"
) -> GlicciCertificate:
    if not cx.is_pure():
        raise NotPure("certificates are built for pure complexes")
    path = wvd_witness(cx, field, order)
    if path is None:
        raise NotWeaklyVertexDecomposable(
            f"complex is not weakly vertex-decomposable over {field}",
            wvd_failure_trace(cx, field, order),
        )
    ideal = stanley_reisner_ideal(cx)
    start = ideal
    node = cx
    steps: list[CertificateStep] = []
    for k, branch in path:
        if branch == "cone":
            peeled = ideal.with_ground(ideal.ground & ~(1 << (k - 1)))
            steps.append(CertificateStep(PEEL, k, ideal, peeled, None, field))
            ideal = peeled
            node = node.deletion([k])
            continue
        J = colon_by_variable(ideal, k)
        c = variable_free_part(ideal, k)
        steps.append(CertificateStep(BDL, k, ideal, J, c, field))
        node = node.link([k])
        if len(node.facets) == 1:
            ideal = J
            break
        peeled = J.with_ground(J.ground & ~(1 << (k - 1)))
        steps.append(CertificateStep(PEEL, k, J, peeled, None, field))
        ideal = peeled
    return GlicciCertificate(cx.n, field, start, tuple(steps), ideal)


def _check_bdl(step: CertificateStep) -> tuple[str, str] | None:
    J, c, k, field = step.after, step.cm_ideal, step.vertex, step.field
    if c is None:
        return "a", "basic double link step carries no c"
    if J.involves(k) or c.involves(k):
        return "a", f"x{k} divides a minimal generator of J or c"
    if not J.contains_ideal(c):
        return "b", "c is not contained in J"
    try:
        c_cx = complex_of_ideal(c)
        J_rep = codim_report(J)
        c_rep = codim_report(c)
    except UnitIdeal:
        return "d", "J or c is the unit ideal"
    if not is_cm_fast(c_cx, field):
        return "c", f"S/c is not Cohen-Macaulay over {field}"
    if not J_rep.unmixed:
        return "d", "J is not unmixed"
    if J_rep.codim != c_rep.codim + 1:
        return "e", f"codim J = {J_rep.codim} but codim c = {c_rep.codim}"
    if bdl_compose(J, c, k) != step.before:
        return "f", "I differs from x_k J + c"
    return None


def _check_peel(step: CertificateStep) -> tuple[str, str] | None:
    bit = 1 << (step.vertex - 1)
    before, after = step.before, step.after
    if not before.ground & bit:
        return "peel", f"x{step.vertex} is not a variable of the ring"
    if before.involves(step.vertex):
        return "peel", f"vertex {step.vertex} is not in every facet"
    if after.gens != before.gens or after.ground != before.ground & ~bit:
        return "peel", "peeled ideal does not match"
    return None


def verify_glicci_certificate(cert: GlicciCertificate) -> CertificateCheck:
    """Recheck every step's hypotheses independently of how it was built."""
    current = cert.start
    for idx, step in enumerate(cert.steps):
        if step.before != current:
            return CertificateCheck(False, idx, "chain", "step does not start where the previous one ended")
        bad = _check_bdl(step) if step.kind == BDL else _check_peel(step) if step.kind == PEEL else ("kind", "unknown")
        if bad is not None:
            return CertificateCheck(False, idx, bad[0], bad[1])
        current = step.after
    if cert.terminal != current:
        return CertificateCheck(False, None, "terminal", "terminal ideal does not end the chain")
    if current.is_unit or not is_complete_intersection(current):
        return CertificateCheck(False, None, "terminal", "terminal ideal is not a complete intersection")
    return CertificateCheck(True, message="all steps verified")


def certificate_length_stats(cert: GlicciCertificate) -> tuple[int, int]:
    peels = sum(1 for s in cert.steps if s.kind == PEEL)
    links = sum(1 for s in cert.steps if s.kind == BDL)
    return peels, links


def certificate_from_dict(data: dict) -> GlicciCertificate:
    try:
        n = int(data["n"])
        field = FieldSpec.parse(data["field"])
        ground = full_mask(n)
        start = SquarefreeMonomialIdeal.from_lists(n, data.get("start", data["steps"][0]["I"] if data["steps"] else data["terminal"]))
        steps = []
        for entry in data["steps"]:
            kind, k = entry["kind"], int(entry["k"])
            before = SquarefreeMonomialIdeal(n, [mask_of(g) for g in entry["I"]], ground)
            if kind == PEEL:
                ground &= ~(1 << (k - 1))
            after = SquarefreeMonomialIdeal(n, [mask_of(g) for g in entry["J"]], ground)
            c = SquarefreeMonomialIdeal(n, [mask_of(g) for g in entry.get("c", [])], ground) if kind == BDL else None
            steps.append(CertificateStep(kind, k, before, after, c, field))
        terminal = SquarefreeMonomialIdeal(n, [mask_of(g) for g in data["terminal"]], ground)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ParseError(f"malformed certificate: {exc}") from None
    return GlicciCertificate(n, field, start, tuple(steps), terminal)


def load_certificate(text: str) -> GlicciCertificate:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    return certificate_from_dict(data)


def descends(cert: GlicciCertificate) -> bool:
    """Each basic double link passes to a proper subcomplex of the same codimension."""
    for s in cert.steps:
        if s.kind != BDL:
            continue
        big = complex_of_ideal(s.before)
        small = complex_of_ideal(s.after)
        if small == big or not all(any(f & ~g == 0 for g in big.facets) for f in small.facets):
            return False
        if codim_report(s.before).codim != codim_report(s.after).codim:
            return False
    return True


def chain_ideals(cert: GlicciCertificate) -> list[SquarefreeMonomialIdeal]:
    out = [cert.start]
    out.extend(s.after for s in cert.steps)
    return out


def ground_size(ideal: SquarefreeMonomialIdeal) -> int:
    return popcount(ideal.ground)
