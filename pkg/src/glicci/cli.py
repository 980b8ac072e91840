"""Command-line interface: ``glicci <command> ...``.

Mathematical negatives (not CM, no certificate, ...) are reported with exit
status 0.  Status 2 means bad input or a tripped size guard; the census
exits 1 when it finds a violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .complex import SimplicialComplex, load_complex, vertices_of
from .errors import GlicciError, NotPure, NotWeaklyVertexDecomposable
from .fields import FieldSpec
from .homology import hochster_betti, reduced_homology
from .ideal import stanley_reisner_ideal
from .recognizers import all_verdicts

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


def _load(spec: str) -> SimplicialComplex:
    if spec.startswith("corpus:"):
        from .corpus import load_entry

        try:
            return load_entry(spec.split(":", 1)[1]).complex
        except KeyError:
            raise GlicciError(f"unknown corpus id {spec!r}") from None
    return load_complex(spec)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_info(args) -> int:
    cx = _load(args.file)
    f = cx.f_vector()
    nonfaces = stanley_reisner_ideal(cx).gen_lists()
    purity = "pure" if cx.is_pure() else "not pure"
    payload = {
        "n": cx.n,
        "dim": cx.dim,
        "pure": cx.is_pure(),
        "f_vector": list(f),
        "reduced_euler": cx.reduced_euler(),
        "minimal_nonfaces": nonfaces,
    }
    lines = [
        f"n {cx.n}",
        f"dim {cx.dim}, {purity}, f=({','.join(map(str, f))}), {len(nonfaces)} nonfaces",
        f"reduced Euler characteristic {cx.reduced_euler()}",
    ]
    lines += ["nonface " + " ".join(map(str, g)) for g in nonfaces]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_betti(args) -> int:
    cx = _load(args.file)
    table = hochster_betti(cx, args.field)
    _emit(args, table.to_dict(), f"Betti table over {args.field}\n{table.render()}")
    return EXIT_OK


def cmd_props(args) -> int:
    cx = _load(args.file)
    verdicts = all_verdicts(cx, args.field, any_labeling=args.any_labeling)
    payload = {"field": str(args.field), "verdicts": [v.to_dict() for v in verdicts]}
    if not args.witness:
        for v in payload["verdicts"]:
            v.pop("witness")
    lines = []
    for v in verdicts:
        line = f"{v.property:<24} {'yes' if v.value else 'no'}"
        if args.witness and v.witness is not None:
            line += "  " + json.dumps(v.witness, sort_keys=True)
        lines.append(line)
    homology = reduced_homology(cx, args.field)
    lines.append(f"reduced homology over {args.field}: " + " ".join(
        f"H{i}={homology[i]}" for i in range(-1, cx.dim + 1)
    ))
    payload["reduced_homology"] = list(homology.dims)
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _format_trace(trace: list[dict]) -> str:
    lines = []
    for node in trace:
        lines.append(f"node {node['node']}: facets {node['facets']}")
        for cand in node["candidates"]:
            reason = cand["link"] if "link_node" not in cand else f"link not WVD (node {cand['link_node']})"
            if "cone_node" in cand:
                reason = f"cone point; deletion not WVD (node {cand['cone_node']})"
            lines.append(f"  k={cand['k']}: {reason}")
    return "\n".join(lines)


def cmd_glicci(args) -> int:
    from .liaison import build_glicci_certificate, certificate_length_stats, verify_glicci_certificate

    cx = _load(args.file)
    try:
        cert = build_glicci_certificate(cx, args.field)
    except NotWeaklyVertexDecomposable as exc:
        payload = {"certificate": None, "field": str(args.field), "trace": exc.trace}
        _emit(args, payload, f"no certificate: {exc}\n{_format_trace(exc.trace)}")
        return EXIT_OK
    except NotPure as exc:
        _emit(args, {"certificate": None, "reason": str(exc)}, f"no certificate: {exc}")
        return EXIT_OK
    check = verify_glicci_certificate(cert)
    peels, links = certificate_length_stats(cert)
    if args.json:
        print(cert.to_json())
        return EXIT_OK
    lines = [f"certificate over {args.field}: {links} basic double links, {peels} cone peelings"]
    for s in cert.steps:
        if s.kind == "bdl":
            lines.append(f"  bdl k={s.vertex}: I = x{s.vertex}*{s.after} + {s.cm_ideal}")
        else:
            lines.append(f"  peel k={s.vertex}: drop x{s.vertex} from {s.before}")
    lines.append(f"terminal {cert.terminal} (complete intersection)")
    lines.append("verified" if check else f"INVALID at step {check.step}: {check.condition} {check.message}")
    print("\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    from .liaison import load_certificate, verify_glicci_certificate

    with open(args.file, encoding="utf-8") as fh:
        cert = load_certificate(fh.read())
    if args.field is not None:
        cert = cert.with_field(args.field)
    check = verify_glicci_certificate(cert)
    text = "valid" if check else f"invalid at step {check.step}, condition ({check.condition}): {check.message}"
    _emit(args, check.to_dict(), text)
    return EXIT_OK


def _intervals_text(spaces) -> str:
    return "\n".join(
        f"[{{{','.join(map(str, vertices_of(s.u)))}}}, {{{','.join(map(str, vertices_of(s.Z)))}}}]"
        for s in spaces
    ) or "(none)"


def cmd_stanley(args) -> int:
    from .stanley import depth_vs_sdepth

    cx = _load(args.file)
    rep = depth_vs_sdepth(cx, args.field, args.guard_n)
    text = (
        f"route {rep.route}; depth {rep.depth}, sdepth of decomposition {rep.sdepth_lower_bound}, "
        f"depth <= sdepth: {'yes' if rep.conjecture_holds else 'no'}\n"
        + _intervals_text(rep.decomposition.sorted_spaces())
    )
    _emit(args, rep.to_dict(), text)
    return EXIT_OK


def cmd_partition(args) -> int:
    from .stanley import is_partitionable

    cx = _load(args.file)
    try:
        verdict = is_partitionable(cx, args.guard_n)
    except NotPure as exc:
        _emit(args, {"partitionable": None, "reason": str(exc)}, f"not partitioned: {exc}")
        return EXIT_OK
    if not verdict:
        _emit(args, {"partitionable": False, "intervals": None}, "not partitionable")
        return EXIT_OK
    intervals = verdict.witness["intervals"]
    lines = [f"partitionable: {len(intervals)} intervals"]
    lines += [f"[{{{','.join(map(str, i['F']))}}}, {{{','.join(map(str, i['G']))}}}]" for i in intervals]
    _emit(args, {"partitionable": True, **verdict.witness}, "\n".join(lines))
    return EXIT_OK


def cmd_census(args) -> int:
    from .census import run_census

    fields = [FieldSpec.parse(tok) for tok in args.fields.split(",") if tok]

    def progress(n, count):
        if not args.json:
            print(f"n={n}: {count} complexes", file=sys.stderr)

    report = run_census(args.max_n, fields, args.guard_n, progress)
    _emit(args, report.to_dict(), report.render())
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_corpus(args) -> int:
    from .corpus import load_corpus, verify_entry

    payload = {}
    lines = []
    for entry in load_corpus():
        bad = verify_entry(entry) if args.check else []
        payload[entry.id] = {"provenance": entry.provenance, "facets": entry.complex.facet_lists(), "mismatches": bad}
        status = "" if not args.check else ("  ok" if not bad else "  MISMATCH " + ", ".join(bad))
        lines.append(f"{entry.id:<24} {entry.provenance}{status}")
    _emit(args, payload, "\n".join(lines))
    failed = any(v["mismatches"] for v in payload.values())
    return EXIT_VIOLATION if failed else EXIT_OK


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except GlicciError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--guard-n", type=int, default=None, help="override the size guards")

    with_field = argparse.ArgumentParser(add_help=False)
    with_field.add_argument("--field", type=_field, default=FieldSpec.rationals(), help="q or gf:p (default q)")

    parser = argparse.ArgumentParser(prog="glicci", description="Stanley-Reisner liaison toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, parents, file_help="complex file or corpus:<id>"):
        p = sub.add_parser(name, help=help_text, parents=parents)
        if file_help:
            p.add_argument("file", help=file_help)
        p.set_defaults(func=func)
        return p

    add("info", cmd_info, "basic combinatorics", [common])
    add("betti", cmd_betti, "graded Betti table", [common, with_field])
    p = add("props", cmd_props, "all property verdicts", [common, with_field])
    p.add_argument("--witness", action="store_true", help="include witnesses")
    p.add_argument("--any-labeling", action="store_true", help="test shiftedness under relabelling")
    add("glicci", cmd_glicci, "build a glicci certificate", [common, with_field])
    p = add("verify", cmd_verify, "verify a certificate JSON file", [common], "certificate JSON file")
    p.add_argument("--field", type=_field, default=None, help="replay the certificate over this field")
    add("stanley", cmd_stanley, "Stanley decomposition and depth <= sdepth", [common, with_field])
    add("partition", cmd_partition, "facet-topped interval partition", [common])
    p = add("census", cmd_census, "exhaustive property census", [common], None)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--fields", default="q,gf:2,gf:3")
    p = add("corpus", cmd_corpus, "list the bundled examples", [common], None)
    p.add_argument("--check", action="store_true", help="re-verify every fixture")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    saved = os.environ.get("GLICCI_GUARD_N")
    if args.guard_n is not None:
        os.environ["GLICCI_GUARD_N"] = str(args.guard_n)
    try:
        return args.func(args)
    except (GlicciError, OSError) as exc:
        print(f"glicci: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    finally:
        if saved is None:
            os.environ.pop("GLICCI_GUARD_N", None)
        else:
            os.environ["GLICCI_GUARD_N"] = saved


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

