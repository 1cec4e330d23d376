"""Command-line surface: batch computations over manifold descriptors.

Every subcommand works against one descriptor (bundled name or JSON path),
prints a deterministic plain-text report, and with --json emits a
machine-readable payload instead.  Exit codes: 0 success, 1 domain error
(stable error[code] line on stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .commensurability import classify_pair, symmetry_orbit, volume_minimality_gate
from .covers import FibrationPair, analyze_cover, kernel_image_gcd, search_nonsymmetric
from .descriptor import (
    ManifoldDescriptor,
    face_of,
    resolve_class,
    resolve_descriptor,
    resolve_face,
)
from .entropy import (
    EntropyRecord,
    concavity_probe,
    ent_at_face_point,
    normalized_entropy,
)
from .errors import DomainError, NotOnFace, ValidationError
from .lattice import CohomologyClass
from .norm import FiberedFace, cone_contains, enumerate_primitive_classes, evaluate_norm

_CLASS_RE = re.compile(r"^(?:[A-Za-z_][A-Za-z0-9_]*|-?\d+(?:,-?\d+)*)$")
_POINT_RE = re.compile(r"^(?:[A-Za-z_][A-Za-z0-9_]*|[+-]?\d+(?:/\d+)?(?:,[+-]?\d+(?:/\d+)?)*)$")
_FACE_RE = re.compile(r"^-?\d+(?:,-?\d+)*$")


@dataclass
class Report:
    """Plain-text lines plus the machine payload of one command run."""

    lines: list[str] = field(default_factory=list)
    payload: dict = field(default_factory=dict)
    json_mode: bool = False
    is_error: bool = False


def fmt_real(x: float) -> str:
    return f"{x:.12g}"


def fmt_class(w: CohomologyClass) -> str:
    return ",".join(str(c) for c in w.coords)


def fmt_vertex(v: tuple[int, ...]) -> str:
    return ",".join(str(c) for c in v)


def fmt_bool(b: bool) -> str:
    return "yes" if b else "no"


def _table(rows: Sequence[Sequence[str]]) -> list[str]:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]


# ---------------------------------------------------------------------------
# argument syntax (argparse types reject malformed values with exit 2)


def _class_token(text: str) -> str:
    if not _CLASS_RE.match(text):
        raise argparse.ArgumentTypeError(f"{text!r} is not a class label or comma-separated integers")
    return text


def _point_token(text: str) -> str:
    if not _POINT_RE.match(text):
        raise argparse.ArgumentTypeError(f"{text!r} is not a class label or comma-separated rationals")
    return text


def _face_token(text: str) -> str:
    if not _FACE_RE.match(text):
        raise argparse.ArgumentTypeError(f"{text!r} is not a face id or vertex coordinates")
    return text


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"{text!r} is not a rational number") from None


def _int_at_least(minimum: int) -> Callable[[str], int]:
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
        if value < minimum:
            raise argparse.ArgumentTypeError(f"value must be at least {minimum}")
        return value

    return parse


def _resolve_point(desc: ManifoldDescriptor, token: str) -> tuple[Fraction, ...]:
    """A rational point given as a label or comma-separated fractions."""
    if re.match(r"^[A-Za-z_]", token):
        return tuple(Fraction(c) for c in resolve_class(desc, token).coords)
    try:
        coords = tuple(Fraction(part) for part in token.split(","))
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"cannot parse point {token!r}") from None
    if len(coords) != desc.betti:
        raise ValidationError(f"point {token!r} has {len(coords)} coordinates, descriptor has betti {desc.betti}")
    return coords


def _require_fibered(face: FiberedFace) -> None:
    if not face.fibered:
        raise ValidationError(f"face {face.id} is not marked fibered; entropy data is undefined there")


def _face_display(face: FiberedFace) -> str:
    return f"{face.id} (vertex {fmt_vertex(face.supporting_vertex)})"


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_norm_eval(desc: ManifoldDescriptor, args: argparse.Namespace) -> Report:
    w = resolve_class(desc, args.klass)
    value = evaluate_norm(desc.ball, w)
    return Report(
        lines=[f"class: {fmt_class(w)}", f"norm: {value}"],
        payload={"command": "norm-eval", "class": list(w.coords), "norm": str(value)},
    )


def _cmd_faces(desc: ManifoldDescriptor, args: argparse.Namespace) -> Report:
    rows = [["id", "vertex", "fibered", "polynomial"]]
    payload_faces = []
    for face in desc.faces:
        rows.append(
            [str(face.id), fmt_vertex(face.supporting_vertex), fmt_bool(face.fibered), fmt_bool(face.polynomial is not None)]
        )
        payload_faces.append(
            {
                "id": face.id,
                "vertex": list(face.supporting_vertex),
                "fibered": face.fibered,
                "has_polynomial": face.polynomial is not None,
            }
        )
    return Report(
        lines=[f"manifold: {desc.name}", f"faces: {len(desc.faces)}"] + _table(rows),
        payload={"command": "faces", "manifold": desc.name, "count": len(desc.faces), "faces": payload_faces},
    )


def _cmd_enumerate(desc: ManifoldDescriptor, args: argparse.Namespace) -> Report:
    face = resolve_face(desc, args.face)
    classes = enumerate_primitive_classes(face, desc.ball, args.max_norm)
    rows = [["class", "norm"]]
    payload_rows = []
    for w in classes:
        nrm = evaluate_norm(desc.ball, w)
        rows.append([fmt_class(w), str(nrm)])
        payload_rows.append({"class": list(w.coords), "norm": str(nrm)})
    lines = [f"face: {_face_display(face)}", f"max norm: {args.max_norm}", f"count: {len(classes)}"]
    if classes:
        lines += _table(rows)
    return Report(
        lines=lines,
        payload={
            "command": "enumerate",
            "face": face.id,
            "max_norm": args.max_norm,
            "count": len(classes),
            "classes": payload_rows,
        },
    )


def _record_payload(rec: EntropyRecord) -> dict:
    return {
        "class": list(rec.fibration_class.coords),
        "norm": str(rec.norm),
        "dilatation": rec.dilatation,
        "entropy": rec.entropy,
    }


def _cmd_entropy(desc: ManifoldDescriptor, args: argparse.Namespace) -> Report:
    w = resolve_class(desc, args.klass)
    face = face_of(desc, w)
    _require_fibered(face)
    rec = normalized_entropy(desc.ball, face, w)
    return Report(
        lines=[
            f"class: {fmt_class(w)}",
            f"face: {_face_display(face)}",
            f"norm: {rec.norm}",
            f"dilatation: {fmt_real(rec.dilatation)}",
            f"entropy: {fmt_real(rec.entropy)}",
        ],
        payload={"command": "entropy", "face": face.id, **_record_payload(rec)},
    )


def _write_csv(path: str, records: list[EntropyRecord]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["class", "norm", "dilatation", "entropy"])
        for rec in records:
            writer.writerow(
                [fmt_class(rec.fibration_class), str(rec.norm), fmt_real(rec.dilatation), fmt_real(rec.entropy)]
            )


def _svg_curve(samples: list[tuple[Fraction, float]], label_from: str, label_to: str) -> str:
    ys = [y for _, y in samples]
    lo, hi = min(ys), max(ys)
    if hi - lo < 1e-12:
        pad = max(abs(hi), 1.0) * 1e-6
    else:
        pad = (hi - lo) * 0.08
    lo -= pad
    hi += pad

    def px(s: Fraction) -> float:
        return 60.0 + float(s) * 540.0

    def py(y: float) -> float:
        return 360.0 - (y - lo) / (hi - lo) * 320.0

    points = " ".join(f"{px(s):.2f},{py(y):.2f}" for s, y in samples)
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 640 400" font-family="monospace" font-size="12">',
        '<rect x="0" y="0" width="640" height="400" fill="white"/>',
        '<line x1="60" y1="40" x2="60" y2="360" stroke="black" stroke-width="1"/>',
        '<line x1="60" y1="360" x2="600" y2="360" stroke="black" stroke-width="1"/>',
        f'<polyline fill="none" stroke="#1a466b" stroke-width="1.5" points="{points}"/>',
        f'<text x="64" y="30">1/ent along the face segment {label_from} to {label_to}</text>',
        f'<text x="8" y="364">{lo + pad:.6g}</text>',
        f'<text x="8" y="44">{hi - pad:.6g}</text>',
        f'<text x="60" y="380">{label_from}</text>',
        f'<text x="540" y="380">{label_to}</text>',
        "</svg>",
    ]
    return "\n".join(parts) + "\n"


def _cmd_entropy_table(desc: ManifoldDescriptor, args: argparse.Namespace) -> Report:
    face = resolve_face(desc, args.face)
    _require_fibered(face)
    classes = enumerate_primitive_classes(face, desc.ball, args.max_norm)
    records = [normalized_entropy(desc.ball, face, w) for w in classes]
    rows = [["class", "norm", "dilatation", "entropy"]]
    for rec in records:
        rows.append([fmt_class(rec.fibration_class), str(rec.norm), fmt_real(rec.dilatation), fmt_real(rec.entropy)])
    lines = [f"face: {_face_display(face)}", f"max norm: {args.max_norm}", f"count: {len(records)}"]
    if records:
        lines += _table(rows)
    payload = {
        "command": "entropy-table",
        "face": face.id,
        "max_norm": args.max_norm,
        "count": len(records),
        "rows": [_record_payload(rec) for rec in records],
    }
    if args.csv:
        _write_csv(args.csv, records)
        lines.append(f"csv: {args.csv}")
        payload["csv"] = args.csv
    if args.svg:
        a = _resolve_point(desc, args.seg_from)
        b = _resolve_point(desc, args.seg_to)

        def on_face(point: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
            nrm = evaluate_norm(desc.ball, point)
            if nrm <= 0 or not cone_contains(face, desc.ball, point):
                raise NotOnFace(f"segment endpoint {tuple(str(c) for c in point)} is not over face {face.id}")
            return tuple(c / nrm for c in point)

        start, end = on_face(a), on_face(b)
        samples = []
        for i in range(args.points):
            s = Fraction(i, args.points - 1)
            mid = tuple((1 - s) * x + s * y for x, y in zip(start, end))
            mid = tuple(c / evaluate_norm(desc.ball, mid) for c in mid)
            samples.append((s, 1.0 / ent_at_face_point(desc.ball, face, mid)))
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(_svg_curve(samples, args.seg_from, args.seg_to))
        lines.append(f"svg: {args.svg}")
        payload["svg"] = args.svg
        payload["svg_samples"] = [{"s": str(s), "inverse_entropy": y} for s, y in samples]
    return Report(lines=lines, payload=payload)


def _cmd_concavity(desc: ManifoldDescriptor, args: argparse.Namespace) -> Report:
    face = resolve_face(desc, args.face)
    _require_fibered(face)
    probe = concavity_probe(desc.ball, face, _resolve_point(desc, args.p), _resolve_point(desc, args.q), args.s)
    margin = probe.lhs - probe.rhs
    return Report(
        lines=[
            f"face: {_face_display(face)}",
            f"p: {args.p}",
            f"q: {args.q}",
            f"s: {args.s}",
            f"lhs 1/ent(mid): {fmt_real(probe.lhs)}",
            f"rhs interpolation: {fmt_real(probe.rhs)}",
            f"margin: {fmt_real(margin)}",
            f"strict: {fmt_bool(probe.strict)}",
        ],
        payload={
            "command": "concavity",
            "face": face.id,
            "p": args.p,
            "q": args.q,
            "s": str(args.s),
            "lhs": probe.lhs,
            "rhs": probe.rhs,
            "margin": margin,
            "strict": probe.strict,
        },
    )


def _cmd_classify(desc: ManifoldDescriptor, args: argparse.Namespace) -> Report:
    w1 = resolve_class(desc, args.a)
    w2 = resolve_class(desc, args.b)
    f1 = face_of(desc, w1)
    f2 = face_of(desc, w2)
    _require_fibered(f1)
    _require_fibered(f2)
    verdict = classify_pair(desc.flags, desc.symmetries, desc.ball, f1, f2, w1, w2)
    lines = [
        f"a: {args.a} = {fmt_class(w1)} on face {f1.id}",
        f"b: {args.b} = {fmt_class(w2)} on face {f2.id}",
        f"verdict: {verdict.kind}",
        f"reason: {verdict.reason}",
    ]
    if "word" in verdict.witness:
        word = verdict.witness["word"]
        lines.append(f"witness word: {' '.join(word) if word else 'identity'}")
    if "gap" in verdict.witness:
        lines.append(f"entropy a: {fmt_real(verdict.witness['entropy_a'])}")
        lines.append(f"entropy b: {fmt_real(verdict.witness['entropy_b'])}")
        lines.append(f"entropy gap: {fmt_real(verdict.witness['gap'])}")
    return Report(
        lines=lines,
        payload={
            "command": "classify",
            "a": list(w1.coords),
            "b": list(w2.coords),
            "kind": verdict.kind,
            "reason": verdict.reason,
            "witness": verdict.witness,
        },
    )


def _build_pair(desc: ManifoldDescriptor, w1: CohomologyClass, w2: CohomologyClass) -> FibrationPair:
    chi1 = -int(evaluate_norm(desc.ball, w1))
    chi2 = -int(evaluate_norm(desc.ball, w2))
    conjugate = chi1 == chi2 and w2 in symmetry_orbit(desc.symmetries, w1)
    return FibrationPair(w1=w1, w2=w2, chi1=chi1, chi2=chi2, conjugate_monodromies=conjugate)


def _report_payload(report) -> dict:
    return {
        "degree": report.degree,
        "d": report.d,
        "components": report.components,
        "component_degree": report.component_degree,
        "component_chi": report.component_chi,
        "fibers_homeomorphic": report.fibers_homeomorphic,
        "nonsymmetric_commensurable": report.nonsymmetric_commensurable,
    }


def _cmd_cover(desc: ManifoldDescriptor, args: argparse.Namespace) -> Report:
    pair = _build_pair(desc, resolve_class(desc, args.w1), resolve_class(desc, args.w2))
    m = kernel_image_gcd(pair)
    rep = analyze_cover(pair, args.n)
    return Report(
        lines=[
            f"w1: {fmt_class(pair.w1)} (chi {pair.chi1})",
            f"w2: {fmt_class(pair.w2)} (chi {pair.chi2})",
            f"conjugate monodromies: {fmt_bool(pair.conjugate_monodromies)}",
            f"kernel gcd m: {m}",
            f"degree: {rep.degree}",
            f"components: {rep.components}",
            f"component degree: {rep.component_degree}",
            f"component chi: {rep.component_chi}",
            f"fibers homeomorphic: {fmt_bool(rep.fibers_homeomorphic)}",
            f"commensurable non-symmetric: {fmt_bool(rep.nonsymmetric_commensurable)}",
        ],
        payload={
            "command": "cover",
            "w1": list(pair.w1.coords),
            "w2": list(pair.w2.coords),
            "conjugate_monodromies": pair.conjugate_monodromies,
            "kernel_gcd": m,
            "report": _report_payload(rep),
        },
    )


def _cmd_cover_search(desc: ManifoldDescriptor, args: argparse.Namespace) -> Report:
    pair = _build_pair(desc, resolve_class(desc, args.w1), resolve_class(desc, args.w2))
    reports = search_nonsymmetric(pair, args.n_max)
    m = kernel_image_gcd(pair)
    degrees = [rep.degree for rep in reports]
    rows = [["degree", "components", "component degree", "component chi"]]
    for rep in reports:
        rows.append([str(rep.degree), str(rep.components), str(rep.component_degree), str(rep.component_chi)])
    lines = [
        f"w1: {fmt_class(pair.w1)}",
        f"w2: {fmt_class(pair.w2)}",
        f"kernel gcd m: {m}",
        f"threshold: every degree above {m} qualifies",
        f"qualifying degrees up to {args.n_max}: {','.join(map(str, degrees)) if degrees else 'none'}",
    ]
    if reports:
        lines += _table(rows)
    return Report(
        lines=lines,
        payload={
            "command": "cover-search",
            "w1": list(pair.w1.coords),
            "w2": list(pair.w2.coords),
            "kernel_gcd": m,
            "n_max": args.n_max,
            "qualifying": degrees,
            "reports": [_report_payload(rep) for rep in reports],
        },
    )


def _cmd_minimality(desc: ManifoldDescriptor, args: argparse.Namespace) -> Report:
    if desc.flags.volume is None:
        raise ValidationError(f"descriptor {desc.name!r} carries no volume")
    if desc.flags.cusps is None:
        raise ValidationError(f"descriptor {desc.name!r} carries no cusp count")
    gate = volume_minimality_gate(desc.flags.volume, desc.flags.cusps, args.degree)
    return Report(
        lines=[
            f"volume: {fmt_real(desc.flags.volume)}",
            f"cusps: {desc.flags.cusps}",
            f"degree: {args.degree}",
            f"quotient volume: {fmt_real(gate.quotient_volume)}",
            f"possible: {fmt_bool(gate.possible)}",
            f"reason: {gate.reason}",
        ],
        payload={
            "command": "minimality",
            "volume": desc.flags.volume,
            "cusps": desc.flags.cusps,
            "degree": args.degree,
            "quotient_volume": gate.quotient_volume,
            "possible": gate.possible,
            "reason": gate.reason,
        },
    )


# ---------------------------------------------------------------------------
# parser and dispatch


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-d",
        "--descriptor",
        default="six22",
        help="bundled descriptor name (six22, magic) or path to a descriptor JSON file",
    )
    common.add_argument("--json", action="store_true", help="emit the machine payload as JSON on stdout")

    parser = argparse.ArgumentParser(
        prog="fibercomm",
        description="Fibered-face and normalized-entropy invariants of fibered hyperbolic 3-manifolds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_norm = sub.add_parser("norm", help="Thurston norm operations")
    norm_sub = p_norm.add_subparsers(dest="norm_command", required=True)
    p_eval = norm_sub.add_parser("eval", parents=[common], help="evaluate the norm of a class")
    p_eval.add_argument("--class", dest="klass", type=_class_token, required=True, help="class label or n,m,...")
    p_eval.set_defaults(func=_cmd_norm_eval)

    p_faces = sub.add_parser("faces", parents=[common], help="list the top faces of the norm ball")
    p_faces.set_defaults(func=_cmd_faces)

    p_enum = sub.add_parser("enumerate", parents=[common], help="primitive classes in one fibered cone")
    p_enum.add_argument("--face", type=_face_token, required=True, help="face id or supporting vertex a,b,...")
    p_enum.add_argument("--max-norm", type=_int_at_least(0), required=True, help="norm bound")
    p_enum.set_defaults(func=_cmd_enumerate)

    p_ent = sub.add_parser("entropy", parents=[common], help="dilatation and normalized entropy of a class")
    p_ent.add_argument("--class", dest="klass", type=_class_token, required=True)
    p_ent.set_defaults(func=_cmd_entropy)

    p_tab = sub.add_parser("entropy-table", parents=[common], help="entropy table over one cone")
    p_tab.add_argument("--face", type=_face_token, required=True)
    p_tab.add_argument("--max-norm", type=_int_at_least(0), required=True)
    p_tab.add_argument("--csv", help="write the table as CSV to this path")
    p_tab.add_argument("--svg", help="write an SVG plot of 1/ent along a face segment to this path")
    p_tab.add_argument("--from", dest="seg_from", type=_point_token, help="segment start class (with --svg)")
    p_tab.add_argument("--to", dest="seg_to", type=_point_token, help="segment end class (with --svg)")
    p_tab.add_argument("--points", type=_int_at_least(2), default=9, help="sample count for --svg (default 9)")
    p_tab.set_defaults(func=_cmd_entropy_table)

    p_conc = sub.add_parser("concavity", parents=[common], help="strict-concavity probe of 1/ent")
    p_conc.add_argument("--face", type=_face_token, required=True)
    p_conc.add_argument("--p", type=_point_token, required=True, help="first point: label or rational coordinates")
    p_conc.add_argument("--q", type=_point_token, required=True, help="second point")
    p_conc.add_argument("--s", type=_fraction, required=True, help="interpolation parameter in (0,1)")
    p_conc.set_defaults(func=_cmd_concavity)

    p_cls = sub.add_parser("classify", parents=[common], help="classify a pair of fibration classes")
    p_cls.add_argument("--a", type=_class_token, required=True)
    p_cls.add_argument("--b", type=_class_token, required=True)
    p_cls.set_defaults(func=_cmd_classify)

    p_cov = sub.add_parser("cover", parents=[common], help="cyclic-cover component analysis at one degree")
    p_cov.add_argument("--w1", type=_class_token, required=True, help="class defining the cyclic cover")
    p_cov.add_argument("--w2", type=_class_token, required=True, help="class whose fiber is pulled back")
    p_cov.add_argument("--n", type=_int_at_least(1), required=True, help="cover degree")
    p_cov.set_defaults(func=_cmd_cover)

    p_cvs = sub.add_parser("cover-search", parents=[common], help="degrees yielding non-symmetric commensurable fibrations")
    p_cvs.add_argument("--w1", type=_class_token, required=True)
    p_cvs.add_argument("--w2", type=_class_token, required=True)
    p_cvs.add_argument("--n-max", type=_int_at_least(1), required=True)
    p_cvs.set_defaults(func=_cmd_cover_search)

    p_min = sub.add_parser("minimality", parents=[common], help="volume gate for covering with a given degree")
    p_min.add_argument("--degree", type=_int_at_least(2), required=True)
    p_min.set_defaults(func=_cmd_minimality)

    return parser


_VALUE_FLAGS = {
    "--class", "--a", "--b", "--w1", "--w2", "--p", "--q",
    "--face", "--from", "--to", "--s", "--max-norm", "--n", "--n-max",
    "--degree", "--points",
}


def _merge_negative_values(argv: Sequence[str]) -> list[str]:
    """Join flags with values that start with a minus sign ("--class -2,3").

    Argparse would otherwise read "-2,3" as an option string; merging into
    the "--flag=value" form keeps negative coordinates usable.
    """
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else ""
        if tok in _VALUE_FLAGS and len(nxt) > 1 and nxt[0] == "-" and nxt[1].isdigit():
            out.append(f"{tok}={nxt}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _post_validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if getattr(args, "command", None) == "entropy-table":
        if args.svg and (args.seg_from is None or args.seg_to is None):
            parser.error("--svg requires --from and --to")
        if (args.seg_from or args.seg_to) and not args.svg:
            parser.error("--from/--to only make sense with --svg")
    if getattr(args, "command", None) == "concavity" and not 0 < args.s < 1:
        parser.error("--s must lie strictly between 0 and 1")


def run_command(argv: Sequence[str]) -> tuple[int, Report]:
    """Parse argv, dispatch, and return (exit code, report) without printing.

    Argparse usage failures surface as exit code 2 with an empty report
    (argparse itself writes the usage message); domain errors surface as
    exit code 1 with a stable error[code] line and payload.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(_merge_negative_values(list(argv)))
        _post_validate(parser, args)
    except SystemExit as e:
        code = e.code if isinstance(e.code, int) else 2
        return code, Report(is_error=code != 0)
    try:
        desc = resolve_descriptor(args.descriptor)
        report = args.func(desc, args)
        report.json_mode = args.json
        return 0, report
    except DomainError as e:
        return 1, Report(
            lines=[f"error[{e.code}]: {e}"],
            payload={"error": {"code": e.code, "message": str(e)}},
            json_mode=args.json,
            is_error=True,
        )


def main(argv: Sequence[str] | None = None) -> int:
    code, report = run_command(sys.argv[1:] if argv is None else argv)
    if report.json_mode:
        print(json.dumps(report.payload, sort_keys=True, indent=2))
    elif report.lines:
        print("\n".join(report.lines), file=sys.stderr if report.is_error else sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
