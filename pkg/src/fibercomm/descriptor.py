"""Manifold descriptors: JSON input records, validation, bundled datasets.

A descriptor carries everything the toolkit needs about one fibered
hyperbolic 3-manifold: Betti number and basis labels, the norm data (dual
vertices or a polynomial to derive them from), per-face fibered flags and
polynomials, the symmetry action on cohomology, volume/cusp data, and named
classes.  Bundled numeric fields carry "source" annotation strings so the
provenance of every number is auditable in the JSON itself.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any, Mapping

from .commensurability import ManifoldFlags, SymmetryAction
from .errors import NotInCone, ParseError, ValidationError
from .lattice import CohomologyClass, IntMatrix
from .laurent import LaurentPolynomial
from .norm import FiberedFace, NormBall, cone_contains, norm_from_newton, top_faces

BUNDLED_NAMES = ("six22", "magic")

_LABEL_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_KNOWN_KEYS = {
    "name",
    "description",
    "notes",
    "betti",
    "basis_labels",
    "volume",
    "cusps",
    "flags",
    "symmetries",
    "norm_source",
    "faces",
    "named_classes",
    "alexander_polynomial",
}


@dataclass(frozen=True)
class ManifoldDescriptor:
    """Validated input record for one manifold."""

    name: str
    betti: int
    basis_labels: tuple[str, ...]
    flags: ManifoldFlags
    symmetries: SymmetryAction
    norm_kind: str
    ball: NormBall
    faces: tuple[FiberedFace, ...]
    named_classes: Mapping[str, CohomologyClass]
    alexander: LaurentPolynomial | None
    sources: Mapping[str, str]


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValidationError(message)


def _is_int(x: Any) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


class _Loader:
    """One-shot walk over the decoded JSON tree with path-aware messages."""

    def __init__(self, root: Any):
        _require(isinstance(root, dict), "descriptor root must be a JSON object")
        self.root: dict = root
        self.sources: dict[str, str] = {}

    def value(self, node: Any, path: str) -> Any:
        """Unwrap {"value": ..., "source": ...} nodes, recording the source."""
        if isinstance(node, dict) and "value" in node:
            src = node.get("source")
            if src is not None:
                _require(isinstance(src, str), f"{path}: source must be a string")
                self.sources[path] = src
            extra = set(node) - {"value", "source"}
            _require(not extra, f"{path}: unexpected keys {sorted(extra)}")
            return node["value"]
        return node

    def note_source(self, node: dict, path: str) -> None:
        src = node.get("source")
        if src is not None:
            _require(isinstance(src, str), f"{path}: source must be a string")
            self.sources[path] = src

    def int_vector(self, node: Any, length: int, path: str) -> tuple[int, ...]:
        _require(isinstance(node, list), f"{path}: expected a list of integers")
        _require(len(node) == length, f"{path}: expected length {length}, got {len(node)}")
        _require(all(_is_int(x) for x in node), f"{path}: entries must be integers")
        return tuple(node)

    def polynomial(self, node: Any, arity: int, path: str) -> LaurentPolynomial:
        _require(isinstance(node, dict), f"{path}: expected a polynomial object")
        extra = set(node) - {"terms", "source"}
        _require(not extra, f"{path}: unexpected keys {sorted(extra)}")
        self.note_source(node, path)
        terms = node.get("terms")
        _require(isinstance(terms, list) and terms, f"{path}: terms must be a nonempty list")
        pairs = []
        seen = set()
        for i, t in enumerate(terms):
            tp = f"{path}.terms[{i}]"
            _require(isinstance(t, dict) and set(t) <= {"exp", "coeff"}, f"{tp}: expected exp/coeff object")
            exp = self.int_vector(t.get("exp"), arity, f"{tp}.exp")
            coeff = t.get("coeff")
            _require(_is_int(coeff) and coeff != 0, f"{tp}.coeff: must be a nonzero integer")
            _require(exp not in seen, f"{tp}: duplicate exponent {list(exp)}")
            seen.add(exp)
            pairs.append((exp, coeff))
        return LaurentPolynomial.from_terms(arity, pairs)


def parse_descriptor(text: str) -> ManifoldDescriptor:
    """Parse and validate one descriptor from JSON text.

    Raises:
        ParseError: malformed JSON, with line/column position.
        ValidationError: a named invariant violation.
    """
    try:
        root = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from None
    ld = _Loader(root)
    unknown = set(root) - _KNOWN_KEYS
    _require(not unknown, f"unknown descriptor keys {sorted(unknown)}")

    name = root.get("name")
    _require(isinstance(name, str) and name, "name: required nonempty string")
    betti = root.get("betti")
    _require(_is_int(betti) and betti >= 1, "betti: required integer >= 1")

    labels = root.get("basis_labels")
    _require(isinstance(labels, list) and len(labels) == betti, f"basis_labels: expected {betti} labels")
    for lab in labels:
        _require(isinstance(lab, str) and _LABEL_RE.match(lab) is not None, f"basis_labels: bad label {lab!r}")
    _require(len(set(labels)) == betti, "basis_labels: labels must be distinct")

    volume = None
    if "volume" in root:
        raw = ld.value(root["volume"], "volume")
        _require(isinstance(raw, str), "volume: encode as a decimal string")
        try:
            volume = float(raw)
        except ValueError:
            raise ValidationError(f"volume: not a decimal number: {raw!r}") from None
    cusps = None
    if "cusps" in root:
        cusps = ld.value(root["cusps"], "cusps")
        _require(_is_int(cusps) and cusps >= 0, "cusps: must be a nonnegative integer")

    flag_node = root.get("flags", {})
    _require(isinstance(flag_node, dict), "flags: expected an object")
    extra = set(flag_node) - {"no_hidden_symmetries", "all_fibrations_minimal"}
    _require(not extra, f"flags: unknown keys {sorted(extra)}")
    flag_vals = {}
    for key in ("no_hidden_symmetries", "all_fibrations_minimal"):
        val = ld.value(flag_node.get(key, False), f"flags.{key}")
        _require(isinstance(val, bool), f"flags.{key}: must be a boolean")
        flag_vals[key] = val
    flags = ManifoldFlags(volume=volume, cusps=cusps, **flag_vals)

    sym_node = root.get("symmetries", {"generators": []})
    _require(isinstance(sym_node, dict) and set(sym_node) <= {"generators", "source"}, "symmetries: expected a generators object")
    ld.note_source(sym_node, "symmetries")
    gens = []
    gen_list = sym_node.get("generators", [])
    _require(isinstance(gen_list, list), "symmetries.generators: expected a list")
    for i, g in enumerate(gen_list):
        path = f"symmetries.generators[{i}]"
        if isinstance(g, dict):
            _require(set(g) <= {"matrix", "source"}, f"{path}: expected matrix/source keys")
            ld.note_source(g, path)
            g = g.get("matrix")
        _require(isinstance(g, list) and len(g) == betti, f"{path}: expected {betti} rows")
        rows = [list(ld.int_vector(row, betti, f"{path}[{j}]")) for j, row in enumerate(g)]
        gens.append(IntMatrix.from_rows(rows))
    symmetries = SymmetryAction(betti, tuple(gens))

    norm_node = root.get("norm_source")
    _require(isinstance(norm_node, dict), "norm_source: required object")
    kind = norm_node.get("kind")
    ld.note_source(norm_node, "norm_source")
    alexander = None
    if kind == "dual_vertices":
        _require(set(norm_node) <= {"kind", "vertices", "source"}, "norm_source: unexpected keys")
        verts = norm_node.get("vertices")
        _require(isinstance(verts, list) and verts, "norm_source.vertices: nonempty list required")
        vertices = tuple(ld.int_vector(v, betti, f"norm_source.vertices[{i}]") for i, v in enumerate(verts))
        ball = NormBall(betti, vertices)
    elif kind == "newton":
        _require(set(norm_node) <= {"kind", "polynomial", "source"}, "norm_source: unexpected keys")
        poly = ld.polynomial(norm_node.get("polynomial"), betti, "norm_source.polynomial")
        ball = norm_from_newton(poly)
    else:
        raise ValidationError(f"norm_source.kind: expected 'dual_vertices' or 'newton', got {kind!r}")

    bare_faces = top_faces(ball)
    by_id = {f.id: f for f in bare_faces}
    annotations: dict[tuple[int, ...], tuple[bool, LaurentPolynomial | None]] = {}
    face_list = root.get("faces", [])
    _require(isinstance(face_list, list), "faces: expected a list")
    seen_ids = set()
    for i, entry in enumerate(face_list):
        path = f"faces[{i}]"
        _require(isinstance(entry, dict), f"{path}: expected an object")
        extra = set(entry) - {"id", "dual_vertex", "fibered", "polynomial", "source"}
        _require(not extra, f"{path}: unexpected keys {sorted(extra)}")
        ld.note_source(entry, path)
        fid = entry.get("id")
        _require(_is_int(fid) and fid in by_id, f"{path}.id: no top face with id {fid!r}")
        _require(fid not in seen_ids, f"{path}.id: duplicate face id {fid}")
        seen_ids.add(fid)
        vertex = by_id[fid].supporting_vertex
        if "dual_vertex" in entry:
            claimed = ld.int_vector(entry["dual_vertex"], betti, f"{path}.dual_vertex")
            _require(
                claimed == vertex,
                f"{path}: dual_vertex {list(claimed)} disagrees with face {fid}, "
                f"whose supporting vertex is {list(vertex)}",
            )
        fibered = entry.get("fibered", False)
        _require(isinstance(fibered, bool), f"{path}.fibered: must be a boolean")
        poly = None
        if entry.get("polynomial") is not None:
            poly = ld.polynomial(entry["polynomial"], betti, f"{path}.polynomial")
        annotations[vertex] = (fibered, poly)
    faces = tuple(top_faces(ball, annotations))

    classes: dict[str, CohomologyClass] = {}
    named = root.get("named_classes", {})
    _require(isinstance(named, dict), "named_classes: expected an object")
    for label in sorted(named):
        path = f"named_classes.{label}"
        _require(_LABEL_RE.match(label) is not None, f"named_classes: bad label {label!r}")
        node = named[label]
        if isinstance(node, dict):
            _require(set(node) <= {"coords", "source"}, f"{path}: expected coords/source keys")
            ld.note_source(node, path)
            node = node.get("coords")
        classes[label] = CohomologyClass(ld.int_vector(node, betti, path))

    if "alexander_polynomial" in root:
        alexander = ld.polynomial(root["alexander_polynomial"], betti, "alexander_polynomial")

    return ManifoldDescriptor(
        name=name,
        betti=betti,
        basis_labels=tuple(labels),
        flags=flags,
        symmetries=symmetries,
        norm_kind=kind,
        ball=ball,
        faces=faces,
        named_classes=classes,
        alexander=alexander,
        sources=ld.sources,
    )


def load_descriptor(path: str | Path) -> ManifoldDescriptor:
    """Load and validate a descriptor file.

    Raises:
        ParseError: unreadable file or malformed JSON.
        ValidationError: schema violations.
    """
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read descriptor {p}: {e.strerror or e}") from None
    return parse_descriptor(text)


def bundled_descriptor(name: str) -> ManifoldDescriptor:
    """Load one of the descriptors shipped with the package."""
    _require(
        name in BUNDLED_NAMES,
        f"unknown bundled descriptor {name!r}; available: {', '.join(BUNDLED_NAMES)}",
    )
    text = (resources.files("fibercomm") / "data" / f"{name}.json").read_text(encoding="utf-8")
    return parse_descriptor(text)


def resolve_descriptor(selector: str) -> ManifoldDescriptor:
    """Bundled name or file path; bundled names take precedence."""
    if selector in BUNDLED_NAMES:
        return bundled_descriptor(selector)
    if Path(selector).exists():
        return load_descriptor(selector)
    raise ValidationError(f"descriptor {selector!r} is neither a bundled name nor an existing file")


def resolve_class(desc: ManifoldDescriptor, selector: str) -> CohomologyClass:
    """A class given as a named label or comma-separated integers."""
    if _LABEL_RE.match(selector):
        if selector not in desc.named_classes:
            known = ", ".join(sorted(desc.named_classes)) or "none"
            raise ValidationError(f"unknown class label {selector!r}; named classes: {known}")
        return desc.named_classes[selector]
    try:
        coords = tuple(int(part) for part in selector.split(","))
    except ValueError:
        raise ValidationError(f"cannot parse class {selector!r}: use a label or comma-separated integers") from None
    if len(coords) != desc.betti:
        raise ValidationError(f"class {selector!r} has {len(coords)} coordinates, descriptor has betti {desc.betti}")
    return CohomologyClass(coords)


def resolve_face(desc: ManifoldDescriptor, selector: str) -> FiberedFace:
    """A face given by id or by its supporting dual vertex ("a,b,...")."""
    if "," in selector:
        try:
            vertex = tuple(int(part) for part in selector.split(","))
        except ValueError:
            raise ValidationError(f"cannot parse face selector {selector!r}") from None
        for face in desc.faces:
            if face.supporting_vertex == vertex:
                return face
        raise ValidationError(f"no face has supporting vertex {list(vertex)}")
    try:
        fid = int(selector)
    except ValueError:
        raise ValidationError(f"cannot parse face selector {selector!r}: use an id or vertex coordinates") from None
    for face in desc.faces:
        if face.id == fid:
            return face
    raise ValidationError(f"no face with id {fid}; {len(desc.faces)} faces available")


def face_of(desc: ManifoldDescriptor, w: CohomologyClass) -> FiberedFace:
    """The unique face whose open cone contains w.

    Raises:
        NotInCone: when w lies on a cone boundary or outside every cone.
    """
    for face in desc.faces:
        if cone_contains(face, desc.ball, w):
            return face
    raise NotInCone(
        f"class {list(w.coords)} is not in the open cone over any face "
        "(boundary classes are excluded)"
    )
