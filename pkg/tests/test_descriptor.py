"""Descriptor parsing, bundled data integrity, and provenance annotations."""

import json

import pytest

from fibercomm.descriptor import (
    BUNDLED_NAMES,
    bundled_descriptor,
    face_of,
    load_descriptor,
    parse_descriptor,
    resolve_class,
    resolve_descriptor,
    resolve_face,
)
from fibercomm.errors import NotInCone, ParseError, ValidationError
from fibercomm.lattice import CohomologyClass
from fibercomm.norm import evaluate_norm, norm_from_newton


def minimal_payload() -> dict:
    return {
        "name": "toy",
        "betti": 2,
        "basis_labels": ["a", "b"],
        "norm_source": {
            "kind": "dual_vertices",
            "vertices": [[1, 0], [-1, 0], [0, 1], [0, -1]],
        },
    }


def parse(payload: dict):
    return parse_descriptor(json.dumps(payload))


class TestBundledData:
    def test_names(self):
        assert BUNDLED_NAMES == ("six22", "magic")

    def test_six22_shape(self):
        d = bundled_descriptor("six22")
        assert d.betti == 2
        assert len(d.faces) == 4
        assert [f.supporting_vertex for f in d.faces] == [(-2, 0), (0, -2), (0, 2), (2, 0)]
        assert all(f.fibered and f.polynomial is not None for f in d.faces)
        assert sorted(d.named_classes) == ["T", "U"]
        assert d.named_classes["U"].coords == (1, 0)
        assert d.named_classes["T"].coords == (0, 1)
        assert d.flags.all_fibrations_minimal
        assert not d.flags.no_hidden_symmetries
        assert d.flags.cusps == 2
        assert d.flags.volume == pytest.approx(4.0597664256386145, abs=1e-15)

    def test_six22_norm_matches_alexander_polynomial(self):
        d = bundled_descriptor("six22")
        assert d.alexander is not None
        assert norm_from_newton(d.alexander) == d.ball

    def test_six22_named_class_norms(self):
        d = bundled_descriptor("six22")
        assert evaluate_norm(d.ball, d.named_classes["U"]) == 2
        assert evaluate_norm(d.ball, d.named_classes["T"]) == 2

    def test_magic_shape(self):
        d = bundled_descriptor("magic")
        assert d.betti == 3
        assert len(d.faces) == 6
        assert all(f.fibered and f.polynomial is None for f in d.faces)
        assert d.flags.cusps == 3
        assert d.named_classes == {}

    def test_magic_ball_is_mixed_sign_octahedron(self):
        d = bundled_descriptor("magic")
        expected = sorted(
            v
            for v in [(a, b, c) for a in (-1, 1) for b in (-1, 1) for c in (-1, 1)]
            if v not in ((1, 1, 1), (-1, -1, -1))
        )
        assert list(d.ball.dual_vertices) == expected

    def test_symmetries_preserve_dual_vertices(self):
        for name in BUNDLED_NAMES:
            d = bundled_descriptor(name)
            verts = set(d.ball.dual_vertices)
            for g in d.symmetries.generators:
                assert {g.transpose().apply(v) for v in verts} == verts

    def test_face_polynomials_supported_on_their_cone(self):
        # each face polynomial specializes to a nontrivial reciprocal-style
        # polynomial at the face's supporting vertex direction
        from fibercomm.laurent import specialize
        from fibercomm.norm import enumerate_primitive_classes

        d = bundled_descriptor("six22")
        for face in d.faces:
            for w in enumerate_primitive_classes(face, d.ball, 4):
                dense = specialize(face.polynomial, w).dense_coeffs()
                assert len(dense) >= 3
                assert dense[0] == 1 or dense[-1] == 1

    def test_all_sources_use_known_prefixes(self):
        for name in BUNDLED_NAMES:
            d = bundled_descriptor(name)
            assert d.sources, "bundled descriptors must carry provenance"
            for path, src in d.sources.items():
                assert src.startswith(("literature:", "derived:", "census:")), (name, path, src)

    def test_numeric_fields_are_annotated(self):
        for name in BUNDLED_NAMES:
            d = bundled_descriptor(name)
            assert "volume" in d.sources
            assert "cusps" in d.sources
            assert "norm_source" in d.sources
        six = bundled_descriptor("six22")
        assert "alexander_polynomial" in six.sources
        for i in range(4):
            assert any(path.startswith(f"faces[{i}]") for path in six.sources)


class TestParseDescriptor:
    def test_minimal(self):
        d = parse(minimal_payload())
        assert d.name == "toy"
        assert len(d.faces) == 4
        assert d.norm_kind == "dual_vertices"
        assert d.flags.volume is None

    def test_newton_kind(self):
        payload = minimal_payload()
        payload["norm_source"] = {
            "kind": "newton",
            "polynomial": {
                "terms": [
                    {"exp": [2, 0], "coeff": 1},
                    {"exp": [1, 1], "coeff": 1},
                    {"exp": [1, -1], "coeff": 1},
                    {"exp": [0, 0], "coeff": 1},
                ]
            },
        }
        d = parse(payload)
        assert d.ball.dual_vertices == ((-2, 0), (0, -2), (0, 2), (2, 0))

    def test_invalid_json_position(self):
        with pytest.raises(ParseError, match=r"line 1 column"):
            parse_descriptor("{bad json")

    def test_unknown_top_level_key(self):
        payload = minimal_payload()
        payload["extra"] = 1
        with pytest.raises(ValidationError, match="unknown descriptor keys"):
            parse(payload)

    def test_volume_must_be_string(self):
        payload = minimal_payload()
        payload["volume"] = 4.05
        with pytest.raises(ValidationError, match="decimal string"):
            parse(payload)

    def test_volume_string_parsed(self):
        payload = minimal_payload()
        payload["volume"] = {"value": "2.5", "source": "census:test"}
        assert parse(payload).flags.volume == 2.5

    def test_bad_volume_string(self):
        payload = minimal_payload()
        payload["volume"] = "not-a-number"
        with pytest.raises(ValidationError, match="not a decimal"):
            parse(payload)

    def test_asymmetric_vertices_rejected(self):
        payload = minimal_payload()
        payload["norm_source"]["vertices"] = [[1, 0], [0, 1]]
        with pytest.raises(ValidationError, match="centrally symmetric"):
            parse(payload)

    def test_face_id_out_of_range(self):
        payload = minimal_payload()
        payload["faces"] = [{"id": 7, "fibered": True}]
        with pytest.raises(ValidationError, match="no top face with id"):
            parse(payload)

    def test_face_vertex_mismatch(self):
        payload = minimal_payload()
        payload["faces"] = [{"id": 0, "dual_vertex": [1, 0], "fibered": True}]
        with pytest.raises(ValidationError, match="disagrees with face"):
            parse(payload)

    def test_duplicate_face_ids(self):
        payload = minimal_payload()
        payload["faces"] = [{"id": 0, "fibered": True}, {"id": 0, "fibered": False}]
        with pytest.raises(ValidationError, match="duplicate face id"):
            parse(payload)

    def test_duplicate_polynomial_exponent(self):
        payload = minimal_payload()
        payload["alexander_polynomial"] = {
            "terms": [{"exp": [1, 0], "coeff": 1}, {"exp": [1, 0], "coeff": 2}]
        }
        with pytest.raises(ValidationError, match="duplicate exponent"):
            parse(payload)

    def test_zero_coefficient_rejected(self):
        payload = minimal_payload()
        payload["alexander_polynomial"] = {"terms": [{"exp": [1, 0], "coeff": 0}]}
        with pytest.raises(ValidationError, match="nonzero integer"):
            parse(payload)

    def test_bad_basis_labels(self):
        payload = minimal_payload()
        payload["basis_labels"] = ["a"]
        with pytest.raises(ValidationError, match="expected 2 labels"):
            parse(payload)
        payload["basis_labels"] = ["a", "a"]
        with pytest.raises(ValidationError, match="distinct"):
            parse(payload)
        payload["basis_labels"] = ["a", "2b"]
        with pytest.raises(ValidationError, match="bad label"):
            parse(payload)

    def test_named_class_length_checked(self):
        payload = minimal_payload()
        payload["named_classes"] = {"X": [1, 2, 3]}
        with pytest.raises(ValidationError, match="expected length 2"):
            parse(payload)

    def test_non_unimodular_symmetry_rejected(self):
        payload = minimal_payload()
        payload["symmetries"] = {"generators": [[[2, 0], [0, 1]]]}
        with pytest.raises(ValidationError, match="unimodular"):
            parse(payload)

    def test_unknown_norm_kind(self):
        payload = minimal_payload()
        payload["norm_source"] = {"kind": "mystery"}
        with pytest.raises(ValidationError, match="norm_source.kind"):
            parse(payload)

    def test_flags_must_be_booleans(self):
        payload = minimal_payload()
        payload["flags"] = {"no_hidden_symmetries": 1}
        with pytest.raises(ValidationError, match="boolean"):
            parse(payload)


class TestLoadAndResolve:
    def test_load_from_file(self, tmp_path):
        path = tmp_path / "toy.json"
        path.write_text(json.dumps(minimal_payload()), encoding="utf-8")
        assert load_descriptor(path).name == "toy"

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError, match="cannot read"):
            load_descriptor(tmp_path / "absent.json")

    def test_resolve_bundled(self):
        assert resolve_descriptor("six22").name == "six22"
        assert resolve_descriptor("magic").name == "magic"

    def test_resolve_path(self, tmp_path):
        path = tmp_path / "toy.json"
        path.write_text(json.dumps(minimal_payload()), encoding="utf-8")
        assert resolve_descriptor(str(path)).name == "toy"

    def test_resolve_unknown(self):
        with pytest.raises(ValidationError, match="neither a bundled name"):
            resolve_descriptor("no-such-thing")

    def test_unknown_bundled_name(self):
        with pytest.raises(ValidationError, match="unknown bundled descriptor"):
            bundled_descriptor("other")


class TestSelectors:
    def test_resolve_class_label_and_coords(self):
        d = bundled_descriptor("six22")
        assert resolve_class(d, "U").coords == (1, 0)
        assert resolve_class(d, "1,-2").coords == (1, -2)

    def test_resolve_class_errors(self):
        d = bundled_descriptor("six22")
        with pytest.raises(ValidationError, match="unknown class label"):
            resolve_class(d, "V")
        with pytest.raises(ValidationError, match="2 coordinates|has 3"):
            resolve_class(d, "1,2,3")

    def test_resolve_face_by_id_and_vertex(self):
        d = bundled_descriptor("six22")
        assert resolve_face(d, "2").id == 2
        assert resolve_face(d, "0,2").id == 2
        assert resolve_face(d, "2,0").id == 3

    def test_resolve_face_errors(self):
        d = bundled_descriptor("six22")
        with pytest.raises(ValidationError, match="no face with id"):
            resolve_face(d, "9")
        with pytest.raises(ValidationError, match="no face has supporting vertex"):
            resolve_face(d, "1,1")

    def test_face_of(self):
        d = bundled_descriptor("six22")
        assert face_of(d, CohomologyClass.of([1, 2])).id == 2
        assert face_of(d, CohomologyClass.of([1, 0])).id == 3
        assert face_of(d, CohomologyClass.of([-3, -1])).id == 0

    def test_face_of_boundary(self):
        d = bundled_descriptor("six22")
        with pytest.raises(NotInCone):
            face_of(d, CohomologyClass.of([1, 1]))

    def test_face_of_magic(self):
        d = bundled_descriptor("magic")
        face = face_of(d, CohomologyClass.of([1, 1, 0]))
        assert face.supporting_vertex == (1, 1, -1)
