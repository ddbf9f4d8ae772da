import json
from fractions import Fraction

import pytest

from planeconfig import (
    Configuration,
    ParseError,
    build_class_report,
    canonical_json,
    parse_config,
    serialize_config,
)
from planeconfig.atlas import seed_by_name
from planeconfig.geometry import HomPoint


def seed_config(name):
    return seed_by_name(name).configuration


class TestParse:
    def test_integer_points(self):
        doc = {"points": [[0, 0, 1], [1, 0, 1], [0, 1, 1], [2, 3, 1], [5, 1, 1]]}
        cf = parse_config(json.dumps(doc))
        assert len(cf.configuration) == 5
        assert cf.labels is None
        assert cf.configuration[3] == HomPoint(2, 3, 1)

    def test_string_rationals_are_exact(self):
        doc = {"points": [["0.125", "0", "1"], ["1/3", "2/3", "1"], [0, 1, 1],
                          [1, 0, 0], [1, 1, 1]]}
        cf = parse_config(json.dumps(doc))
        # 0.125 == 1/8, so the canonical rep clears to (1, 0, 8)
        assert cf.configuration[0] == HomPoint(Fraction(1, 8), 0, 1)
        assert cf.configuration[0].coords == (1, 0, 8)
        assert cf.configuration[1].coords == (1, 2, 3)

    def test_floats_rejected(self):
        doc = {"points": [[0.5, 0, 1]] + [[i, i * i, 1] for i in range(4)]}
        with pytest.raises(ParseError):
            parse_config(json.dumps(doc))

    def test_booleans_rejected(self):
        doc = {"points": [[True, 0, 1]] + [[i, i * i, 1] for i in range(4)]}
        with pytest.raises(ParseError):
            parse_config(json.dumps(doc))

    def test_bad_documents_rejected(self):
        for text in (
            "not json",
            "[]",
            '{"nope": 1}',
            '{"points": 3}',
            '{"points": [[1, 2], [0, 1, 1], [1, 0, 1], [1, 1, 1], [2, 1, 1]]}',
            '{"points": [["x", 0, 1], [0, 1, 1], [1, 0, 1], [1, 1, 1], [2, 1, 1]]}',
            '{"points": [["1/0", 0, 1], [0, 1, 1], [1, 0, 1], [1, 1, 1], [2, 1, 1]]}',
            '{"points": [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 1], [2, 1, 1]]}',
        ):
            with pytest.raises(ParseError):
                parse_config(text)

    def test_wrong_point_count_rejected(self):
        doc = {"points": [[i, i * i, 1] for i in range(4)]}
        with pytest.raises(ParseError):
            parse_config(json.dumps(doc))

    def test_duplicate_points_rejected(self):
        doc = {"points": [[1, 1, 1]] * 2 + [[i, i * i, 1] for i in range(3)]}
        with pytest.raises(ParseError):
            parse_config(json.dumps(doc))

    def test_labels(self):
        pts = [[i, i * i, 1] for i in range(5)]
        cf = parse_config(json.dumps({"points": pts, "labels": list("abcde")}))
        assert cf.labels == ("a", "b", "c", "d", "e")
        with pytest.raises(ParseError):
            parse_config(json.dumps({"points": pts, "labels": ["a"]}))
        with pytest.raises(ParseError):
            parse_config(json.dumps({"points": pts, "labels": [1, 2, 3, 4, 5]}))
        assert parse_config(json.dumps({"points": pts, "labels": None})).labels is None


class TestRoundTrip:
    def test_serialize_then_parse(self):
        for name in ("HEX6", "HEPT7", "(1,2,2,2)"):
            c = seed_config(name)
            again = parse_config(serialize_config(c))
            assert again.configuration == c

    def test_labels_survive(self):
        c = seed_config("HEX6")
        labels = tuple("pqrstu")
        text = serialize_config(c, labels)
        cf = parse_config(text)
        assert cf.labels == labels

    def test_serialized_coords_are_strings(self):
        doc = json.loads(serialize_config(seed_config("HEX6")))
        for row in doc["points"]:
            assert all(isinstance(v, str) for v in row)


class TestReport:
    def test_five_point_report(self):
        c = Configuration.affine([(0, 0), (4, 0), (0, 4), (3, 3), (1, 2)])
        rep = build_class_report(c)
        assert rep["size"] == 5
        assert rep["typicality"]["typical"]
        coeffs = [Fraction(v) for v in rep["conic"]]
        # every point satisfies the reported conic
        for p in c:
            x, y, z = p.coords
            a, b, cc, d, e, f = coeffs
            assert a * x * x + b * x * y + cc * y * y + d * x * z + e * y * z + f * z * z == 0

    def test_six_point_report(self):
        rep = build_class_report(seed_config("TRI6"))
        assert rep["six_class_name"] == "tricomponent"
        assert "sigma" not in rep

    def test_non_typical_report_is_partial(self):
        c = Configuration.affine([(0, 0), (1, 0), (2, 0), (0, 1), (1, 2)])
        rep = build_class_report(c)
        assert not rep["typicality"]["typical"]
        assert rep["typicality"]["collinear_triples"] == [[0, 1, 2]]
        assert "conic" not in rep and "class_name" not in rep

    def test_seven_point_report_consistency(self):
        rep = build_class_report(seed_config("HEPT7"))
        assert rep["class_name"] == "(7,0,0,0)"
        assert rep["convexity"] == "heptagonal"
        assert rep["sigma"] == [7, 0, 0, 0]
        # sigma re-derivable from the per-point deltas
        sigma = [rep["deltas"].count(k) for k in (1, 2, 3, 6)]
        assert sigma == rep["sigma"]
        assert rep["canonical_numeration"] == [0, 1, 2, 3, 4, 5, 6]
        assert rep["marked_point"] is None
        assert len(rep["conics"]) == 21
        assert len(rep["edge_decorations"]) == 7
        diag = [rep["dominance_matrix"][i][i] for i in range(7)]
        assert diag == [None] * 7
        assert sorted(rep["dominance_indices"]) == list(range(7))
        assert rep["fingerprint"].startswith("7000|")

    def test_hexagonal_seven_point_report(self):
        rep = build_class_report(seed_config("(3,4,0,0)₁"))
        assert rep["convexity"] == "hexagonal"
        assert rep["canonical_numeration"] is None
        assert isinstance(rep["marked_point"], int)

    def test_labels_included(self):
        rep = build_class_report(seed_config("HEX6"), labels=list("abcdef"))
        assert rep["labels"] == list("abcdef")

    def test_report_is_json_ready(self):
        for name in ("HEX6", "HEPT7", "(0,3,3,1)"):
            rep = build_class_report(seed_config(name))
            json.loads(canonical_json(rep))


class TestCanonicalJson:
    def test_stable_bytes(self):
        doc = {"b": 1, "a": [1, 2], "c": {"y": None, "x": "é"}}
        out = canonical_json(doc)
        assert out == '{"a":[1,2],"b":1,"c":{"x":"é","y":null}}\n'
        assert canonical_json(json.loads(out)) == out

    def test_key_order_ignored(self):
        assert canonical_json({"a": 1, "b": 2}) == canonical_json({"b": 2, "a": 1})
