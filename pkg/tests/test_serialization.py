import json

import pytest

from pmspace import (
    Kind,
    ParseError,
    ProbLipMap,
    SelfMap,
    TNorm,
    TriangleFunction,
    heaviside,
    make_step,
)
from pmspace.serialize import (
    distribution_from_obj,
    distribution_to_obj,
    map_from_obj,
    map_to_obj,
    read_json,
    self_map_from_obj,
    self_map_to_obj,
    space_from_obj,
    space_to_obj,
    triangle_from_obj,
    triangle_to_obj,
    write_json,
)

from conftest import dyadic_dist, random_data_map, random_valid_space


class TestRoundTrips:
    def test_distribution(self, rng):
        for _ in range(20):
            f = dyadic_dist(rng)
            assert distribution_from_obj(distribution_to_obj(f)) == f

    def test_distribution_awkward_floats(self):
        f = make_step([(0.1, 0.3), (7e-3 + 1 / 3, 0.7000000000000001)])
        assert distribution_from_obj(distribution_to_obj(f)) == f

    def test_triangle(self):
        for kind in Kind:
            for t in TNorm:
                tf = TriangleFunction(kind=kind, tnorm=t)
                assert triangle_from_obj(triangle_to_obj(tf)) == tf

    def test_space(self, rng):
        for _ in range(10):
            s = random_valid_space(rng, 4)
            assert space_from_obj(space_to_obj(s)) == s

    def test_map(self, rng):
        s = random_valid_space(rng, 4)
        f = random_data_map(rng, s)
        assert map_from_obj(map_to_obj(f)) == f

    def test_self_map(self):
        m = SelfMap.from_dict({"b": "a", "a": "a", "c": "b"})
        assert self_map_from_obj(self_map_to_obj(m)) == m

    def test_through_actual_json_text(self, rng):
        s = random_valid_space(rng, 3)
        assert space_from_obj(json.loads(json.dumps(space_to_obj(s)))) == s

    def test_through_files(self, rng, tmp_path):
        s = random_valid_space(rng, 3)
        p = tmp_path / "space.json"
        write_json(space_to_obj(s), str(p))
        assert space_from_obj(read_json(str(p))) == s
        text = p.read_text()
        assert text.endswith("\n")
        assert json.loads(text) == space_to_obj(s)


class TestDistributionErrors:
    def test_not_a_dict(self):
        with pytest.raises(ParseError, match="expected an object"):
            distribution_from_obj([1, 2])

    def test_missing_jumps(self):
        with pytest.raises(ParseError, match="missing key 'jumps'"):
            distribution_from_obj({})

    def test_jumps_not_list(self):
        with pytest.raises(ParseError, match="must be a list"):
            distribution_from_obj({"jumps": "nope"})

    def test_malformed_pair(self):
        with pytest.raises(ParseError, match="jump 1"):
            distribution_from_obj({"jumps": [[1.0, 0.5], [2.0]]})

    def test_bool_is_not_a_number(self):
        with pytest.raises(ParseError, match="expected a number, got bool"):
            distribution_from_obj({"jumps": [[True, 0.5]]})

    def test_string_level(self):
        with pytest.raises(ParseError, match="level"):
            distribution_from_obj({"jumps": [[1.0, "high"]]})


class TestTriangleErrors:
    def test_unknown_kind(self):
        with pytest.raises(ParseError, match="unknown kind"):
            triangle_from_obj({"kind": "frobnicate", "tnorm": "min"})

    def test_unknown_tnorm(self):
        with pytest.raises(ParseError, match="unknown tnorm"):
            triangle_from_obj({"kind": "sum", "tnorm": "nilpotent"})

    def test_missing_keys(self):
        with pytest.raises(ParseError, match="missing key"):
            triangle_from_obj({"kind": "sum"})

    def test_non_string_kind(self):
        with pytest.raises(ParseError, match="expected a string"):
            triangle_from_obj({"kind": 3, "tnorm": "min"})


def minimal_space_obj() -> dict:
    return {
        "points": ["a", "b"],
        "triangle": {"kind": "sum", "tnorm": "min"},
        "distances": [{"x": "a", "y": "b", "dist": {"jumps": [[1.0, 1.0]]}}],
    }


class TestSpaceErrors:
    def test_points_must_be_nonempty_list(self):
        obj = minimal_space_obj()
        obj["points"] = []
        with pytest.raises(ParseError, match="nonempty"):
            space_from_obj(obj)
        obj["points"] = "ab"
        with pytest.raises(ParseError, match="nonempty list"):
            space_from_obj(obj)

    def test_unknown_point_in_pair(self):
        obj = minimal_space_obj()
        obj["distances"][0]["y"] = "zz"
        with pytest.raises(ParseError, match="unknown point"):
            space_from_obj(obj)

    def test_diagonal_pair(self):
        obj = minimal_space_obj()
        obj["distances"][0]["y"] = "a"
        with pytest.raises(ParseError, match="diagonal"):
            space_from_obj(obj)

    def test_duplicate_pair_either_orientation(self):
        obj = minimal_space_obj()
        obj["distances"].append(
            {"x": "b", "y": "a", "dist": {"jumps": [[2.0, 1.0]]}}
        )
        with pytest.raises(ParseError, match="duplicate pair"):
            space_from_obj(obj)

    def test_missing_pair_named(self):
        obj = minimal_space_obj()
        obj["points"] = ["a", "b", "c"]
        with pytest.raises(ParseError, match=r"missing pair \('a', 'c'\)"):
            space_from_obj(obj)

    def test_duplicate_point_labels_reported_as_parse_error(self):
        obj = minimal_space_obj()
        obj["points"] = ["a", "a"]
        obj["distances"] = []
        with pytest.raises(ParseError):
            space_from_obj(obj)

    def test_distances_must_be_list(self):
        obj = minimal_space_obj()
        obj["distances"] = {}
        with pytest.raises(ParseError, match="must be a list"):
            space_from_obj(obj)


class TestMapErrors:
    def test_values_required_nonempty(self):
        with pytest.raises(ParseError, match="missing key 'values'"):
            map_from_obj({})
        with pytest.raises(ParseError, match="nonempty"):
            map_from_obj({"values": {}})

    def test_bad_value_carries_label_context(self):
        with pytest.raises(ParseError, match=r"values\['a'\]"):
            map_from_obj({"values": {"a": {"jumps": [["x", 0.5]]}}})

    def test_self_map_required_nonempty(self):
        with pytest.raises(ParseError, match="missing key 'map'"):
            self_map_from_obj({})
        with pytest.raises(ParseError, match="nonempty"):
            self_map_from_obj({"map": {}})

    def test_self_map_non_string_image(self):
        with pytest.raises(ParseError, match="expected a string"):
            self_map_from_obj({"map": {"a": 7}})


class TestFiles:
    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError, match="cannot read"):
            read_json(str(tmp_path / "absent.json"))

    def test_invalid_json(self, tmp_path):
        p = tmp_path / "broken.json"
        p.write_text("{not json", encoding="utf-8")
        with pytest.raises(ParseError, match="not valid JSON"):
            read_json(str(p))
