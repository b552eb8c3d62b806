"""Lectura, validación y combinatoria de abanicos."""

import json

import pytest

from core.exceptions import InvariantError, ParseError
from modules.fan_geometry.services.combinatorics import (
    f_vector,
    h_vector,
    primitive_collections,
    primitive_relation,
    primitive_relation_degree,
)
from modules.fan_geometry.services.fan import (
    Fan,
    hirzebruch,
    load_fan,
    parse_fan,
    product_fan,
    projective_space,
    serialize_fan,
)
from modules.fan_geometry.services.validation import validate_fan
from tests.fixtures.fans import BETTI, BUNDLED, FANO, fan_path


def _fan_text(**overrides) -> str:
    data = {
        "name": "P2",
        "dim": 2,
        "rays": [[1, 0], [0, 1], [-1, -1]],
        "max_cones": [[0, 1], [1, 2], [0, 2]],
    }
    data.update(overrides)
    return json.dumps(data)


class TestParse:
    def test_bundled_p2(self):
        fan = load_fan(fan_path("p2"))
        assert fan.name == "P2"
        assert fan.rays == ((1, 0), (0, 1), (-1, -1))
        assert fan.max_cones == ((0, 1), (1, 2), (0, 2))

    def test_cones_are_sorted(self):
        fan = parse_fan(_fan_text(max_cones=[[1, 0], [2, 1], [2, 0]]))
        assert fan.max_cones == ((0, 1), (1, 2), (0, 2))

    def test_non_primitive_ray(self):
        with pytest.raises(InvariantError):
            parse_fan(_fan_text(rays=[[2, 4], [0, 1], [-1, -1]]))

    def test_cone_of_wrong_size(self):
        with pytest.raises(InvariantError):
            parse_fan(_fan_text(max_cones=[[0, 1, 2]]))

    def test_index_out_of_range(self):
        with pytest.raises(InvariantError):
            parse_fan(_fan_text(max_cones=[[0, 3]]))

    def test_repeated_rays(self):
        with pytest.raises(InvariantError):
            parse_fan(_fan_text(rays=[[1, 0], [1, 0], [-1, -1]]))

    def test_ray_of_wrong_length(self):
        with pytest.raises(InvariantError):
            parse_fan(_fan_text(rays=[[1, 0, 0], [0, 1], [-1, -1]]))

    def test_bool_dim_is_parse_error(self):
        with pytest.raises(ParseError):
            parse_fan(_fan_text(dim=True))

    def test_missing_field(self):
        with pytest.raises(ParseError):
            parse_fan(json.dumps({"name": "x", "dim": 2, "rays": [[1, 0]]}))

    def test_invalid_json(self):
        with pytest.raises(ParseError):
            parse_fan("{name: P2")

    @pytest.mark.parametrize("name", BUNDLED)
    def test_serialize_round_trip(self, name):
        fan = load_fan(fan_path(name))
        assert parse_fan(serialize_fan(fan)) == fan


class TestLibrary:
    def test_projective_space(self):
        fan = projective_space(3)
        assert fan.n_rays == 4
        assert fan.rays[-1] == (-1, -1, -1)
        assert len(fan.max_cones) == 4

    def test_projective_space_dimension(self):
        with pytest.raises(InvariantError):
            projective_space(0)

    def test_hirzebruch_matches_fixture(self):
        assert hirzebruch(1).rays == load_fan(fan_path("f1")).rays
        assert hirzebruch(2).max_cones == load_fan(fan_path("f2")).max_cones

    def test_product(self):
        p1 = projective_space(1)
        fan = product_fan(p1, p1)
        assert fan.dim == 2
        assert fan.rays == ((1, 0), (-1, 0), (0, 1), (0, -1))
        assert len(fan.max_cones) == 4
        report = validate_fan(fan)
        assert report.fano
        assert h_vector(fan) == (1, 2, 1)


class TestValidation:
    def test_p2(self):
        report = validate_fan(load_fan(fan_path("p2")))
        assert report.simplicial and report.smooth
        assert report.facet_paired and report.rays_positively_span
        assert report.pseudo_complete
        assert report.fano
        assert report.details == "ok"

    @pytest.mark.parametrize("name", FANO)
    def test_fano_fixtures(self, name):
        assert validate_fan(load_fan(fan_path(name))).fano

    def test_f2_is_smooth_but_not_fano(self):
        report = validate_fan(load_fan(fan_path("f2")))
        assert report.smooth and report.pseudo_complete
        assert not report.fano
        assert "no Fano" in report.details

    def test_missing_cone_breaks_pairing(self):
        fan = Fan("P2-", 2, ((1, 0), (0, 1), (-1, -1)), ((0, 1), (1, 2)))
        report = validate_fan(fan)
        assert not report.facet_paired
        assert not report.fano

    def test_non_smooth_cone(self):
        fan = Fan("P(1,1,2)", 2, ((1, 0), (1, 2), (-1, -1)), ((0, 1), (1, 2), (0, 2)))
        report = validate_fan(fan)
        assert report.simplicial
        assert not report.smooth
        assert not report.fano

    def test_half_plane_does_not_span(self):
        fan = Fan("A2", 2, ((1, 0), (0, 1)), ((0, 1),))
        report = validate_fan(fan)
        assert not report.rays_positively_span
        assert not report.pseudo_complete

    def test_to_dict(self):
        data = validate_fan(load_fan(fan_path("p1"))).to_dict()
        assert data["fano"] is True
        assert set(data) == {
            "simplicial", "smooth", "facet_paired", "rays_positively_span",
            "pseudo_complete", "fano", "details",
        }


class TestCombinatorics:
    def test_p2_collections(self):
        assert list(primitive_collections(load_fan(fan_path("p2")))) == [(0, 1, 2)]

    @pytest.mark.parametrize("name", ["p1xp1", "f1", "f2"])
    def test_surface_collections(self, name):
        assert list(primitive_collections(load_fan(fan_path(name)))) == [(0, 2), (1, 3)]

    def test_p1_collection(self):
        assert len(primitive_collections(load_fan(fan_path("p1")))) == 1

    def test_relations(self):
        assert primitive_relation(load_fan(fan_path("p1xp1")), (0, 2)) == {}
        assert primitive_relation(load_fan(fan_path("f1")), (0, 2)) == {1: 1}
        assert primitive_relation(load_fan(fan_path("f2")), (0, 2)) == {1: 2}
        assert primitive_relation(load_fan(fan_path("f2")), (1, 3)) == {}

    @pytest.mark.parametrize("name", BUNDLED)
    def test_positive_degrees_iff_fano(self, name):
        fan = load_fan(fan_path(name))
        degrees = [primitive_relation_degree(fan, c) for c in primitive_collections(fan)]
        assert all(degree > 0 for degree in degrees) == validate_fan(fan).fano

    def test_f_vector(self):
        assert f_vector(load_fan(fan_path("p2"))) == (1, 3, 3)
        assert f_vector(load_fan(fan_path("p1xp1"))) == (1, 4, 4)

    @pytest.mark.parametrize("name", BUNDLED)
    def test_h_vector_is_betti(self, name):
        assert h_vector(load_fan(fan_path(name))) == BETTI[name]
