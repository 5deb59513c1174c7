from fractions import Fraction as F

import pytest

from orthonet.polyhedron import (
    BoxParseError,
    DegenerateBoxError,
    DisconnectedUnionError,
    classify_faces,
    euler_characteristic,
    load_box_union,
    validate_orthogrid,
)

CUBE = "0 0 0 1 1 1\n"
TWO_BOX = "0 0 0 4 1 2\n1 1 -1 3 2 3\n"
# Through-hole along y: four boxes forming a square ring.
TORUS = (
    "0 0 0 3 1 1\n"
    "0 0 2 3 1 3\n"
    "0 0 1 1 1 2\n"
    "2 0 1 3 1 2\n"
)


def test_cube_facets_and_vertices():
    p = load_box_union(CUBE)
    faces = classify_faces(p)
    assert sorted(faces.values()) == sorted(
        ["front", "back", "top", "bottom", "left", "right"])
    assert all(f.area() == 1 for f in faces)
    assert len(p.corner_vertices()) == 8
    assert p.surface_area() == 6


def test_cube_validates():
    rep = validate_orthogrid(load_box_union(CUBE))
    assert rep.ok
    chi, closed = euler_characteristic(load_box_union(CUBE))
    assert chi == 2 and closed


def test_two_box_layers_and_closedness():
    p = load_box_union(TWO_BOX)
    assert p.n_layers == 2
    assert p.ylevels == [F(2), F(1), F(0)]
    chi, closed = euler_characteristic(p)
    assert chi == 2 and closed
    assert validate_orthogrid(p).ok


def test_two_box_left_facet_of_b():
    p = load_box_union(TWO_BOX)
    lefts = [f for f in p.facets() if f.direction == "left" and f.offset == 1]
    assert len(lefts) == 1
    # B's left side at x=1 is free for its whole y-range [1,2], z in [-1,3].
    assert lefts[0].region.bounds() == (F(1), F(-1), F(2), F(3))
    assert lefts[0].area() == 4


def test_l_prism_two_top_facets():
    p = load_box_union("0 0 0 2 1 1\n0 0 1 1 1 2\n")
    tops = [f for f in p.facets() if f.direction == "top"]
    assert len(tops) == 2
    assert sorted(f.offset for f in tops) == [1, 2]


def test_degenerate_box_rejected():
    with pytest.raises(DegenerateBoxError):
        load_box_union("0 0 1 1 1 1\n")


def test_parse_errors_and_comments():
    with pytest.raises(BoxParseError):
        load_box_union("0 0 0 1 1\n")
    p = load_box_union("# a cube\n0 0 0 1 1 1\n\n")
    assert len(p.boxes) == 1


def test_disconnected_union_rejected():
    with pytest.raises(DisconnectedUnionError):
        load_box_union("0 0 0 1 1 1\n5 0 0 6 1 1\n")
    with pytest.raises(DisconnectedUnionError):
        load_box_union("0 0 0 1 1 1\n0 2 0 1 3 1\n")


def test_overlapping_boxes_union_semantics():
    p = load_box_union("0 0 0 2 1 1\n1 0 0 3 1 1\n")
    assert p.n_layers == 1
    assert p.surface_area() == 2 * (3 * 1) + 2 * (3 * 1) + 2 * 1


def test_torus_fails_genus():
    rep = validate_orthogrid(load_box_union(TORUS))
    assert not rep.is_genus_zero or not rep.has_no_y_dents
    assert not rep.ok


def test_unexposed_left_vertex_detected():
    # Two stacked slabs sharing the left plane x=0: the shared corner at the
    # interface belongs to both slabs.
    p = load_box_union("0 0 0 2 1 1\n0 1 0 1 2 1\n")
    rep = validate_orthogrid(p)
    assert not rep.all_left_vertices_exposed
    assert rep.offenders["unexposed_left"]


def test_serialize_roundtrip_exact():
    text = "0 0 0 4 1 2\n1 1 -1 3 2 3\n# comment\n1/3 0 0 2/3 1/2 7/8\n"
    # separate polyhedron: single box with rational coords
    p1 = load_box_union("1/3 0 0 2/3 1/2 7/8\n")
    p2 = load_box_union(p1.serialize())
    assert p1.boxes == p2.boxes
    assert p1.ylevels == p2.ylevels
    p3 = load_box_union(TWO_BOX)
    assert load_box_union(p3.serialize()).boxes == p3.boxes


def test_grid_coords_and_min_gap():
    p = load_box_union(TWO_BOX)
    g = p.grid_coords()
    assert g["x"] == [0, 1, 3, 4]
    assert g["y"] == [0, 1, 2]
    assert g["z"] == [-1, 0, 2, 3]
    assert p.min_grid_gap() == 1


def test_point_touch_boxes_rejected_by_euler():
    # Two cubes sharing exactly one corner point: connected as closed sets
    # but the vertex is a pinch; Euler characteristic differs from 2.
    p = load_box_union("0 0 0 1 1 1\n1 0 1 2 1 2\n")
    rep = validate_orthogrid(p)
    assert not rep.ok
