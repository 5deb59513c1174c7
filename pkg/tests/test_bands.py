import json
from fractions import Fraction as F

import pytest

from orthonet.bands import adjacent, decompose, exposure, y_planes
from orthonet.geom import Point3
from orthonet.polyhedron import load_box_union

CUBE = "0 0 0 1 1 1\n"
TWO_BOX = "0 0 0 4 1 2\n1 1 -1 3 2 3\n"


def test_y_planes_cube():
    assert y_planes(load_box_union(CUBE)) == [1, 0]


def test_y_planes_two_box():
    assert y_planes(load_box_union(TWO_BOX)) == [2, 1, 0]


def test_cube_decomposition():
    d = decompose(load_box_union(CUBE))
    assert len(d.layers) == 1
    assert len(d.bands) == 1
    band = d.bands[0]
    assert len(band.edges) == 4
    assert band.perimeter == 4
    assert [e.kind for e in band.edges] == ["top", "right", "bottom", "left"]
    # Canonical start: leftmost-topmost corner, clockwise.
    assert band.rim_cycle() == [(0, 1), (1, 1), (1, 0), (0, 0)]


def test_two_box_bands_and_adjacency():
    d = decompose(load_box_union(TWO_BOX))
    assert len(d.bands) == 2
    a = next(b for b in d.bands if b.layer == 1)  # y in [0,1]
    b = next(b for b in d.bands if b.layer == 0)  # y in [1,2]
    assert len(a.edges) == 4 and len(b.edges) == 4
    assert adjacent(b, a)
    assert d.adjacency() == [(b.id, a.id)]


def test_adjacent_rejects_same_layer():
    d = decompose(load_box_union(TWO_BOX))
    with pytest.raises(ValueError):
        adjacent(d.bands[0], d.bands[0])


def test_two_slabs_in_one_layer():
    text = "0 0 0 1 1 1\n3 0 0 4 1 1\n0 1 0 4 2 1\n"
    d = decompose(load_box_union(text))
    lower = [b for b in d.bands if b.y_low == 0]
    assert len(lower) == 2


def test_exposure_cube_all_exposed():
    d = decompose(load_box_union(CUBE))
    exp = exposure(d)
    assert len(exp) == 8
    assert all(len(owners) == 1 for owners in exp.values())


def test_exposure_two_box():
    d = decompose(load_box_union(TWO_BOX))
    exp = exposure(d)
    b = next(b for b in d.bands if b.layer == 0)
    assert exp[Point3(F(1), F(1), F(-1))] == [b.id]
    assert exp[Point3(F(1), F(1), F(3))] == [b.id]
    assert all(len(owners) == 1 for owners in exp.values())


def test_exposure_shared_corner_unexposed():
    # Stacked slabs sharing the left plane: interface corners belong to both.
    d = decompose(load_box_union("0 0 0 2 1 1\n0 1 0 1 2 1\n"))
    exp = exposure(d)
    assert len(exp[Point3(F(0), F(1), F(0))]) == 2


def test_convexity_l_shape():
    d = decompose(load_box_union("0 0 0 2 1 1\n0 0 1 1 1 2\n"))
    band = d.bands[0]
    cyc = band.rim_cycle()
    # L-shape has 6 corners: 5 convex + 1 reflex.
    flags = [band.corner_convex(i) for i in range(len(cyc))]
    assert flags.count(False) == 1
    reflex_i = flags.index(False)
    assert cyc[reflex_i] == (1, 1)


def test_dump_is_json():
    d = decompose(load_box_union(TWO_BOX))
    recs = json.loads(d.dump())
    assert len(recs) == 2
    assert all("rim" in r for r in recs)
