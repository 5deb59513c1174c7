from fractions import Fraction as F

import pytest

from orthonet.bands import decompose
from orthonet.geom import Point3
from orthonet.polyhedron import load_box_union
from orthonet.tree import (
    ALL_LABELS,
    DegenerateAnchorError,
    assign_label,
    build_tree,
    label_named,
    select_anchor,
    strip_directions,
)

TWO_BOX = "0 0 0 4 1 2\n1 1 -1 3 2 3\n"
THREE_BOX = "0 0 0 4 1 2\n1 1 -1 3 2 3\n0 2 0 4 3 2\n"

# Literal transcription of the front/back strip direction table.
TABLE_1 = {
    "C_s":   {"front": ("C", "entering"),  "back": ("CC", "exiting")},
    "C'_s":  {"front": ("CC", "exiting"),  "back": ("C", "entering")},
    "C_t":   {"front": ("CC", "exiting"),  "back": ("C", "entering")},
    "C'_t":  {"front": ("C", "entering"),  "back": ("CC", "exiting")},
    "CC_s":  {"front": ("CC", "entering"), "back": ("C", "exiting")},
    "CC'_s": {"front": ("C", "exiting"),   "back": ("CC", "entering")},
    "CC_t":  {"front": ("C", "exiting"),   "back": ("CC", "entering")},
    "CC'_t": {"front": ("CC", "entering"), "back": ("C", "exiting")},
}

FRONT_CW = ["C_s", "C'_t", "CC'_s", "CC_t"]
FRONT_CCW = ["C'_s", "C_t", "CC_s", "CC'_t"]

# Literal transcription of the C1 child-label table.
TABLE_2 = [
    ("front", FRONT_CW, "CC'_s"),
    ("front", FRONT_CCW, "CC'_t"),
    ("back", FRONT_CCW, "CC_s"),   # back strip clockwise
    ("back", FRONT_CW, "CC_t"),    # back strip counterclockwise
]

# Literal transcription of the C2 child-label table.
TABLE_3 = [
    ("front", FRONT_CW, True, "CC'_s"),
    ("front", FRONT_CW, False, "C'_t"),
    ("front", FRONT_CCW, True, "CC'_t"),
    ("front", FRONT_CCW, False, "C'_s"),
    ("back", FRONT_CCW, True, "CC_s"),
    ("back", FRONT_CCW, False, "C_t"),
    ("back", FRONT_CW, True, "CC_t"),
    ("back", FRONT_CW, False, "C_s"),
]


def test_strip_directions_match_table_1():
    for name, expected in TABLE_1.items():
        got = strip_directions(label_named(name))
        assert got == expected, name


def test_all_eight_labels_distinct():
    assert len({str(l) for l in ALL_LABELS}) == 8


def test_assign_label_matches_table_2():
    for side, parents, child in TABLE_2:
        for pname in parents:
            got = assign_label(label_named(pname), "C1", side)
            assert str(got) == child, (pname, side)


def test_assign_label_matches_table_3():
    for side, parents, toward, child in TABLE_3:
        for pname in parents:
            got = assign_label(label_named(pname), "C2", side,
                               hand_toward_anchor=toward)
            assert str(got) == child, (pname, side, toward)


def test_assign_label_spec_examples():
    assert str(assign_label(label_named("C_s"), "C1", "front")) == "CC'_s"
    assert str(assign_label(label_named("C_s"), "C2", "front",
                            hand_toward_anchor=False)) == "C'_t"
    assert str(assign_label(label_named("C'_s"), "C2", "back",
                            hand_toward_anchor=True)) == "CC_s"


def test_cube_tree_trivial():
    t = build_tree(decompose(load_box_union("0 0 0 1 1 1\n")))
    assert t.arcs == []


def test_two_box_tree_anchor():
    t = build_tree(decompose(load_box_union(TWO_BOX)))
    assert len(t.arcs) == 1
    arc = t.arcs[0]
    a = arc.anchor
    assert a.anchor_class == "C1"
    assert a.point == Point3(F(1), F(1), F(2))
    assert a.c_point == Point3(F(1), F(1), F(-1))
    assert a.o_point == Point3(F(1), F(1), F(0))
    assert arc.side == "front"
    # Root is the band with the smallest y.
    root_band = next(b for b in t.decomp.bands if b.id == t.root)
    assert root_band.y_low == 0


def test_three_band_path():
    t = build_tree(decompose(load_box_union(THREE_BOX)))
    assert len(t.arcs) == 2
    assert len(t.decomp.bands) == 3


def test_anchor_determinism_via_roundtrip():
    p1 = load_box_union(TWO_BOX)
    t1 = build_tree(decompose(p1))
    p2 = load_box_union(p1.serialize())
    t2 = build_tree(decompose(p2))
    assert t1.dump() == t2.dump()


def test_anchor_on_shared_plane():
    t = build_tree(decompose(load_box_union(THREE_BOX)))
    by_id = {b.id: b for b in t.decomp.bands}
    for arc in t.arcs:
        parent = by_id[arc.parent]
        y = parent.y_high if arc.side == "front" else parent.y_low
        assert arc.anchor.point.y == y


def test_degenerate_anchor_rejected():
    # Stacked boxes sharing the left plane: rims overlap along x=0.
    d = decompose(load_box_union("0 0 0 2 1 1\n0 1 0 1 2 1\n"))
    lower = next(b for b in d.bands if b.y_low == 0)
    upper = next(b for b in d.bands if b.y_low == 1)
    with pytest.raises(DegenerateAnchorError):
        select_anchor(lower, upper, F(1))


def test_classification_roles_flip():
    # Same crossing, swapped parent/child roles: C1 becomes C2.
    d = decompose(load_box_union(TWO_BOX))
    a = next(b for b in d.bands if b.y_low == 0)
    b = next(b for b in d.bands if b.y_low == 1)
    assert select_anchor(a, b, F(1)).anchor_class == "C1"
    assert select_anchor(b, a, F(1)).anchor_class == "C2"


def test_tree_dump_format():
    t = build_tree(decompose(load_box_union(TWO_BOX)))
    line = t.dump().strip().split()
    assert len(line) == 7
    assert line[2] == "C1"
