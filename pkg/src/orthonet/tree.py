"""Band unfolding tree: anchors, anchor classes, and unfolding labels.

An anchor joining two adjacent bands is the leftmost topmost intersection
point of their rim cycles (minimal x, then maximal z). Class C1 means the
parent contributes the horizontal edge; C2 the vertical edge. Labels are
the eight spiral types; `strip_directions` and `assign_label` encode the
direction and child-label tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from orthonet.bands import Band, Decomposition, RimEdge
from orthonet.geom import Point3


class TreeError(ValueError):
    pass


class DegenerateAnchorError(ValueError):
    pass


# -- unfolding labels ---------------------------------------------------------

@dataclass(frozen=True)
class UnfoldLabel:
    direction: str   # 'C' (clockwise) or 'CC' (counterclockwise)
    primed: bool     # entering rim is the back rim
    subscript: str   # 's' or 't'

    def __str__(self):
        p = "'" if self.primed else ""
        return f"{self.direction}{p}_{self.subscript}"

    @property
    def entering_rim(self) -> str:
        return "back" if self.primed else "front"

    @property
    def turnaround_rim(self) -> str:
        return "front" if self.primed else "back"

    def with_subscript(self, sub: str) -> "UnfoldLabel":
        return UnfoldLabel(self.direction, self.primed, sub)


ALL_LABELS = [UnfoldLabel(d, p, s)
              for d in ("C", "CC") for p in (False, True) for s in ("s", "t")]


def label_named(name: str) -> UnfoldLabel:
    for lab in ALL_LABELS:
        if str(lab) == name:
            return lab
    raise ValueError(f"unknown label {name!r}")


def strip_directions(label: UnfoldLabel) -> dict[str, tuple[str, str]]:
    """Per-rim strip direction and spiral: {'front': (dir, spiral), 'back': ...}.

    The strip alongside the entering rim belongs to the entering spiral for
    subscript s and to the exiting spiral for subscript t; the two spirals
    run in opposite rotational directions.
    """
    entering_dir = label.direction
    exiting_dir = "CC" if entering_dir == "C" else "C"
    out = {}
    for rim in ("front", "back"):
        at_entering_rim = (rim == label.entering_rim)
        on_entering_spiral = (at_entering_rim == (label.subscript == "s"))
        d = entering_dir if on_entering_spiral else exiting_dir
        out[rim] = (d, "entering" if on_entering_spiral else "exiting")
    return out


def assign_label(parent_label: UnfoldLabel, anchor_class: str, side: str,
                 hand_toward_anchor: Optional[bool] = None) -> UnfoldLabel:
    """Child band label for an anchor of the given class and side.

    `side` is 'front' for a front child, 'back' for a back child. For C2
    anchors `hand_toward_anchor` states whether the hand points toward the
    plane of the anchor when it is reached.
    """
    strip_dir = strip_directions(parent_label)[side][0]
    clockwise = (strip_dir == "C")
    primed = (side == "front")   # child entered on the rim facing the parent
    if anchor_class == "C1":
        sub = "s" if clockwise else "t"
        return UnfoldLabel("CC", primed, sub)
    if anchor_class == "C2":
        if hand_toward_anchor is None:
            raise ValueError("C2 label requires hand orientation")
        if clockwise:
            if hand_toward_anchor:
                return UnfoldLabel("CC", primed, "s")
            return UnfoldLabel("C", primed, "t")
        if hand_toward_anchor:
            return UnfoldLabel("CC", primed, "t")
        return UnfoldLabel("C", primed, "s")
    raise ValueError(f"unknown anchor class {anchor_class!r}")


# -- anchors -------------------------------------------------------------------

@dataclass
class Anchor:
    point: Point3                  # k, in the shared plane
    anchor_class: str              # 'C1' or 'C2'
    parent_edge: RimEdge
    child_edge: RimEdge
    c_point: Optional[Point3]      # C1: endpoint of the child edge inside r[parent]
    o_point: Optional[Point3]      # C1 convex case: first exit of kc from r[parent]
    o_edge: Optional[RimEdge]      # parent edge through o

    @property
    def xz(self) -> tuple[Fraction, Fraction]:
        return (self.point.x, self.point.z)


def _edge_intersections(e1: RimEdge, e2: RimEdge):
    """Intersection points of two closed axis-parallel segments."""
    h, v = (e1, e2) if e1.horizontal else (e2, e1)
    if e1.horizontal == e2.horizontal:
        # Parallel: report overlap endpoints (degenerate contact).
        if e1.horizontal:
            if e1.a[1] != e2.a[1]:
                return []
            lo = max(min(e1.a[0], e1.b[0]), min(e2.a[0], e2.b[0]))
            hi = min(max(e1.a[0], e1.b[0]), max(e2.a[0], e2.b[0]))
            if lo > hi:
                return []
            return [((x, e1.a[1]), True) for x in {lo, hi}]
        if e1.a[0] != e2.a[0]:
            return []
        lo = max(min(e1.a[1], e1.b[1]), min(e2.a[1], e2.b[1]))
        hi = min(max(e1.a[1], e1.b[1]), max(e2.a[1], e2.b[1]))
        if lo > hi:
            return []
        return [((e1.a[0], z), True) for z in {lo, hi}]
    x = v.a[0]
    z = h.a[1]
    if min(h.a[0], h.b[0]) <= x <= max(h.a[0], h.b[0]) and \
            min(v.a[1], v.b[1]) <= z <= max(v.a[1], v.b[1]):
        interior = (min(h.a[0], h.b[0]) < x < max(h.a[0], h.b[0]) and
                    min(v.a[1], v.b[1]) < z < max(v.a[1], v.b[1]))
        return [((x, z), not interior)]
    return []


def rim_intersections(a: Band, b: Band):
    """All boundary intersection points, each flagged degenerate or clean."""
    pts: dict[tuple, bool] = {}
    for ea in a.edges:
        for eb in b.edges:
            for (p, degen) in _edge_intersections(ea, eb):
                pts[p] = pts.get(p, False) or degen
    return pts


def select_anchor(parent: Band, child: Band, plane_y: Fraction) -> Anchor:
    pts = rim_intersections(parent, child)
    if not pts:
        raise TreeError(
            f"adjacent bands {parent.id},{child.id} have no rim intersection")
    k_xz = min(pts, key=lambda p: (p[0], -p[1]))
    if pts[k_xz]:
        raise DegenerateAnchorError(
            f"anchor between bands {parent.id},{child.id} at {k_xz} "
            "is not a transversal crossing")

    p_edges = [e for e in parent.edges if e.contains(k_xz, closed=False)]
    c_edges = [e for e in child.edges if e.contains(k_xz, closed=False)]
    if len(p_edges) != 1 or len(c_edges) != 1:
        raise DegenerateAnchorError(
            f"anchor at {k_xz} does not lie on exactly one edge of each rim")
    pe, ce = p_edges[0], c_edges[0]
    if pe.horizontal == ce.horizontal:
        raise DegenerateAnchorError(
            f"anchor at {k_xz} joins two parallel edges")

    k = Point3(k_xz[0], plane_y, k_xz[1])
    if pe.horizontal:
        cls = "C1"
        c_xz, o_xz, o_edge = _c1_points(parent, pe, ce, k_xz)
        cp = Point3(c_xz[0], plane_y, c_xz[1]) if c_xz else None
        op = Point3(o_xz[0], plane_y, o_xz[1]) if o_xz else None
        return Anchor(k, cls, pe, ce, cp, op, o_edge)
    return Anchor(k, "C2", pe, ce, None, None, None)


def _c1_points(parent: Band, pe: RimEdge, ce: RimEdge, k):
    """Corner c of the child edge inside r[parent]; o = first exit crossing."""
    x, z = k
    # Interior of the parent region is below a top edge, above a bottom edge.
    inward = -1 if pe.kind == "top" else 1
    z_lo, z_hi = sorted((ce.a[1], ce.b[1]))
    c_z = z_lo if inward < 0 else z_hi
    c_xz = (x, c_z)
    # Crossings of the open segment (k -> c) with the parent rim.
    crossings = []
    for e in parent.edges:
        if not e.horizontal:
            if e.a[0] == x:
                lo = max(min(e.a[1], e.b[1]), min(z, c_z))
                hi = min(max(e.a[1], e.b[1]), max(z, c_z))
                if lo < hi:
                    raise DegenerateAnchorError(
                        f"parent rim runs along the child edge at x={x}")
            continue
        ez = e.a[1]
        if min(z, c_z) < ez < max(z, c_z):
            x_lo, x_hi = sorted((e.a[0], e.b[0]))
            if x_lo <= x <= x_hi:
                if x == x_lo or x == x_hi:
                    raise DegenerateAnchorError(
                        f"segment k-c grazes a parent corner at ({x},{ez})")
                crossings.append((abs(ez - z), ez, e))
    if not crossings:
        # c lies in the closed parent region: unexposed (rejected upstream).
        return c_xz, None, None
    crossings.sort()
    _, oz, oe = crossings[0]
    return c_xz, (x, oz), oe


# -- the tree -------------------------------------------------------------------

@dataclass
class Arc:
    parent: int
    child: int
    side: str        # 'front' if the child lies in front (+y) of the parent
    anchor: Anchor


@dataclass
class UnfoldTree:
    root: int
    arcs: list[Arc]
    decomp: Decomposition

    def children_of(self, band_id: int) -> list[Arc]:
        return [a for a in self.arcs if a.parent == band_id]

    def parent_arc(self, band_id: int) -> Optional[Arc]:
        for a in self.arcs:
            if a.child == band_id:
                return a
        return None

    def dump(self) -> str:
        lines = []
        for a in sorted(self.arcs, key=lambda a: (a.parent, a.child)):
            k = a.anchor.point
            lines.append(f"{a.parent} {a.child} {a.anchor.anchor_class} "
                         f"{a.side} {k.x} {k.y} {k.z}")
        return "\n".join(lines) + ("\n" if lines else "")


def build_tree(decomp: Decomposition) -> UnfoldTree:
    bands = decomp.bands
    pairs = decomp.adjacency()
    n = len(bands)
    if len(pairs) != n - 1:
        raise TreeError(
            f"band adjacency is not a tree: {len(pairs)} arcs for {n} bands")

    # Root: smallest y extent, tie-broken by canonical rim start.
    root = min(bands, key=lambda b: (b.y_low, b.rim_cycle()[0])).id

    adj: dict[int, list[int]] = {b.id: [] for b in bands}
    for (a, b) in pairs:
        adj[a].append(b)
        adj[b].append(a)

    by_id = {b.id: b for b in bands}
    arcs: list[Arc] = []
    seen = {root}
    queue = [root]
    while queue:
        pid = queue.pop(0)
        for cid in sorted(adj[pid]):
            if cid in seen:
                continue
            seen.add(cid)
            parent, child = by_id[pid], by_id[cid]
            # Child in front means its layer index is smaller (larger y).
            side = "front" if child.layer < parent.layer else "back"
            plane_y = parent.y_high if side == "front" else parent.y_low
            anchor = select_anchor(parent, child, plane_y)
            arcs.append(Arc(pid, cid, side, anchor))
            queue.append(cid)
    if len(seen) != n:
        raise TreeError("band adjacency graph is disconnected")
    return UnfoldTree(root, arcs, decomp)
