"""Orthogonal polyhedron model built from a union of axis-aligned boxes.

The solid is represented by its y-cross-sections: between two consecutive
section-change planes the cross-section is constant, so every layer is an
extrusion of a rectilinear region. Facets, corner vertices, the surface
grid and all validation checks derive from the section stack.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from orthonet.geom import FACE_DIR, Point3, fr
from orthonet.regions import Region


class BoxParseError(ValueError):
    pass


class DegenerateBoxError(ValueError):
    pass


class DisconnectedUnionError(ValueError):
    pass


@dataclass(frozen=True)
class Box:
    x0: Fraction
    y0: Fraction
    z0: Fraction
    x1: Fraction
    y1: Fraction
    z1: Fraction

    def xz_rect(self):
        return (self.x0, self.z0, self.x1, self.z1)

    def line(self) -> str:
        vals = (self.x0, self.y0, self.z0, self.x1, self.y1, self.z1)
        return " ".join(str(v) for v in vals)


@dataclass(frozen=True)
class Facet:
    """Maximal planar surface piece: plane (axis, offset), region, outward normal."""

    axis: str              # plane normal axis: 'x', 'y' or 'z'
    offset: Fraction
    region: Region         # in the plane's 2D coords (see plane_coords)
    normal_sign: int       # +1 or -1 along axis

    @property
    def direction(self) -> str:
        return FACE_DIR[(self.axis, self.normal_sign)]

    def area(self) -> Fraction:
        return self.region.area()


# 2D coordinate conventions per facet plane axis. The pair names the world
# axes that play the role of (u, v) in Region coordinates.
PLANE_COORDS = {"y": ("x", "z"), "x": ("y", "z"), "z": ("x", "y")}


@dataclass
class ValidationReport:
    is_orthogonal: bool = True
    is_closed: bool = True
    is_genus_zero: bool = True
    has_no_y_dents: bool = True
    all_left_vertices_exposed: bool = True
    offenders: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return (self.is_orthogonal and self.is_closed and self.is_genus_zero
                and self.has_no_y_dents and self.all_left_vertices_exposed)

    def to_dict(self) -> dict:
        return {
            "isOrthogonal": self.is_orthogonal,
            "isClosed": self.is_closed,
            "isGenusZero": self.is_genus_zero,
            "hasNoYDents": self.has_no_y_dents,
            "allLeftVerticesExposed": self.all_left_vertices_exposed,
            "ok": self.ok,
            "offenders": {k: [str(v) for v in vs] for k, vs in self.offenders.items()},
        }


class OrthoPolyhedron:
    """Boundary surface of a union of boxes, sliced into constant sections."""

    def __init__(self, boxes: list[Box]):
        self.boxes = sorted(boxes, key=lambda b: (b.x0, b.y0, b.z0, b.x1, b.y1, b.z1))
        self._build_sections()
        self._facets: Optional[list[Facet]] = None
        self._vertices: Optional[list[Point3]] = None

    # -- sections ----------------------------------------------------------

    def _build_sections(self):
        ys = sorted({v for b in self.boxes for v in (b.y0, b.y1)})
        raw_levels: list[Fraction] = []
        raw_sections: list[Region] = []
        for k in range(len(ys) - 1):
            lo, hi = ys[k], ys[k + 1]
            rects = [b.xz_rect() for b in self.boxes if b.y0 <= lo and hi <= b.y1]
            raw_levels.append(lo)
            raw_sections.append(Region.from_rects(rects))
        raw_levels.append(ys[-1])

        for sec in raw_sections:
            if sec.is_empty():
                raise DisconnectedUnionError("union has a gap along y")

        # Merge consecutive intervals with identical sections: the survivors
        # are exactly the planes through vertices of the solid.
        levels = [raw_levels[0]]
        sections = [raw_sections[0]]
        for k in range(1, len(raw_sections)):
            if raw_sections[k] == sections[-1]:
                continue
            levels.append(raw_levels[k])
            sections.append(raw_sections[k])
        levels.append(raw_levels[-1])

        # Paper convention: Y_1 has the largest y. Store levels descending and
        # sections[i] spanning (levels[i+1], levels[i]).
        self.ylevels: list[Fraction] = list(reversed(levels))
        self.sections: list[Region] = list(reversed(sections))

        self._check_connected()

    def _check_connected(self):
        comps: list[tuple[int, Region]] = []
        for i, sec in enumerate(self.sections):
            comps.extend((i, c) for c in sec.components())
        if not comps:
            raise DisconnectedUnionError("empty solid")
        n = len(comps)
        adj = [[] for _ in range(n)]
        for a in range(n):
            for b in range(a + 1, n):
                ia, ra = comps[a]
                ib, rb = comps[b]
                if abs(ia - ib) <= 1 and ra.closed_intersects(rb):
                    adj[a].append(b)
                    adj[b].append(a)
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != n:
            raise DisconnectedUnionError("union has more than one solid component")

    def layer_span(self, i: int) -> tuple[Fraction, Fraction]:
        """(y_low, y_high) of layer i; layer 0 has the largest y."""
        return self.ylevels[i + 1], self.ylevels[i]

    @property
    def n_layers(self) -> int:
        return len(self.sections)

    def section_at_plane(self, k: int) -> Region:
        """Closed cross-section at plane ylevels[k] (union of both sides)."""
        above = self.sections[k - 1] if k - 1 >= 0 else Region.empty()
        below = self.sections[k] if k < len(self.sections) else Region.empty()
        return above.union(below)

    # -- facets --------------------------------------------------------------

    def facets(self) -> list[Facet]:
        if self._facets is not None:
            return self._facets
        out: list[Facet] = []

        # Front/back facets at each y-plane. Outward +y where the solid lies
        # behind (smaller y) and not ahead.
        for k, y in enumerate(self.ylevels):
            above = self.sections[k - 1] if k - 1 >= 0 else Region.empty()
            below = self.sections[k] if k < len(self.sections) else Region.empty()
            front = below.difference(above)   # solid behind, free ahead: +y
            back = above.difference(below)    # solid ahead, free behind: -y
            for reg in front.components():
                out.append(Facet("y", y, reg, +1))
            for reg in back.components():
                out.append(Facet("y", y, reg, -1))

        # Side facets: per x-plane and z-plane, symmetric difference of the
        # solid occupancy on both sides, assembled in (axis1, y) coordinates.
        out.extend(self._side_facets("x"))
        out.extend(self._side_facets("z"))
        self._facets = out
        return out

    def _side_facets(self, axis: str) -> list[Facet]:
        # Coordinates within a section: x is Region's first axis, z second.
        coords = sorted({v for sec in self.sections for v in
                         (sec.xs if axis == "x" else sec.zs)})
        out = []
        for c in coords:
            pos_rects = []  # region where solid is on +axis side only: normal -axis
            neg_rects = []
            for i, sec in enumerate(self.sections):
                ylo, yhi = self.layer_span(i)
                spans_pos = self._section_spans(sec, axis, c, +1)
                spans_neg = self._section_spans(sec, axis, c, -1)
                for (a, b) in self._span_diff(spans_pos, spans_neg):
                    pos_rects.append(self._plane_rect(axis, ylo, yhi, a, b))
                for (a, b) in self._span_diff(spans_neg, spans_pos):
                    neg_rects.append(self._plane_rect(axis, ylo, yhi, a, b))
            pos_reg = Region.from_rects(pos_rects)
            neg_reg = Region.from_rects(neg_rects)
            for reg in pos_reg.components():
                out.append(Facet(axis, c, reg, -1))
            for reg in neg_reg.components():
                out.append(Facet(axis, c, reg, +1))
        return out

    @staticmethod
    def _plane_rect(axis: str, ylo, yhi, a, b):
        """Rect in PLANE_COORDS order for a side-facet plane."""
        if axis == "x":   # coords (y, z)
            return (ylo, a, yhi, b)
        return (a, ylo, b, yhi)  # axis == 'z': coords (x, y)

    @staticmethod
    def _section_spans(sec: Region, axis: str, c: Fraction, side: int):
        """Occupied intervals of the other axis in the column touching plane c."""
        import bisect

        if sec.is_empty():
            return []
        coords = sec.xs if axis == "x" else sec.zs
        if side > 0:
            col = bisect.bisect_right(coords, c) - 1
        else:
            col = bisect.bisect_left(coords, c) - 1
        if col < 0 or col >= len(coords) - 1:
            return []
        other = sec.zs if axis == "x" else sec.xs
        spans = []
        for j in range(len(other) - 1):
            cell = (col, j) if axis == "x" else (j, col)
            if cell in sec.cells:
                spans.append((other[j], other[j + 1]))
        merged = []
        for a, b in spans:
            if merged and merged[-1][1] == a:
                merged[-1] = (merged[-1][0], b)
            else:
                merged.append((a, b))
        return merged

    @staticmethod
    def _span_diff(a_spans, b_spans):
        """1D interval difference a \\ b."""
        out = []
        for a0, a1 in a_spans:
            parts = [(a0, a1)]
            for b0, b1 in b_spans:
                nxt = []
                for p0, p1 in parts:
                    if b1 <= p0 or p1 <= b0:
                        nxt.append((p0, p1))
                        continue
                    if p0 < b0:
                        nxt.append((p0, b0))
                    if b1 < p1:
                        nxt.append((b1, p1))
                parts = nxt
            out.extend(parts)
        return [p for p in out if p[0] < p[1]]

    # -- vertices and grid ----------------------------------------------------

    def corner_vertices(self) -> list[Point3]:
        """Slab cross-section corners at their bounding planes."""
        if self._vertices is not None:
            return self._vertices
        pts = set()
        for i, sec in enumerate(self.sections):
            ylo, yhi = self.layer_span(i)
            for comp in sec.components():
                try:
                    cyc = comp.boundary_cycle()
                except ValueError:
                    continue  # invalid inputs handled by validation
                for (x, z) in cyc:
                    pts.add(Point3(x, ylo, z))
                    pts.add(Point3(x, yhi, z))
        self._vertices = sorted(pts, key=lambda p: p.key())
        return self._vertices

    def grid_coords(self) -> dict[str, list[Fraction]]:
        # Normalized section breakpoints are exactly the vertex coordinates.
        xs, zs = set(), set()
        for sec in self.sections:
            n = sec.normalized()
            xs.update(n.xs)
            zs.update(n.zs)
        return {"x": sorted(xs), "y": sorted(self.ylevels), "z": sorted(zs)}

    def min_grid_gap(self) -> Fraction:
        g = self.grid_coords()
        gaps = []
        for axis in "xyz":
            cs = g[axis]
            gaps.extend(cs[k + 1] - cs[k] for k in range(len(cs) - 1))
        return min(gaps)

    def grid_cells(self) -> list[tuple]:
        """Gridded surface cells: (axis, offset, u0, v0, u1, v1) rectangles.

        Every facet is resampled onto the full vertex grid, so neighbouring
        cells share edges exactly (a proper cell complex).
        """
        g = self.grid_coords()
        cells = []
        for f in self.facets():
            ua, va = PLANE_COORDS[f.axis]
            reg = f.region.resample(
                sorted(set(f.region.xs) | set(g[ua])),
                sorted(set(f.region.zs) | set(g[va])))
            for (i, j) in reg.cells:
                cells.append((f.axis, f.offset,
                              reg.xs[i], reg.zs[j], reg.xs[i + 1], reg.zs[j + 1]))
        return cells

    def surface_area(self) -> Fraction:
        return sum(f.area() for f in self.facets())

    # -- serialization ---------------------------------------------------------

    def serialize(self) -> str:
        return "\n".join(b.line() for b in self.boxes) + "\n"


def parse_box_line(line: str, lineno: int) -> Optional[Box]:
    body = line.split("#", 1)[0].strip()
    if not body:
        return None
    parts = body.split()
    if len(parts) != 6:
        raise BoxParseError(f"line {lineno}: expected 6 coordinates, got {len(parts)}")
    try:
        vals = [fr(p) for p in parts]
    except (ValueError, ZeroDivisionError) as e:
        raise BoxParseError(f"line {lineno}: {e}")
    x0, y0, z0, x1, y1, z1 = vals
    if not (x0 < x1 and y0 < y1 and z0 < z1):
        raise DegenerateBoxError(f"line {lineno}: box has a non-positive extent")
    return Box(x0, y0, z0, x1, y1, z1)


def load_box_union(text: str) -> OrthoPolyhedron:
    boxes = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        box = parse_box_line(line, lineno)
        if box is not None:
            boxes.append(box)
    if not boxes:
        raise BoxParseError("no boxes in document")
    return OrthoPolyhedron(boxes)


def classify_faces(poly: OrthoPolyhedron) -> dict[Facet, str]:
    return {f: f.direction for f in poly.facets()}


def euler_characteristic(poly: OrthoPolyhedron) -> tuple[int, bool]:
    """(V - E + F, every-edge-has-two-cells) over the gridded surface."""
    cells = poly.grid_cells()
    verts = set()
    edge_count: dict = {}
    for (axis, off, u0, v0, u1, v1) in cells:
        ua, va = PLANE_COORDS[axis]

        def mk(u, v):
            c = {axis: off, ua: u, va: v}
            return (c["x"], c["y"], c["z"])

        p00, p10 = mk(u0, v0), mk(u1, v0)
        p01, p11 = mk(u0, v1), mk(u1, v1)
        verts.update((p00, p10, p01, p11))
        for e in ((p00, p10), (p01, p11), (p00, p01), (p10, p11)):
            key = tuple(sorted(e))
            edge_count[key] = edge_count.get(key, 0) + 1
    closed = all(c == 2 for c in edge_count.values())
    chi = len(verts) - len(edge_count) + len(cells)
    return chi, closed


def left_corner_points(poly: OrthoPolyhedron) -> list[tuple[Point3, int]]:
    """Rim corners whose z-parallel section edge bounds a left face.

    Returns (point, owning slab count). A corner is exposed iff the count
    is one.
    """
    out = []
    for i, sec in enumerate(poly.sections):
        ylo, yhi = poly.layer_span(i)
        for comp in sec.components():
            try:
                cyc = comp.boundary_cycle()
            except ValueError:
                continue  # holed/pinched sections are rejected elsewhere
            n = len(cyc)
            for k in range(n):
                prev = cyc[k - 1]
                here = cyc[k]
                nxt = cyc[(k + 1) % n]
                # Clockwise cycle: left edges travel +z.
                for a, b in ((prev, here), (here, nxt)):
                    if a[0] == b[0] and b[1] > a[1]:  # z-parallel upward: left edge
                        count = _owning_slab_count(poly, here, i)
                        out.append((Point3(here[0], ylo, here[1]), count[0]))
                        out.append((Point3(here[0], yhi, here[1]), count[1]))
                        break
    return out


def _owning_slab_count(poly: OrthoPolyhedron, pt, layer: int) -> tuple[int, int]:
    """Owning-slab counts for a section corner at (y_low, y_high) of its layer."""
    x, z = pt
    counts = []
    for plane_idx in (layer + 1, layer):  # ylevels index of low/high plane
        n = 0
        for li in (plane_idx - 1, plane_idx):
            if 0 <= li < poly.n_layers:
                for comp in poly.sections[li].components():
                    if comp.contains_point_closed(x, z):
                        n += 1
        counts.append(n)
    return counts[0], counts[1]


def validate_orthogrid(poly: OrthoPolyhedron) -> ValidationReport:
    rep = ValidationReport()

    # Closedness and genus via the gridded surface complex.
    chi, closed = euler_characteristic(poly)
    if not closed:
        rep.is_closed = False
        rep.offenders.setdefault("closed", []).append("edge shared by != 2 cells")
    if chi != 2:
        rep.is_genus_zero = False
        rep.offenders.setdefault("genus", []).append(f"euler characteristic {chi}")

    # Pinched sections are non-manifold: report under closedness.
    for i, sec in enumerate(poly.sections):
        for p in sec.pinch_points():
            rep.is_closed = False
            rep.offenders.setdefault("closed", []).append(
                f"pinched section at layer {i}: {p}")

    # y-dents: every cross-section (layer interiors and planes) is a union of
    # simply-connected components.
    for i, sec in enumerate(poly.sections):
        for comp in sec.components():
            if comp.has_hole():
                rep.has_no_y_dents = False
                rep.offenders.setdefault("ydent", []).append(f"layer {i}")
    for k in range(len(poly.ylevels)):
        for comp in poly.section_at_plane(k).components():
            if comp.has_hole():
                rep.has_no_y_dents = False
                rep.offenders.setdefault("ydent", []).append(
                    f"plane y={poly.ylevels[k]}")

    # Exposure of left vertices.
    for pt, owners in left_corner_points(poly):
        if owners != 1:
            rep.all_left_vertices_exposed = False
            rep.offenders.setdefault("unexposed_left", []).append(pt)

    return rep
