"""Layers, slabs, bands and rims of an orthogonal polyhedron.

Within a layer the cross-section is constant, so a slab is an extrusion of
a simple rectilinear polygon and its band is that polygon's boundary swept
through the layer. Both rims of a band share the same (x, z) cycle.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from orthonet.geom import Point3
from orthonet.polyhedron import OrthoPolyhedron
from orthonet.regions import Region

# Edge kinds keyed by clockwise travel direction (interior to the right).
#   +x: top face below the edge; -x: bottom; -z: right face west of edge; +z: left.
_EDGE_KIND = {(1, 0): "top", (-1, 0): "bottom", (0, -1): "right", (0, 1): "left"}

# Outward normal axis sign of the band face bounded by each edge kind.
FACE_NORMAL = {"top": ("z", 1), "bottom": ("z", -1), "right": ("x", 1), "left": ("x", -1)}


@dataclass(frozen=True)
class RimEdge:
    """One clockwise edge of a band's cross-section cycle."""

    index: int
    a: tuple[Fraction, Fraction]   # start (x, z)
    b: tuple[Fraction, Fraction]   # end (x, z)
    kind: str                      # top / bottom / left / right

    @property
    def horizontal(self) -> bool:
        return self.kind in ("top", "bottom")

    @property
    def length(self) -> Fraction:
        return abs(self.b[0] - self.a[0]) + abs(self.b[1] - self.a[1])

    def travel(self) -> tuple[int, int]:
        dx = self.b[0] - self.a[0]
        dz = self.b[1] - self.a[1]
        sx = 0 if dx == 0 else (1 if dx > 0 else -1)
        sz = 0 if dz == 0 else (1 if dz > 0 else -1)
        return sx, sz

    def point_at(self, t: Fraction) -> tuple[Fraction, Fraction]:
        """Point at distance t from the edge start (0 <= t <= length)."""
        sx, sz = self.travel()
        return (self.a[0] + sx * t, self.a[1] + sz * t)

    def param_of(self, pt: tuple[Fraction, Fraction]) -> Fraction:
        sx, sz = self.travel()
        if sx:
            return (pt[0] - self.a[0]) * sx
        return (pt[1] - self.a[1]) * sz

    def contains(self, pt: tuple[Fraction, Fraction], closed: bool = True) -> bool:
        t = None
        if self.a[0] == self.b[0] == pt[0]:
            t = self.param_of(pt)
        elif self.a[1] == self.b[1] == pt[1]:
            t = self.param_of(pt)
        if t is None:
            return False
        return (0 <= t <= self.length) if closed else (0 < t < self.length)


@dataclass
class Band:
    """Side surface of a slab: its section boundary swept through the layer."""

    id: int
    layer: int
    y_low: Fraction
    y_high: Fraction
    region: Region
    edges: list[RimEdge]

    @property
    def height(self) -> Fraction:
        return self.y_high - self.y_low

    @property
    def perimeter(self) -> Fraction:
        return sum(e.length for e in self.edges)

    def rim_y(self, side: str) -> Fraction:
        return self.y_high if side == "front" else self.y_low

    def rim_side_of_plane(self, y: Fraction) -> str:
        if y == self.y_high:
            return "front"
        if y == self.y_low:
            return "back"
        raise ValueError(f"band {self.id} has no rim at y={y}")

    def corner(self, i: int) -> tuple[Fraction, Fraction]:
        return self.edges[i % len(self.edges)].a

    def corner_convex(self, i: int) -> bool:
        """Convexity of the corner at the start of edge i (clockwise cycle)."""
        n = len(self.edges)
        din = self.edges[(i - 1) % n].travel()
        dout = self.edges[i % n].travel()
        cross = din[0] * dout[1] - din[1] * dout[0]
        return cross < 0

    def rim_cycle(self) -> list[tuple[Fraction, Fraction]]:
        return [e.a for e in self.edges]

    def edge_of_point(self, pt, *, horizontal: Optional[bool] = None) -> RimEdge:
        """The edge containing pt; corners resolve to the requested kind."""
        hits = [e for e in self.edges if e.contains(pt)]
        if horizontal is not None:
            hits = [e for e in hits if e.horizontal == horizontal]
        if not hits:
            raise ValueError(f"point {pt} not on band {self.id} rim")
        return hits[0]


@dataclass
class Slab:
    layer: int
    y_low: Fraction
    y_high: Fraction
    region: Region
    band: Band


@dataclass
class Layer:
    index: int
    y_low: Fraction
    y_high: Fraction
    slabs: list[Slab] = field(default_factory=list)


@dataclass
class Decomposition:
    poly: OrthoPolyhedron
    layers: list[Layer]
    bands: list[Band]

    def adjacency(self) -> list[tuple[int, int]]:
        """Pairs (a, b) of adjacent band ids, a in the layer in front of b."""
        out = []
        for a in self.bands:
            for b in self.bands:
                if b.layer != a.layer + 1:
                    continue
                if adjacent(a, b):
                    out.append((a.id, b.id))
        return out

    def dump(self) -> str:
        recs = []
        for b in self.bands:
            recs.append({
                "band": b.id,
                "layer": b.layer,
                "y": [str(b.y_low), str(b.y_high)],
                "rim": [[str(x), str(z)] for (x, z) in b.rim_cycle()],
            })
        return json.dumps(recs, indent=1)


def y_planes(poly: OrthoPolyhedron) -> list[Fraction]:
    """Vertex planes orthogonal to y, strictly decreasing (Y1 largest)."""
    return list(poly.ylevels)


def _cycle_edges(cycle: list[tuple[Fraction, Fraction]]) -> list[RimEdge]:
    edges = []
    n = len(cycle)
    for i in range(n):
        a, b = cycle[i], cycle[(i + 1) % n]
        dx = b[0] - a[0]
        dz = b[1] - a[1]
        sx = 0 if dx == 0 else (1 if dx > 0 else -1)
        sz = 0 if dz == 0 else (1 if dz > 0 else -1)
        edges.append(RimEdge(i, a, b, _EDGE_KIND[(sx, sz)]))
    return edges


def decompose(poly: OrthoPolyhedron) -> Decomposition:
    layers = []
    bands = []
    bid = 0
    for i, sec in enumerate(poly.sections):
        ylo, yhi = poly.layer_span(i)
        layer = Layer(i, ylo, yhi)
        for comp in sec.components():
            cycle = comp.boundary_cycle()
            band = Band(bid, i, ylo, yhi, comp, _cycle_edges(cycle))
            layer.slabs.append(Slab(i, ylo, yhi, comp, band))
            bands.append(band)
            bid += 1
        layers.append(layer)
    return Decomposition(poly, layers, bands)


def adjacent(a: Band, b: Band) -> bool:
    """Closed rim regions share a point at the plane between the bands."""
    if abs(a.layer - b.layer) != 1:
        raise ValueError("bands are not in consecutive layers")
    return a.region.closed_intersects(b.region)


def exposure(decomp: Decomposition) -> dict[Point3, list[int]]:
    """Corner vertex -> ids of slabs whose closure contains it."""
    out: dict[Point3, list[int]] = {}
    poly = decomp.poly
    for band in decomp.bands:
        for y in (band.y_low, band.y_high):
            for (x, z) in band.rim_cycle():
                pt = Point3(x, y, z)
                if pt in out:
                    continue
                owners = []
                for other in decomp.bands:
                    if other.y_low <= y <= other.y_high and \
                            other.region.contains_point_closed(x, z):
                        owners.append(other.id)
                out[pt] = owners
    return out
