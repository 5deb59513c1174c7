"""Surface strip quads and their exact planar development.

A quad is an axis-aligned rectangle on a face plane of the polyhedron.
Consecutive quads share a hinge segment; developing the sequence unfolds
each quad about the hinge into the plane. The development maps the hand
direction of every quad to +X, which is what makes the net a monotone
staircase outside pockets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from orthonet.geom import Vec3, axis_vec

AXES = ("x", "y", "z")


def _other_axis(a: str, b: str) -> str:
    return next(c for c in AXES if c != a and c != b)


@dataclass
class Quad:
    """Axis-aligned rectangle on a face plane, traversed by the strip."""

    plane_axis: str
    plane_off: Fraction
    lo: dict                   # axis -> Fraction (lo[plane_axis] == plane_off)
    hi: dict
    band: Optional[int]        # owning band id; None for facet quads
    kind: str                  # loop / descent / ascent / turnaround / transition ...
    hand: Vec3                 # hand direction while the strip occupies this quad
    glide_in: Vec3
    glide_out: Vec3
    pocket: bool = False
    depth: int = 0             # nesting level (lane index), reporting only
    claims: list = field(default_factory=list)  # extra absorbed rects (lo, hi dicts)

    def __post_init__(self):
        assert self.lo[self.plane_axis] == self.hi[self.plane_axis] == self.plane_off
        for a in AXES:
            if a != self.plane_axis:
                assert self.lo[a] < self.hi[a], f"empty quad extent on {a}: {self}"

    @property
    def free_axes(self) -> tuple[str, str]:
        return tuple(a for a in AXES if a != self.plane_axis)

    def extent(self, axis: str) -> Fraction:
        return self.hi[axis] - self.lo[axis]

    def side(self, axis: str, end: int) -> Fraction:
        return self.lo[axis] if end < 0 else self.hi[axis]

    def rect2(self) -> tuple:
        """(axis_u, axis_v, u0, v0, u1, v1) in the plane's own coords."""
        u, v = self.free_axes
        return (u, v, self.lo[u], self.lo[v], self.hi[u], self.hi[v])

    def area(self) -> Fraction:
        u, v = self.free_axes
        return self.extent(u) * self.extent(v) + sum(
            (h[u] - l[u]) * (h[v] - l[v]) for (l, h) in self.claims)

    def face_key(self) -> tuple:
        return (self.plane_axis, self.plane_off)

    def __repr__(self):
        u, v = self.free_axes
        return (f"Quad({self.kind} {self.plane_axis}={self.plane_off} "
                f"{u}:[{self.lo[u]},{self.hi[u]}] {v}:[{self.lo[v]},{self.hi[v]}] "
                f"hand={self.hand} band={self.band})")


def hinge_segment(a: Quad, b: Quad):
    """Shared boundary segment of two quads, as (axis, lo_pt, hi_pt).

    The quads either lie on the same plane (segment on the shared edge) or
    on perpendicular planes meeting along a line. Returns None if they do
    not share a positive-length segment.
    """
    # Common line: for each axis, the overlap of the two intervals.
    ivs = {}
    for ax in AXES:
        lo = max(a.lo[ax], b.lo[ax])
        hi = min(a.hi[ax], b.hi[ax])
        if lo > hi:
            return None
        ivs[ax] = (lo, hi)
    pos = [ax for ax in AXES if ivs[ax][0] < ivs[ax][1]]
    if len(pos) != 1:
        return None
    ax = pos[0]
    lo_pt = {c: ivs[c][0] for c in AXES}
    hi_pt = dict(lo_pt)
    hi_pt[ax] = ivs[ax][1]
    return (ax, lo_pt, hi_pt)


def transport(vec: Vec3, a: Quad, b: Quad, hinge) -> Vec3:
    """Carry a tangent direction of quad a across the hinge onto quad b."""
    h_ax, lo_pt, _ = hinge
    if a.face_key() == b.face_key():
        return vec
    v_ax = vec.axis()
    if v_ax == h_ax:
        return vec
    # Perpendicular part: into-a maps to minus into-b.
    a_ax = _other_axis(a.plane_axis, h_ax)
    b_ax = _other_axis(b.plane_axis, h_ax)
    assert v_ax == a_ax, f"vector {vec} not tangent to {a}"
    h_a = lo_pt[a_ax]
    n_a = 1 if (a.lo[a_ax] >= h_a and a.hi[a_ax] > h_a) else -1
    h_b = lo_pt[b_ax]
    n_b = 1 if (b.lo[b_ax] >= h_b and b.hi[b_ax] > h_b) else -1
    s = vec.sign() * n_a  # +1 if vec points into a
    return axis_vec(b_ax, -s * n_b)


@dataclass
class PlanarMap:
    """Exact affine map from a face plane into the net plane."""

    cols: dict                     # axis -> (mx, my) for the two free axes
    off: tuple[Fraction, Fraction]

    def apply(self, pt: dict) -> tuple[Fraction, Fraction]:
        x = self.off[0]
        y = self.off[1]
        for ax, (mx, my) in self.cols.items():
            x += pt[ax] * mx
            y += pt[ax] * my
        return (x, y)

    def apply_vec(self, vec: Vec3) -> tuple[int, int]:
        ax = vec.axis()
        mx, my = self.cols[ax]
        s = vec.sign()
        return (s * mx, s * my)


@dataclass
class PlanarQuad:
    source: Quad
    x0: Fraction
    y0: Fraction
    x1: Fraction
    y1: Fraction
    claim_rects: list  # list of (x0, y0, x1, y1) including the own rect

    @property
    def width(self) -> Fraction:
        return self.x1 - self.x0

    @property
    def height(self) -> Fraction:
        return self.y1 - self.y0


class DevelopmentError(ValueError):
    pass


def develop(quads: list[Quad]) -> list[PlanarQuad]:
    """Flatten the strip: hand maps to +X on every quad."""
    if not quads:
        return []
    out = []
    maps: list[PlanarMap] = []
    q0 = quads[0]
    u, v = q0.free_axes
    h_ax = q0.hand.axis()
    o_ax = u if u != h_ax else v
    cols = {h_ax: (q0.hand.sign(), 0), o_ax: (0, 1)}
    m = PlanarMap(cols, (Fraction(0), Fraction(0)))
    maps.append(m)
    out.append(_planar(q0, m))

    for i in range(1, len(quads)):
        a, b = quads[i - 1], quads[i]
        hinge = hinge_segment(a, b)
        if hinge is None:
            raise DevelopmentError(
                f"quads {i-1} and {i} share no hinge:\n  {a}\n  {b}")
        ma = maps[-1]
        if a.face_key() == b.face_key():
            mb = PlanarMap(dict(ma.cols), ma.off)
        else:
            h_ax, lo_pt, _hi = hinge
            a_ax = _other_axis(a.plane_axis, h_ax)
            b_ax = _other_axis(b.plane_axis, h_ax)
            h_b = lo_pt[b_ax]
            n_b = 1 if (b.lo[b_ax] >= h_b and b.hi[b_ax] > h_b) else -1
            h_a = lo_pt[a_ax]
            n_a = 1 if (a.lo[a_ax] >= h_a and a.hi[a_ax] > h_a) else -1
            # M_b(into-b) = -M_a(into-a); hinge direction is preserved.
            mai = ma.cols[a_ax]
            cols = {h_ax: ma.cols[h_ax],
                    b_ax: (-mai[0] * n_a * n_b, -mai[1] * n_a * n_b)}
            # Offset: hinge point maps identically.
            base = ma.apply(lo_pt)
            raw = (lo_pt[h_ax] * cols[h_ax][0] + lo_pt[b_ax] * cols[b_ax][0],
                   lo_pt[h_ax] * cols[h_ax][1] + lo_pt[b_ax] * cols[b_ax][1])
            mb = PlanarMap(cols, (base[0] - raw[0], base[1] - raw[1]))
        # Verify hand consistency: the engine's hand must map to +X.
        hx, hy = mb.apply_vec(b.hand)
        if (hx, hy) != (1, 0):
            raise DevelopmentError(
                f"hand of quad {i} develops to {(hx, hy)}, not +X: {b}")
        maps.append(mb)
        out.append(_planar(b, mb))
    return out


def _planar(q: Quad, m: PlanarMap) -> PlanarQuad:
    pts = [m.apply(q.lo), m.apply(q.hi)]
    x0 = min(p[0] for p in pts)
    x1 = max(p[0] for p in pts)
    y0 = min(p[1] for p in pts)
    y1 = max(p[1] for p in pts)
    rects = [(x0, y0, x1, y1)]
    for (lo, hi) in q.claims:
        pts = [m.apply(lo), m.apply(hi)]
        rects.append((min(p[0] for p in pts), min(p[1] for p in pts),
                      max(p[0] for p in pts), max(p[1] for p in pts)))
    return PlanarQuad(q, x0, y0, x1, y1, rects)


@dataclass(frozen=True)
class EpsilonSchedule:
    """Strip width budget: eps(depth) shrinks by 4x per tree depth."""

    eps0: Fraction

    def eps(self, depth: int) -> Fraction:
        return self.eps0 / (4 ** depth)

    @staticmethod
    def for_polyhedron(poly, override: Optional[Fraction] = None) -> "EpsilonSchedule":
        base = override if override is not None else poly.min_grid_gap() / 8
        return EpsilonSchedule(Fraction(base))
