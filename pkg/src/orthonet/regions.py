"""Exact rectilinear regions over a compressed coordinate grid.

A Region is a set of occupied cells on a grid of rational breakpoints.
All boolean operations resample both operands onto the merged grid, so
results are exact. Closed-set semantics (point and edge contact) are
available through dedicated predicates; cell occupancy itself models the
open interior.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Optional

Rect = tuple[Fraction, Fraction, Fraction, Fraction]  # x0, z0, x1, z1


def _merge_coords(a: Iterable[Fraction], b: Iterable[Fraction]) -> list[Fraction]:
    return sorted(set(a) | set(b))


class Region:
    """Union of axis-aligned rectangles in the (x, z) plane."""

    __slots__ = ("xs", "zs", "cells")

    def __init__(self, xs: list[Fraction], zs: list[Fraction], cells: frozenset):
        self.xs = xs
        self.zs = zs
        self.cells = cells

    # -- construction -----------------------------------------------------

    @staticmethod
    def empty() -> "Region":
        return Region([], [], frozenset())

    @staticmethod
    def from_rects(rects: Iterable[Rect]) -> "Region":
        rects = [r for r in rects if r[0] < r[2] and r[1] < r[3]]
        if not rects:
            return Region.empty()
        xs = sorted({v for r in rects for v in (r[0], r[2])})
        zs = sorted({v for r in rects for v in (r[1], r[3])})
        cells = set()
        for i in range(len(xs) - 1):
            for j in range(len(zs) - 1):
                x0, x1 = xs[i], xs[i + 1]
                z0, z1 = zs[j], zs[j + 1]
                for r in rects:
                    if r[0] <= x0 and x1 <= r[2] and r[1] <= z0 and z1 <= r[3]:
                        cells.add((i, j))
                        break
        return Region(xs, zs, frozenset(cells)).normalized()

    @staticmethod
    def rect(x0, z0, x1, z1) -> "Region":
        return Region.from_rects([(x0, z0, x1, z1)])

    def is_empty(self) -> bool:
        return not self.cells

    # -- canonical form ----------------------------------------------------

    def normalized(self) -> "Region":
        """Drop grid lines that separate identical columns/rows."""
        if not self.cells:
            return Region.empty()
        nx, nz = len(self.xs) - 1, len(self.zs) - 1
        used_i = sorted({i for i, _ in self.cells})
        used_j = sorted({j for _, j in self.cells})
        i_lo, i_hi = used_i[0], used_i[-1]
        j_lo, j_hi = used_j[0], used_j[-1]

        col = {i: frozenset(j for jj in range(nz) for j in [jj] if (i, jj) in self.cells)
               for i in range(i_lo, i_hi + 1)}
        keep_x = [i_lo]
        for i in range(i_lo + 1, i_hi + 1):
            if col[i] != col[i - 1]:
                keep_x.append(i)
        row = {j: frozenset(i for ii in range(nx) for i in [ii] if (ii, j) in self.cells)
               for j in range(j_lo, j_hi + 1)}
        keep_z = [j_lo]
        for j in range(j_lo + 1, j_hi + 1):
            if row[j] != row[j - 1]:
                keep_z.append(j)

        xs = [self.xs[i] for i in keep_x] + [self.xs[i_hi + 1]]
        zs = [self.zs[j] for j in keep_z] + [self.zs[j_hi + 1]]
        xmap = {}
        for newi, i in enumerate(keep_x):
            nxt = keep_x[newi + 1] if newi + 1 < len(keep_x) else i_hi + 1
            for ii in range(i, nxt):
                xmap[ii] = newi
        zmap = {}
        for newj, j in enumerate(keep_z):
            nxt = keep_z[newj + 1] if newj + 1 < len(keep_z) else j_hi + 1
            for jj in range(j, nxt):
                zmap[jj] = newj
        cells = frozenset((xmap[i], zmap[j]) for (i, j) in self.cells)
        return Region(xs, zs, cells)

    def __eq__(self, other):
        if not isinstance(other, Region):
            return NotImplemented
        a, b = self.normalized(), other.normalized()
        return a.xs == b.xs and a.zs == b.zs and a.cells == b.cells

    def __hash__(self):
        n = self.normalized()
        return hash((tuple(n.xs), tuple(n.zs), n.cells))

    # -- resampling and boolean ops ----------------------------------------

    def resample(self, xs: list[Fraction], zs: list[Fraction]) -> "Region":
        """Express this region on a finer grid (xs/zs must refine ours)."""
        if not self.cells:
            return Region(xs, zs, frozenset())
        import bisect

        cells = set()
        for (i, j) in self.cells:
            x0, x1 = self.xs[i], self.xs[i + 1]
            z0, z1 = self.zs[j], self.zs[j + 1]
            a0 = bisect.bisect_left(xs, x0)
            a1 = bisect.bisect_left(xs, x1)
            b0 = bisect.bisect_left(zs, z0)
            b1 = bisect.bisect_left(zs, z1)
            for a in range(a0, a1):
                for b in range(b0, b1):
                    cells.add((a, b))
        return Region(xs, zs, frozenset(cells))

    def _aligned(self, other: "Region"):
        xs = _merge_coords(self.xs, other.xs)
        zs = _merge_coords(self.zs, other.zs)
        return self.resample(xs, zs), other.resample(xs, zs)

    def union(self, other: "Region") -> "Region":
        if self.is_empty():
            return other.normalized()
        if other.is_empty():
            return self.normalized()
        a, b = self._aligned(other)
        return Region(a.xs, a.zs, a.cells | b.cells).normalized()

    def intersection(self, other: "Region") -> "Region":
        if self.is_empty() or other.is_empty():
            return Region.empty()
        a, b = self._aligned(other)
        return Region(a.xs, a.zs, a.cells & b.cells).normalized()

    def difference(self, other: "Region") -> "Region":
        if self.is_empty():
            return Region.empty()
        if other.is_empty():
            return self.normalized()
        a, b = self._aligned(other)
        return Region(a.xs, a.zs, a.cells - b.cells).normalized()

    def area(self) -> Fraction:
        total = Fraction(0)
        for (i, j) in self.cells:
            total += (self.xs[i + 1] - self.xs[i]) * (self.zs[j + 1] - self.zs[j])
        return total

    def bounds(self) -> Optional[Rect]:
        if not self.cells:
            return None
        i0 = min(i for i, _ in self.cells)
        i1 = max(i for i, _ in self.cells)
        j0 = min(j for _, j in self.cells)
        j1 = max(j for _, j in self.cells)
        return (self.xs[i0], self.zs[j0], self.xs[i1 + 1], self.zs[j1 + 1])

    # -- connectivity -------------------------------------------------------

    def components(self) -> list["Region"]:
        """4-connected components (solid contact along edges)."""
        remaining = set(self.cells)
        out = []
        while remaining:
            seed = remaining.pop()
            comp = {seed}
            stack = [seed]
            while stack:
                i, j = stack.pop()
                for n in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                    if n in remaining:
                        remaining.discard(n)
                        comp.add(n)
                        stack.append(n)
            out.append(Region(self.xs, self.zs, frozenset(comp)).normalized())
        out.sort(key=lambda r: r.bounds())
        return out

    def pinch_points(self) -> list[tuple[Fraction, Fraction]]:
        """Grid vertices where exactly two diagonal cells meet (non-manifold)."""
        cells = self.cells
        pts = []
        for i in range(len(self.xs) - 2):
            for j in range(len(self.zs) - 2):
                a = (i, j) in cells
                b = (i + 1, j) in cells
                c = (i, j + 1) in cells
                d = (i + 1, j + 1) in cells
                if (a and d and not b and not c) or (b and c and not a and not d):
                    pts.append((self.xs[i + 1], self.zs[j + 1]))
        return pts

    def has_hole(self) -> bool:
        """True if the complement has a bounded component."""
        if not self.cells:
            return False
        nx, nz = len(self.xs) - 1, len(self.zs) - 1
        # Pad with a ring of outside cells, flood from one pad cell.
        empty = {(i, j) for i in range(-1, nx + 1) for j in range(-1, nz + 1)
                 if (i, j) not in self.cells}
        seen = set()
        stack = [(-1, -1)]
        seen.add((-1, -1))
        while stack:
            i, j = stack.pop()
            for n in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if n in empty and n not in seen and -1 <= n[0] <= nx and -1 <= n[1] <= nz:
                    seen.add(n)
                    stack.append(n)
        return len(seen) != len(empty)

    # -- point and closure predicates ----------------------------------------

    def _cell_index(self, coords: list[Fraction], v: Fraction) -> list[int]:
        """Indices of cells whose closed span contains v."""
        import bisect

        n = len(coords) - 1
        k = bisect.bisect_left(coords, v)
        out = []
        if k < len(coords) and coords[k] == v:
            if k - 1 >= 0:
                out.append(k - 1)
            if k < n:
                out.append(k)
        elif 0 < k <= n:
            out.append(k - 1)
        return out

    def contains_point_closed(self, x: Fraction, z: Fraction) -> bool:
        if not self.cells:
            return False
        for i in self._cell_index(self.xs, x):
            for j in self._cell_index(self.zs, z):
                if (i, j) in self.cells:
                    return True
        return False

    def contains_point_open(self, x: Fraction, z: Fraction) -> bool:
        import bisect

        if not self.cells:
            return False
        i = bisect.bisect_right(self.xs, x) - 1
        j = bisect.bisect_right(self.zs, z) - 1
        if i < 0 or j < 0 or i >= len(self.xs) - 1 or j >= len(self.zs) - 1:
            return False
        if self.xs[i] == x or self.zs[j] == z:
            # On a grid line: open containment iff all incident cells occupied.
            return all((a, b) in self.cells
                       for a in self._cell_index(self.xs, x)
                       for b in self._cell_index(self.zs, z))
        return (i, j) in self.cells

    def closed_intersects(self, other: "Region") -> bool:
        """True iff the closures share at least a point."""
        if self.is_empty() or other.is_empty():
            return False
        a, b = self._aligned(other)
        bc = b.cells
        for (i, j) in a.cells:
            for di in (-1, 0, 1):
                for dj in (-1, 0, 1):
                    if (i + di, j + dj) in bc:
                        return True
        return False

    # -- boundary extraction -------------------------------------------------

    def boundary_cycle(self) -> list[tuple[Fraction, Fraction]]:
        """Boundary of a simple region as a clockwise vertex cycle.

        Clockwise means the top edge is traversed in +x (viewed from y = +inf
        with x right and z up, the interior lies to the right of travel).
        Starts at the leftmost vertex, topmost among those. Raises ValueError
        for regions that are not simply connected or are pinched.
        """
        if not self.cells:
            raise ValueError("empty region has no boundary")
        if len(self.components()) != 1:
            raise ValueError("region is not connected")
        if self.has_hole():
            raise ValueError("region has a hole")
        if self.pinch_points():
            raise ValueError("region has a pinch point")

        # Directed boundary edges with interior on the right of travel.
        cells = self.cells
        edges = {}  # start point -> end point
        for (i, j) in cells:
            x0, x1 = self.xs[i], self.xs[i + 1]
            z0, z1 = self.zs[j], self.zs[j + 1]
            if (i, j + 1) not in cells:  # top side: travel +x
                edges[(x0, z1)] = (x1, z1)
            if (i, j - 1) not in cells:  # bottom side: travel -x
                edges[(x1, z0)] = (x0, z0)
            if (i + 1, j) not in cells:  # right side: travel -z
                edges[(x1, z1)] = (x1, z0)
            if (i - 1, j) not in cells:  # left side: travel +z
                edges[(x0, z0)] = (x0, z1)

        start = min(edges, key=lambda p: (p[0], -p[1]))
        cycle = [start]
        cur = edges[start]
        while cur != start:
            cycle.append(cur)
            cur = edges[cur]
        # Merge collinear runs.
        out = []
        n = len(cycle)
        for k in range(n):
            prev, here, nxt = cycle[k - 1], cycle[k], cycle[(k + 1) % n]
            da = (here[0] - prev[0], here[1] - prev[1])
            db = (nxt[0] - here[0], nxt[1] - here[1])
            if da[0] * db[1] - da[1] * db[0] != 0 or (da[0] == 0) != (db[0] == 0):
                out.append(here)
        # Canonical start: min x, then max z.
        k0 = out.index(min(out, key=lambda p: (p[0], -p[1])))
        out = out[k0:] + out[:k0]
        return out

    def rects(self) -> list[Rect]:
        """Greedy decomposition of the region into maximal-run rectangles."""
        remaining = set(self.cells)
        out = []
        for (i, j) in sorted(remaining):
            if (i, j) not in remaining:
                continue
            i1 = i
            while (i1 + 1, j) in remaining:
                i1 += 1
            j1 = j
            while all((a, j1 + 1) in remaining for a in range(i, i1 + 1)):
                j1 += 1
            for a in range(i, i1 + 1):
                for b in range(j, j1 + 1):
                    remaining.discard((a, b))
            out.append((self.xs[i], self.zs[j], self.xs[i1 + 1], self.zs[j1 + 1]))
        return out

    def __repr__(self):
        b = self.bounds()
        return f"Region({len(self.cells)} cells, bounds={b})"


def shoelace(cycle: list[tuple[Fraction, Fraction]]) -> Fraction:
    """Signed area; negative for clockwise cycles in (x right, z up)."""
    s = Fraction(0)
    for k in range(len(cycle)):
        x0, z0 = cycle[k]
        x1, z1 = cycle[(k + 1) % len(cycle)]
        s += x0 * z1 - x1 * z0
    return s / 2
