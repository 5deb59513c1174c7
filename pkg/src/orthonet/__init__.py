"""Exact grid unfolding of orthogonal polyhedra built from axis-aligned boxes.

The pipeline: load a box union, slice it into layers/slabs/bands, build the
band unfolding tree, trace the unfolding spiral over the surface, flatten it
into a planar net, attach the remaining front/back pieces, and verify the
result (no overlap, exact coverage, isometry, bounded refinement).
"""

from orthonet.geom import Fr, Point3

__all__ = ["Fr", "Point3"]
