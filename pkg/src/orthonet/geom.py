"""Exact scalar and small vector helpers shared by all modules.

All coordinates are `fractions.Fraction` values so that incidence tests
(touching vs. crossing, point-on-edge) are decidable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Fr = Fraction


def fr(value) -> Fraction:
    """Parse a rational literal: int, 'p/q' or decimal string."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not a rational literal: {value!r}")


@dataclass(frozen=True, order=True)
class Point3:
    x: Fraction
    y: Fraction
    z: Fraction

    def __iter__(self):
        return iter((self.x, self.y, self.z))

    def __add__(self, other: "Vec3") -> "Point3":
        return Point3(self.x + other.dx, self.y + other.dy, self.z + other.dz)

    def key(self):
        return (self.x, self.y, self.z)

    def __str__(self):
        return f"({self.x},{self.y},{self.z})"


@dataclass(frozen=True)
class Vec3:
    dx: Fraction
    dy: Fraction
    dz: Fraction

    def __neg__(self) -> "Vec3":
        return Vec3(-self.dx, -self.dy, -self.dz)

    def __mul__(self, s) -> "Vec3":
        s = Fraction(s)
        return Vec3(self.dx * s, self.dy * s, self.dz * s)

    def __iter__(self):
        return iter((self.dx, self.dy, self.dz))

    def axis(self) -> str:
        """Axis name for an axis-parallel vector."""
        nz = [a for a, v in zip("xyz", self) if v != 0]
        if len(nz) != 1:
            raise ValueError(f"not axis-parallel: {self}")
        return nz[0]

    def sign(self) -> int:
        return 1 if (self.dx + self.dy + self.dz) > 0 else -1

    def __str__(self):
        s = "+" if self.sign() > 0 else "-"
        return s + self.axis()


ZERO = Fraction(0)
ONE = Fraction(1)

X_POS = Vec3(ONE, ZERO, ZERO)
X_NEG = Vec3(-ONE, ZERO, ZERO)
Y_POS = Vec3(ZERO, ONE, ZERO)
Y_NEG = Vec3(ZERO, -ONE, ZERO)
Z_POS = Vec3(ZERO, ZERO, ONE)
Z_NEG = Vec3(ZERO, ZERO, -ONE)

AXIS_VECS = {
    ("x", 1): X_POS,
    ("x", -1): X_NEG,
    ("y", 1): Y_POS,
    ("y", -1): Y_NEG,
    ("z", 1): Z_POS,
    ("z", -1): Z_NEG,
}


def axis_vec(axis: str, sign: int) -> Vec3:
    return AXIS_VECS[(axis, 1 if sign > 0 else -1)]


# Face direction names keyed by (axis, outward sign).
FACE_DIR = {
    ("y", 1): "front",
    ("y", -1): "back",
    ("z", 1): "top",
    ("z", -1): "bottom",
    ("x", 1): "right",
    ("x", -1): "left",
}
