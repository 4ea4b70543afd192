"""Figure specifications, placements, vertex coordinates, squared distances.

Conventions used throughout the library:

* vertices are numbered 1..n,
* polygon vertex i sits at angle (i-1) * 2*pi/n on the circumcircle, and the
  polar angle ``alpha`` of a plane placement is measured from vertex 1,
* all five solids are centred on the origin with the vertex orders fixed by
  the coordinate tables below; consecutive vertices 2j-1, 2j of every
  centrally symmetric solid are antipodal.

Distances are handled squared wherever possible: every identity in the
library is polynomial in squared distances, squared circumradius and squared
centroid distance, which is what keeps the exact backend radical-free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .errors import OutOfRangeError
from .fields import GOLDEN_RATIO, Scalar, is_exact

Triple = tuple[Scalar, Scalar, Scalar]


@dataclass(frozen=True)
class PolygonSpec:
    """A regular n-gon given by vertex count and circumradius."""

    n: int
    R: Scalar = 1.0

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 3:
            raise OutOfRangeError(f"polygon needs an integer n >= 3, got {self.n!r}")
        if not self.R > 0:
            raise OutOfRangeError("circumradius must be positive")

    @property
    def R_sq(self) -> Scalar:
        return self.R * self.R


class SolidKind(Enum):
    TETRAHEDRON = "tetrahedron"
    OCTAHEDRON = "octahedron"
    CUBE = "cube"
    ICOSAHEDRON = "icosahedron"
    DODECAHEDRON = "dodecahedron"

    @property
    def n(self) -> int:
        return _VERTEX_COUNT[self]

    @classmethod
    def parse(cls, text: str) -> "SolidKind":
        key = text.strip().lower()
        for kind in cls:
            if kind.value == key:
                return kind
        raise OutOfRangeError(f"unknown solid {text!r}; expected one of "
                              + ", ".join(k.value for k in cls))


_VERTEX_COUNT = {
    SolidKind.TETRAHEDRON: 4,
    SolidKind.OCTAHEDRON: 6,
    SolidKind.CUBE: 8,
    SolidKind.ICOSAHEDRON: 12,
    SolidKind.DODECAHEDRON: 20,
}

# R^2 = (factor) * c^2 for the rational-R^2 solids; the icosahedron has
# R^2 = (1 + phi^2) c^2, handled separately to stay exact in Q(sqrt 5).
_R_SQ_FACTOR = {
    SolidKind.TETRAHEDRON: 3,
    SolidKind.OCTAHEDRON: 1,
    SolidKind.CUBE: 3,
    SolidKind.DODECAHEDRON: 3,
}


@dataclass(frozen=True)
class SolidSpec:
    """A Platonic solid given by kind and coordinate scale c (see tables)."""

    kind: SolidKind
    c: Scalar = 1.0

    def __post_init__(self) -> None:
        if not self.c > 0:
            raise OutOfRangeError("coordinate scale must be positive")

    @classmethod
    def from_circumradius(cls, kind: SolidKind, R: float) -> "SolidSpec":
        if kind is SolidKind.ICOSAHEDRON:
            c = R / math.sqrt(1.0 + float(GOLDEN_RATIO) ** 2)
        else:
            c = R / math.sqrt(_R_SQ_FACTOR[kind])
        return cls(kind, c)

    @property
    def n(self) -> int:
        return self.kind.n

    @property
    def R_sq(self) -> Scalar:
        c_sq = self.c * self.c
        if self.kind is SolidKind.ICOSAHEDRON:
            if is_exact(self.c):
                return c_sq * (1 + GOLDEN_RATIO * GOLDEN_RATIO)
            return c_sq * (1.0 + float(GOLDEN_RATIO) ** 2)
        return _R_SQ_FACTOR[self.kind] * c_sq

    @property
    def R(self) -> float:
        return math.sqrt(float(self.R_sq))


@dataclass(frozen=True)
class PlanePlacement:
    """Evaluation point in the polygon's plane: polar (L, alpha) about the centroid."""

    L: float
    alpha: float = 0.0

    def __post_init__(self) -> None:
        if not self.L >= 0:
            raise OutOfRangeError("centroid distance L must be >= 0")


@dataclass(frozen=True)
class SpacePlacement:
    """Evaluation point in space, Cartesian, centroid at the origin."""

    x: Scalar
    y: Scalar
    z: Scalar

    @property
    def L_sq(self) -> Scalar:
        return self.x * self.x + self.y * self.y + self.z * self.z

    @property
    def L(self) -> float:
        return math.sqrt(float(self.L_sq))


# ---------------------------------------------------------------------------
# polygons


def polygon_vertex(spec: PolygonSpec, i: int) -> tuple[float, float]:
    """Cartesian coordinates of vertex i on the circumcircle (float)."""
    _check_vertex(i, spec.n)
    theta = (i - 1) * 2.0 * math.pi / spec.n
    R = float(spec.R)
    return (R * math.cos(theta), R * math.sin(theta))


def polygon_distance_sq(spec: PolygonSpec, p: PlanePlacement, i: int) -> float:
    """d_i^2 = R^2 + L^2 - 2 R L cos(alpha - (i-1) 2 pi / n)."""
    _check_vertex(i, spec.n)
    R = float(spec.R)
    return distance_sq_from_cos(R, p.L, math.cos(p.alpha - (i - 1) * 2.0 * math.pi / spec.n))


def sum_basis(R: Scalar, L: Scalar) -> tuple[Scalar, Scalar]:
    """The pair A = R^2 + L^2, B = 2RL every distance formula runs on.

    A >= B >= 0 by AM-GM, with equality exactly when R = L; hence every
    squared distance A - B cos(theta) is at least (R - L)^2.
    """
    return R * R + L * L, 2 * R * L


def distance_sq_from_cos(R: Scalar, L: Scalar, cos_theta: Scalar) -> Scalar:
    """Law-of-cosines squared distance; exact whenever all three inputs are."""
    a, b = sum_basis(R, L)
    return a - b * cos_theta


def polygon_distances_sq(spec: PolygonSpec, p: PlanePlacement) -> tuple[float, ...]:
    return tuple(polygon_distance_sq(spec, p, i) for i in range(1, spec.n + 1))


_SIDE_SQ_FACTOR = {3: Fraction(3), 4: Fraction(2), 6: Fraction(1)}


def polygon_side_sq(n: int, R_sq: Scalar) -> Scalar:
    """Squared side a^2 = 4 R^2 sin^2(pi/n); exact for n in {3, 4, 6}."""
    factor = _SIDE_SQ_FACTOR.get(n)
    if factor is not None and is_exact(R_sq):
        return factor * R_sq
    if factor is not None:
        return float(factor) * R_sq
    return 4.0 * float(R_sq) * math.sin(math.pi / n) ** 2


# ---------------------------------------------------------------------------
# solids


def _signed(c: Scalar, pattern: Sequence[int]) -> Triple:
    return tuple(c * s for s in pattern)  # type: ignore[return-value]


def solid_vertices(kind: SolidKind, c: Scalar = 1) -> tuple[Triple, ...]:
    """Vertex coordinates in the library's canonical order.

    Exact inputs give exact coordinates; the two golden-ratio solids then
    carry Surd components in Q(sqrt 5).
    """
    phi: Scalar = GOLDEN_RATIO if is_exact(c) else float(GOLDEN_RATIO)
    if kind is SolidKind.TETRAHEDRON:
        return (
            _signed(c, (1, 1, 1)),
            _signed(c, (1, -1, -1)),
            _signed(c, (-1, 1, -1)),
            _signed(c, (-1, -1, 1)),
        )
    if kind is SolidKind.OCTAHEDRON:
        zero = c - c
        return (
            (c, zero, zero), (-c, zero, zero),
            (zero, c, zero), (zero, -c, zero),
            (zero, zero, c), (zero, zero, -c),
        )
    if kind is SolidKind.CUBE:
        return (
            _signed(c, (-1, -1, -1)), _signed(c, (1, 1, 1)),
            _signed(c, (1, 1, -1)), _signed(c, (-1, -1, 1)),
            _signed(c, (1, -1, 1)), _signed(c, (-1, 1, -1)),
            _signed(c, (-1, 1, 1)), _signed(c, (1, -1, -1)),
        )
    if kind is SolidKind.ICOSAHEDRON:
        f = c * phi
        zero = c - c
        return (
            (zero, c, f), (zero, -c, -f),
            (zero, -c, f), (zero, c, -f),
            (c, f, zero), (-c, -f, zero),
            (c, -f, zero), (-c, f, zero),
            (f, zero, c), (-f, zero, -c),
            (f, zero, -c), (-f, zero, c),
        )
    if kind is SolidKind.DODECAHEDRON:
        f = c * phi
        g = c / phi
        zero = c - c
        return solid_vertices(SolidKind.CUBE, c) + (
            (zero, g, f), (zero, -g, -f),
            (zero, -g, f), (zero, g, -f),
            (g, f, zero), (-g, -f, zero),
            (-g, f, zero), (g, -f, zero),
            (f, zero, g), (-f, zero, -g),
            (f, zero, -g), (-f, zero, g),
        )
    raise OutOfRangeError(f"unknown solid kind {kind!r}")


def solid_distance_sq(spec: SolidSpec, p: SpacePlacement, i: int) -> Scalar:
    """Squared Euclidean distance from the placement to vertex i (1-based)."""
    _check_vertex(i, spec.n)
    vx, vy, vz = solid_vertices(spec.kind, spec.c)[i - 1]
    dx = p.x - vx
    dy = p.y - vy
    dz = p.z - vz
    return dx * dx + dy * dy + dz * dz


def solid_distances_sq(spec: SolidSpec, p: SpacePlacement) -> tuple[Scalar, ...]:
    out = []
    for vx, vy, vz in solid_vertices(spec.kind, spec.c):
        dx = p.x - vx
        dy = p.y - vy
        dz = p.z - vz
        out.append(dx * dx + dy * dy + dz * dz)
    return tuple(out)


# ---------------------------------------------------------------------------
# triangle areas from squared sides


def heron_area_16sq(a_sq: Scalar, b_sq: Scalar, c_sq: Scalar) -> Scalar:
    """16 * area^2 of the triangle with squared sides a_sq, b_sq, c_sq.

    Polynomial in the squared sides, so the exact backend never needs a
    radical; a negative value means no such triangle exists.
    """
    return (
        2 * (a_sq * b_sq + a_sq * c_sq + b_sq * c_sq)
        - a_sq * a_sq - b_sq * b_sq - c_sq * c_sq
    )


def _check_vertex(i: int, n: int) -> None:
    if not 1 <= i <= n:
        raise OutOfRangeError(f"vertex index {i} outside 1..{n}")
