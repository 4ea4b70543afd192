"""Power sums of squared vertex distances for regular polygons.

The closed form implemented here: for a point at distance L from the centroid
of a regular n-gon with circumradius R, and any power index m = 1..n-1,

    sum_i d_i^(2m) = n * [ A^m + sum_{k=1..floor(m/2)} C(m,2k) C(2k,k)
                                    (R^2 L^2)^k A^(m-2k) ],   A = R^2 + L^2.

For m >= n the sum genuinely depends on the polar angle and the closed form
is refused; the brute-force oracle remains available for every m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from .errors import InvalidAverageError, NegativeDiscriminantError, OutOfRangeError
from .fields import Scalar, exact_cos_cycle, exact_cos_sq_cycle, is_exact, sqrt_scalar
from .geometry import (
    PlanePlacement,
    PolygonSpec,
    SolidSpec,
    distance_sq_from_cos,
    polygon_distance_sq,
)


def per_vertex_power_sum_sq(m: int, r_sq: Scalar, l_sq: Scalar) -> Scalar:
    """The cyclic average S^(2m) as a function of R^2 and L^2 (any backend)."""
    a = r_sq + l_sq
    rl = r_sq * l_sq
    total = a ** m
    for k in range(1, m // 2 + 1):
        total += math.comb(m, 2 * k) * math.comb(2 * k, k) * rl ** k * a ** (m - 2 * k)
    return total


def _check_m(n: int, m: int) -> None:
    if not 1 <= m <= n - 1:
        raise OutOfRangeError(
            f"power index m={m} outside 1..{n - 1}: for m >= n the sum depends "
            "on the polar angle and has no closed form here"
        )


def power_sum_closed_sq(n: int, m: int, r_sq: Scalar, l_sq: Scalar) -> Scalar:
    """Closed-form sum of d_i^(2m) over all n vertices, from squared inputs."""
    _check_m(n, m)
    return n * per_vertex_power_sum_sq(m, r_sq, l_sq)


def power_sum_closed(spec: PolygonSpec, m: int, L: Scalar) -> Scalar:
    return power_sum_closed_sq(spec.n, m, spec.R_sq, L * L)


@dataclass(frozen=True)
class CyclicAverage:
    """Average of the 2m-th distance powers over the figure's vertices."""

    m: int
    value: Scalar
    source: Union[PolygonSpec, SolidSpec]


def cyclic_average(spec: PolygonSpec, m: int, L: Scalar) -> CyclicAverage:
    _check_m(spec.n, m)
    return CyclicAverage(m, per_vertex_power_sum_sq(m, spec.R_sq, L * L), spec)


def power_sum_brute(spec: PolygonSpec, m: int, p: PlanePlacement) -> float:
    """Oracle: sum d_i^(2m) at a concrete placement. Defined for every m >= 1."""
    if m < 1:
        raise OutOfRangeError("power index m must be >= 1")
    return math.fsum(polygon_distance_sq(spec, p, i) ** m for i in range(1, spec.n + 1))


def polygon_distances_sq_exact(n: int, R: Scalar, L: Scalar,
                               cycle_n: int | None = None,
                               offset: int = 0) -> tuple[Scalar, ...]:
    """Exact squared distances at angles with representable cosines.

    The placement angle is alpha = offset * 2*pi/cycle_n, with cycle_n a
    multiple of n drawn from the exact cosine tables; default alpha = 0 on
    the polygon's own cycle.  R and L must be exact.
    """
    cyc = cycle_n or n
    table = exact_cos_cycle(cyc)
    if table is None or cyc % n != 0:
        raise OutOfRangeError(f"no exact cosine cycle for n={n} (cycle {cyc})")
    step = cyc // n
    return tuple(distance_sq_from_cos(R, L, table[(offset - i * step) % cyc])
                 for i in range(n))


def power_sum_brute_exact(n: int, m: int, R: Scalar, L: Scalar,
                          cycle_n: int | None = None, offset: int = 0) -> Scalar:
    """Exact oracle: sum of d^(2m) at a rational-cosine placement angle."""
    if m < 1:
        raise OutOfRangeError("power index m must be >= 1")
    total: Scalar = 0
    for d_sq in polygon_distances_sq_exact(n, R, L, cycle_n, offset):
        total = total + d_sq ** m
    return total


def power_sum_brute_even_exact(n: int, m: int, r_sq: Scalar, l_sq: Scalar) -> Scalar:
    """Exact oracle for even n at alpha = 0, parameterised by R^2 and L^2.

    Antipodal vertices are summed in pairs: with c = cos of the vertex angle,

        (A - Bc)^m + (A + Bc)^m = 2 * sum_{j even} C(m,j) A^(m-j) (B^2 c^2)^(j/2),

    which only ever needs cos^2 of the vertex angles and B^2 = 4 R^2 L^2.
    This reaches cycles (n = 24) whose cosines are not themselves quadratic
    surds, and it never touches the closed form being checked.
    """
    if n % 2 != 0:
        raise OutOfRangeError("antipodal pairing needs an even vertex count")
    cos_sq = exact_cos_sq_cycle(n)
    if cos_sq is None:
        raise OutOfRangeError(f"no exact squared-cosine cycle for n={n}")
    a = r_sq + l_sq
    b_sq = 4 * r_sq * l_sq
    a_pow = [a ** 0]
    for _ in range(m):
        a_pow.append(a_pow[-1] * a)
    total: Scalar = 0
    for k in range(n // 2):
        t = b_sq * cos_sq[k]
        term: Scalar = 0
        t_pow: Scalar = 1
        for j in range(0, m + 1, 2):
            if j:
                t_pow = t_pow * t
            term = term + math.comb(m, j) * a_pow[m - j] * t_pow
        total = total + 2 * term
    return total


# ---------------------------------------------------------------------------
# locus classification


@dataclass(frozen=True)
class Locus:
    """Locus of points whose 2m-th power distance sum equals a constant."""

    kind: str  # "circle" | "sphere" | "centroid" | "empty"
    L: float | None = None

    def __str__(self) -> str:
        if self.kind in ("circle", "sphere"):
            return f"{self.kind} L={self.L:.12g}"
        return self.kind


def bisect_radius_sq(f: Callable[[float], float], target: float) -> float:
    """Unique root in L^2 of the monotone map f(L^2) = target, by bisection."""

    def value(u: float) -> float:
        try:
            return f(u)
        except OverflowError:
            return math.inf

    lo = 0.0
    hi = 1.0
    while value(hi) < target:
        hi *= 2.0
        if hi > 1e200:
            raise OutOfRangeError("target sum out of reachable range")
    while hi - lo > 1e-13 * hi:
        mid = 0.5 * (lo + hi)
        if value(mid) < target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _classify(n: int, m: int, r_sq: Scalar, C: Scalar, kind: str,
              per_vertex: Callable[..., Scalar] = per_vertex_power_sum_sq) -> Locus:
    if not C > 0:
        raise OutOfRangeError("the constant must be positive")
    centre_value = n * r_sq ** m
    if is_exact(C) and is_exact(r_sq):
        if C == centre_value:
            return Locus("centroid")
        if C < centre_value:
            return Locus("empty")
    else:
        cf = float(C)
        nf = float(centre_value)
        if abs(cf - nf) <= 1e-12 * nf:
            return Locus("centroid")
        if cf < nf:
            return Locus("empty")
    r_sq_f = float(r_sq)
    root = bisect_radius_sq(lambda u: n * float(per_vertex(m, r_sq_f, u)), float(C))
    return Locus(kind, math.sqrt(root))


def locus_classify(spec: PolygonSpec, m: int, C: Scalar) -> Locus:
    """Circle of the unique radius, the centroid, or the empty set."""
    _check_m(spec.n, m)
    return _classify(spec.n, m, spec.R_sq, C, "circle")


# ---------------------------------------------------------------------------
# conversions between averages and (R^2, L^2)


def recover_r2_l2(s2: Scalar, s4: Scalar) -> tuple[Scalar, Scalar]:
    """The unordered pair {R^2, L^2} from the first two cyclic averages.

    Solves S2 = R^2 + L^2, S4 = S2^2 + 2 R^2 L^2; the discriminant
    3 S2^2 - 2 S4 equals (R^2 - L^2)^2 for consistent data.
    """
    if not s2 > 0:
        raise InvalidAverageError("S2 must be positive")
    disc = 3 * s2 * s2 - 2 * s4
    if disc < 0:
        raise NegativeDiscriminantError(
            f"3*S2^2 - 2*S4 = {disc} < 0: no real (R^2, L^2) exists")
    root = sqrt_scalar(disc)
    half = Fraction(1, 2) if is_exact(s2) else 0.5
    return (half * (s2 + root), half * (s2 - root))


def s2m_from_s2(m: int, s2: Scalar, r_sq: Scalar) -> Scalar:
    """S^(2m) from S2 and R^2 alone (valid for m <= n-1 on any n-gon)."""
    if m < 2:
        raise OutOfRangeError("conversion defined for m >= 2")
    if s2 < r_sq:
        raise InvalidAverageError("S2 < R^2 would force L^2 < 0")
    return per_vertex_power_sum_sq(m, r_sq, s2 - r_sq)


def s2m_from_s2_s4(m: int, s2: Scalar, s4: Scalar) -> Scalar:
    """S^(2m) from S2 and S4 alone: eliminates R^2 via S4 - S2^2 = 2 R^2 L^2."""
    if m < 3:
        raise OutOfRangeError("conversion defined for m >= 3")
    gap = s4 - s2 * s2
    if gap < 0:
        raise InvalidAverageError("S4 < S2^2 is impossible for genuine data")
    half = Fraction(1, 2) if is_exact(gap) else 0.5
    total = s2 ** m
    for k in range(1, m // 2 + 1):
        total += (half ** k) * math.comb(m, 2 * k) * math.comb(2 * k, k) \
            * gap ** k * s2 ** (m - 2 * k)
    return total


def circumcircle_residual(d_sq: tuple[Scalar, ...]) -> Scalar:
    """3 (sum d^2)^2 - 2 n sum d^4; zero exactly on the circumcircle."""
    n = len(d_sq)
    if n < 3:
        raise OutOfRangeError("need at least 3 distances")
    s2 = sum(d_sq)
    s4 = sum(d * d for d in d_sq)
    return 3 * s2 * s2 - 2 * n * s4
