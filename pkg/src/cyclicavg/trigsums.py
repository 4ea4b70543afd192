"""Direct trigonometric summation oracles.

These are deliberately naive float loops: they know nothing about the closed
forms they are used to check, which is the whole point.
"""

from __future__ import annotations

import math
from fractions import Fraction


def multiple_angle_cosine_sum(n: int, m: int, alpha: float) -> float:
    """sum_{k=1..n} cos(m * (alpha - (k-1) * 2 pi / n)).

    Vanishes for m < n; equals n*cos(m*alpha) when n divides m.
    """
    step = 2.0 * math.pi / n
    return math.fsum(math.cos(m * (alpha - k * step)) for k in range(n))


def cosine_power_sum(n: int, m: int, alpha: float) -> float:
    """sum_{k=1..n} cos^m(alpha - (k-1) * 2 pi / n)."""
    step = 2.0 * math.pi / n
    return math.fsum(math.cos(alpha - k * step) ** m for k in range(n))


def power_reduction_coefficients(m: int) -> list[tuple[int, Fraction]]:
    """Exact coefficients of cos^m in the multiple-angle basis.

    Returns (harmonic, coefficient) pairs such that

        cos^m(t) = sum coeff * cos(harmonic * t),

    with harmonic 0 carrying the constant term present for even m.
    Highest harmonic first.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    out: list[tuple[int, Fraction]] = []
    scale = Fraction(1, 2 ** m)
    for k in range((m - 1) // 2 + 1):
        out.append((m - 2 * k, 2 * math.comb(m, k) * scale))
    if m % 2 == 0:
        out.append((0, math.comb(m, m // 2) * scale))
    return out
