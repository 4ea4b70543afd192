"""CSV and SVG emission for locus circles and power-sum curves.

Plain string templating: CSV is numeric-only with a header row and LF line
endings; SVG is a single self-contained document on a 1000 x 1000 viewport.
CSV values are written with full float precision so they parse back to the
same doubles the library computes.
"""

from __future__ import annotations

import math

from .geometry import PlanePlacement, PolygonSpec, polygon_vertex
from .polygon import locus_classify, power_sum_brute

DEFAULT_SAMPLES = 512


def csv_power_sum_vs_alpha(n: int, R: float, L: float, m: int,
                           samples: int = DEFAULT_SAMPLES) -> str:
    """Brute-force sum of d^(2m) sampled over a full turn of alpha."""
    spec = PolygonSpec(n, R)
    lines = ["alpha,power_sum"]
    for k in range(samples):
        alpha = 2.0 * math.pi * k / samples
        value = power_sum_brute(spec, m, PlanePlacement(L, alpha))
        lines.append(f"{alpha!r},{value!r}")
    return "\n".join(lines) + "\n"


def csv_power_sum_vs_radius(n: int, R: float, m: int, L_max: float,
                            samples: int = DEFAULT_SAMPLES) -> str:
    """Brute-force sum of d^(2m) at alpha = 0 as L sweeps 0..L_max."""
    spec = PolygonSpec(n, R)
    lines = ["L,power_sum"]
    for k in range(samples):
        L = L_max * k / (samples - 1) if samples > 1 else 0.0
        value = power_sum_brute(spec, m, PlanePlacement(L, 0.0))
        lines.append(f"{L!r},{value!r}")
    return "\n".join(lines) + "\n"


def svg_locus_circle(n: int, R: float, m: int, C: float) -> str:
    """The polygon, its centroid, and the locus of sum d^(2m) = C, to scale."""
    spec = PolygonSpec(n, R)
    locus = locus_classify(spec, m, C)
    radius = locus.L if locus.kind == "circle" else 0.0
    extent = max(R, radius) * 1.15
    scale = 450.0 / extent

    def sx(x: float) -> float:
        return 500.0 + scale * x

    def sy(y: float) -> float:
        return 500.0 - scale * y

    points = " ".join(
        f"{sx(px):.2f},{sy(py):.2f}"
        for px, py in (polygon_vertex(spec, i) for i in range(1, n + 1))
    )
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 1000 1000" '
        'width="1000" height="1000">',
        '<rect width="1000" height="1000" fill="white"/>',
        f'<polygon points="{points}" fill="none" stroke="black" stroke-width="2"/>',
        '<circle cx="500" cy="500" r="4" fill="black"/>',
    ]
    for i in range(1, n + 1):
        px, py = polygon_vertex(spec, i)
        parts.append(f'<circle cx="{sx(px):.2f}" cy="{sy(py):.2f}" r="5" fill="black"/>')
    if locus.kind == "circle":
        parts.append(
            f'<circle cx="500" cy="500" r="{scale * radius:.2f}" fill="none" '
            'stroke="crimson" stroke-width="3"/>')
        label = f"locus: circle L={radius:.6g}"
    elif locus.kind == "centroid":
        parts.append('<circle cx="500" cy="500" r="8" fill="crimson"/>')
        label = "locus: centroid"
    else:
        label = "locus: empty"
    parts.append(f'<text x="20" y="40" font-size="28" font-family="monospace">{label}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
