"""Registry of corrected misprints in the source formulas.

Each entry carries the formula as originally printed, the corrected form the
library implements, and a fixed test point at which the printed form visibly
fails (relative deviation above 0.1%) while the corrected form agrees with
an independent reference to full precision.  ``verify_errata`` recomputes
all of that on demand; nothing is taken on faith.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import rel_err
from .geometry import (
    PlanePlacement,
    PolygonSpec,
    SolidKind,
    SolidSpec,
    SpacePlacement,
    heron_area_16sq,
    polygon_distances_sq,
)
from .polygon import power_sum_brute
from .solids import solid_power_sum_brute


@dataclass(frozen=True)
class ErratumCheck:
    key: str
    context: str
    printed: str
    corrected: str
    printed_rel_dev: float
    corrected_rel_dev: float

    @property
    def confirmed(self) -> bool:
        return self.printed_rel_dev > 1e-3 and self.corrected_rel_dev < 1e-9


def _square_system_fourth_power() -> ErratumCheck:
    # test point R^2 = 4, L^2 = 1 (any R != 1 separates R^2 from R^4)
    r_sq, l_sq = 4.0, 1.0
    s2 = r_sq + l_sq
    s4 = s2 * s2 + 2.0 * r_sq * l_sq
    reference = (s2 + r_sq) ** 2
    printed = s4 + 3.0 * r_sq
    corrected = s4 + 3.0 * r_sq * r_sq
    return ErratumCheck(
        "square-system-fourth-power",
        "fourth-power line of the square cyclic-average system",
        "S4 + 3R^2 = (S2 + R^2)^2",
        "S4 + 3R^4 = (S2 + R^2)^2",
        rel_err(printed, reference),
        rel_err(corrected, reference),
    )


def _square_discriminant() -> ErratumCheck:
    # reference: 4 * area(d1, sqrt2 d2, d3)^2 at a generic square placement
    spec = PolygonSpec(4, 2.0)
    d_sq = polygon_distances_sq(spec, PlanePlacement(1.0, 0.7))
    s2 = sum(d_sq) / 4.0
    s4 = sum(x * x for x in d_sq) / 4.0
    reference = heron_area_16sq(d_sq[0], 2.0 * d_sq[1], d_sq[2]) / 4.0
    printed = 3.0 * s2 * s2 - 2.0 * s2
    corrected = 3.0 * s2 * s2 - 2.0 * s4
    return ErratumCheck(
        "square-discriminant",
        "discriminant tying the square's S2, S4 to the equal triangle areas",
        "3 S2^2 - 2 S2 = 4 area(d1, sqrt2 d2, d3)^2",
        "3 S2^2 - 2 S4 = 4 area(d1, sqrt2 d2, d3)^2",
        rel_err(printed, reference),
        rel_err(corrected, reference),
    )


def _nine_gon_sixteenth_power() -> ErratumCheck:
    # last term of the sixteenth-power average: 70 R^8 L^6 vs 70 R^8 L^8,
    # tested at R = 1, L = 1/2 against the brute-force vertex sum
    spec = PolygonSpec(9, 1.0)
    r_sq, l_sq = 1.0, 0.25
    a = r_sq + l_sq

    def with_last_term(last: float) -> float:
        return (a ** 8 + 56 * r_sq * l_sq * a ** 6
                + 420 * r_sq ** 2 * l_sq ** 2 * a ** 4
                + 560 * r_sq ** 3 * l_sq ** 3 * a ** 2 + last)

    reference = power_sum_brute(spec, 8, PlanePlacement(0.5, 0.33)) / 9.0
    printed = with_last_term(70 * r_sq ** 4 * l_sq ** 3)
    corrected = with_last_term(70 * r_sq ** 4 * l_sq ** 4)
    return ErratumCheck(
        "nine-gon-sixteenth-power",
        "final coefficient term of the nine-gon sixteenth-power average",
        "... + 70 R^8 L^6",
        "... + 70 R^8 L^8",
        rel_err(printed, reference),
        rel_err(corrected, reference),
    )


def _dodecahedron_tenth_power() -> ErratumCheck:
    # leading exponent of the dodecahedron tenth-power sum: (R^2+L^2)^2 vs ^5
    spec = SolidSpec(SolidKind.DODECAHEDRON, 1.0)
    p = SpacePlacement(0.4, -0.3, 0.8)
    r_sq = float(spec.R_sq)
    l_sq = float(p.L_sq)
    a = r_sq + l_sq
    tail = (40.0 / 3.0) * r_sq * l_sq * a ** 3 + 16.0 * r_sq ** 2 * l_sq ** 2 * a
    reference = solid_power_sum_brute(spec, 5, p)
    printed = 20.0 * (a ** 2 + tail)
    corrected = 20.0 * (a ** 5 + tail)
    return ErratumCheck(
        "dodecahedron-tenth-power",
        "leading exponent of the dodecahedron tenth-power distance sum",
        "sum d^10 = 20((R^2+L^2)^2 + 40/3 R^2L^2(R^2+L^2)^3 + 16 R^4L^4(R^2+L^2))",
        "sum d^10 = 20((R^2+L^2)^5 + 40/3 R^2L^2(R^2+L^2)^3 + 16 R^4L^4(R^2+L^2))",
        rel_err(printed, reference),
        rel_err(corrected, reference),
    )


_CHECKS = (
    _square_system_fourth_power,
    _square_discriminant,
    _nine_gon_sixteenth_power,
    _dodecahedron_tenth_power,
)


def verify_errata() -> list[ErratumCheck]:
    """Recompute all four corrected-misprint checks."""
    return [build() for build in _CHECKS]


def render_errata_table() -> str:
    rows = verify_errata()
    lines = ["Corrected misprints (re-verified at print time)", "=" * 48, ""]
    for row in rows:
        status = "corrected form verified" if row.confirmed else "CHECK FAILED"
        lines.append(f"[{row.key}]")
        lines.append(f"  where:     {row.context}")
        lines.append(f"  printed:   {row.printed}")
        lines.append(f"  corrected: {row.corrected}")
        lines.append(f"  as printed: relative deviation {row.printed_rel_dev:.3e}")
        lines.append(f"  corrected:  relative deviation {row.corrected_rel_dev:.3e}")
        lines.append(f"  status:    {status}")
        lines.append("")
    return "\n".join(lines)
