"""Certified cap discrepancy bounds for point sets on the unit sphere."""

from ._capdisc import (
    NonUnitPoint,
    SizeLimitExceeded,
    confidence_radius,
    conjecture_check,
    cover_region,
    directed_discrepancy,
    generate,
    naive_discrepancy,
    north_pole_directed,
    north_pole_local_radius,
    orbit_sums,
    polar_to_cartesian,
)

__all__ = [
    "NonUnitPoint",
    "SizeLimitExceeded",
    "confidence_radius",
    "conjecture_check",
    "cover_region",
    "directed_discrepancy",
    "generate",
    "naive_discrepancy",
    "north_pole_directed",
    "north_pole_local_radius",
    "orbit_sums",
    "polar_to_cartesian",
]
