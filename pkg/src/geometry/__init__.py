"""
Exact polyhedral geometry: cones, convex bodies, duals and LP feasibility.
"""

from .cancellation import CancellationToken
from .cone import (
    Cone,
    ConvexBody,
    SeparatingFunctional,
    ShiftedBody,
    cones_equal,
    dual_cone,
    extreme_points,
    extreme_rays,
    hrep_to_vrep,
    intersect_shifted,
    member,
    project,
    vrep_to_hrep,
)
from .lp import Feasibility, FarkasCertificate, LinearConstraint, maximize, solve_feasibility

__all__ = [
    "CancellationToken",
    "Cone",
    "ConvexBody",
    "SeparatingFunctional",
    "ShiftedBody",
    "cones_equal",
    "dual_cone",
    "extreme_points",
    "extreme_rays",
    "hrep_to_vrep",
    "intersect_shifted",
    "member",
    "project",
    "vrep_to_hrep",
    "Feasibility",
    "FarkasCertificate",
    "LinearConstraint",
    "maximize",
    "solve_feasibility",
]
