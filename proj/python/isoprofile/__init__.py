"""Relative isoperimetric profile of the notched unit square [0,1]^2 minus [0,a)^2."""

from ._core import (
    BranchError,
    DomainError,
    InfeasibleRegionError,
    SolverError,
    a_of_t,
    circular_segment_area,
    constants,
    deformation_width,
    dP_dt,
    oracle_min,
    polyline_perimeter_gain,
    profile,
    profile_grid,
    s4_area,
    s4_perimeter,
    sigma,
    strict_improvement,
    tau,
    theta_of_area,
    transition,
    verify,
)

__all__ = [
    "BranchError",
    "DomainError",
    "InfeasibleRegionError",
    "SolverError",
    "a_of_t",
    "circular_segment_area",
    "constants",
    "deformation_width",
    "dP_dt",
    "oracle_min",
    "polyline_perimeter_gain",
    "profile",
    "profile_grid",
    "s4_area",
    "s4_perimeter",
    "sigma",
    "strict_improvement",
    "tau",
    "theta_of_area",
    "transition",
    "verify",
]
