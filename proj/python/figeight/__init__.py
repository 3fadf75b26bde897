"""Exact counts and enumerations of tight contact structures on M(r)."""

from ._figeight import (
    DomainError,
    bypass_step,
    cfrac,
    classify,
    geometry,
    is_farey_adjacent,
    phi,
    psi,
    slopes_in_window,
    smooth_framing_check,
    solid_torus_count,
    thicken_path,
    tight_count,
)

__all__ = [
    "DomainError",
    "bypass_step",
    "cfrac",
    "classify",
    "geometry",
    "is_farey_adjacent",
    "phi",
    "psi",
    "slopes_in_window",
    "smooth_framing_check",
    "solid_torus_count",
    "thicken_path",
    "tight_count",
]
