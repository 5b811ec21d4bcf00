"""
Systems, effects, measurements and their structural checks.
"""

from .effects import (
    BooleanEffects,
    Measurement,
    NoRestrictionResult,
    and_or_effects,
    check_no_restriction,
    coarse_grain,
    complement,
    complete_measurement,
    compute_emax,
    effect_leq,
    effect_norm,
    hasse_edges,
    joint_measurability_matrix,
    jointly_measurable,
    state_norm,
)
from .isomorphism import Isomorphism, find_isomorphism
from .system import GptSystem, build_system, system_from_table, unit_from_states
from .validation import ValidationReport, Violation, ViolationKind, validate_system

__all__ = [
    "BooleanEffects",
    "Measurement",
    "NoRestrictionResult",
    "and_or_effects",
    "check_no_restriction",
    "coarse_grain",
    "complement",
    "complete_measurement",
    "compute_emax",
    "effect_leq",
    "effect_norm",
    "hasse_edges",
    "joint_measurability_matrix",
    "jointly_measurable",
    "state_norm",
    "Isomorphism",
    "find_isomorphism",
    "GptSystem",
    "build_system",
    "system_from_table",
    "unit_from_states",
    "ValidationReport",
    "Violation",
    "ViolationKind",
    "validate_system",
]
