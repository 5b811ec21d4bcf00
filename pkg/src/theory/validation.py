"""
System validation reports.
"""

import logging
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field

import config
from utils.scalars import format_scalar, sub

logger = logging.getLogger(__name__)


class ViolationKind(str, Enum):
    """Kinds of consistency failures found in a system."""
    UNNORMALIZED_STATE = "unnormalized_state"
    PROBABILITY_OUT_OF_RANGE = "probability_out_of_range"
    MISSING_ZERO = "missing_zero_effect"
    MISSING_UNIT = "missing_unit_effect"
    MISSING_COMPLEMENT = "missing_complement"


class Violation(BaseModel):
    """A single failed check."""
    kind: ViolationKind
    message: str
    state_index: Optional[int] = Field(default=None, description="Index into the system's states")
    effect_index: Optional[int] = Field(default=None, description="Index into the system's effects")
    value: Optional[str] = Field(default=None, description="Offending value as p/q or decimal")


class ValidationReport(BaseModel):
    """Outcome of validate_system; valid is true exactly when violations is empty."""
    system: str
    valid: bool
    violations: List[Violation] = Field(default_factory=list)


def _fmt(value) -> str:
    return format_scalar(value) if not isinstance(value, float) else repr(value)


def validate_system(system) -> ValidationReport:
    """Check normalization, probability ranges and closure of the effect set.

    Exact systems are checked exactly; numeric systems over a seeded sample of
    pure states and their standard effects, within their tolerance.
    """
    if system.numeric:
        states = system.sample_pure_states(config.QUBIT_NET_SIZE, seed=config.DEFAULT_SEED)
        effects = list(system.standard_effects())
        tol = system.tolerance
    else:
        states, effects, tol = list(system.states), list(system.effects), 0

    violations: List[Violation] = []
    for j, w in enumerate(states):
        norm = system.pair(system.unit, w)
        if abs(norm - 1) > tol:
            violations.append(Violation(kind=ViolationKind.UNNORMALIZED_STATE, state_index=j, value=_fmt(norm),
                                        message=f"u(w_{j}) = {_fmt(norm)}, expected 1"))
    for i, e in enumerate(effects):
        for j, w in enumerate(states):
            p = system.pair(e, w)
            if p < -tol or p > 1 + tol:
                violations.append(Violation(kind=ViolationKind.PROBABILITY_OUT_OF_RANGE, effect_index=i,
                                            state_index=j, value=_fmt(p),
                                            message=f"e_{i}(w_{j}) = {_fmt(p)} outside [0, 1]"))

    if not system.numeric:
        zero = tuple(0 * x for x in system.unit)
        if not system.contains_effect(zero).feasible:
            violations.append(Violation(kind=ViolationKind.MISSING_ZERO, message="zero effect is not in E"))
        if not system.contains_effect(system.unit).feasible:
            violations.append(Violation(kind=ViolationKind.MISSING_UNIT, message="unit effect is not in E"))
        for i, e in enumerate(effects):
            if not system.contains_effect(sub(system.unit, e)).feasible:
                violations.append(Violation(kind=ViolationKind.MISSING_COMPLEMENT, effect_index=i,
                                            message=f"u - e_{i} is not in E"))

    report = ValidationReport(system=system.name, valid=not violations, violations=violations)
    if report.valid:
        logger.info(f"✅ System {system.name} is valid")
    else:
        logger.warning(f"⚠️ System {system.name} has {len(violations)} violations")
    return report
