"""
Two-party, two-setting, two-outcome behaviors and their CHSH analysis.

A Behavior stores p(a, b | x, y) as p[a][b][x][y]. Exact behaviors hold
Fractions; behaviors from the numeric qubit hold floats and are checked
within the configured tolerance.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from typing import Callable, List, Sequence, Tuple

from pydantic import BaseModel, Field

import config
from compose import JointState, JointSystem
from theory import Measurement
from utils.errors import IncompleteMeasurement, NotAState
from utils.scalars import add, is_exact

logger = logging.getLogger(__name__)

BITS = (0, 1)


def _tolerance(values) -> float:
    return 0 if is_exact(values) else config.QUBIT_TOLERANCE


@dataclass(frozen=True)
class Behavior:
    """Conditional distribution p(a, b | x, y), indexed p[a][b][x][y]."""
    p: Tuple[Tuple[Tuple[Tuple, ...], ...], ...]

    def __post_init__(self):
        flat = self.flat()
        if len(flat) != 16:
            raise ValueError("a behavior needs 2 x 2 x 2 x 2 entries")
        tol = _tolerance(flat)
        if any(v < -tol for v in flat):
            raise ValueError("behavior has a negative probability")
        for x, y in cartesian(BITS, BITS):
            total = sum(self.p[a][b][x][y] for a, b in cartesian(BITS, BITS))
            if abs(total - 1) > tol:
                raise ValueError(f"p(., . | {x}, {y}) sums to {total}, expected 1")

    @classmethod
    def from_function(cls, f: Callable[[int, int, int, int], object]) -> "Behavior":
        return cls(tuple(tuple(tuple(tuple(f(a, b, x, y) for y in BITS) for x in BITS)
                               for b in BITS) for a in BITS))

    @classmethod
    def from_flat(cls, values: Sequence) -> "Behavior":
        """Inverse of flat(): index ((a*2 + b)*2 + x)*2 + y."""
        return cls.from_function(lambda a, b, x, y: values[((a * 2 + b) * 2 + x) * 2 + y])

    def flat(self) -> tuple:
        return tuple(self.p[a][b][x][y] for a, b, x, y in cartesian(BITS, BITS, BITS, BITS))

    def __call__(self, a: int, b: int, x: int, y: int):
        return self.p[a][b][x][y]


@dataclass(frozen=True)
class Correlators:
    """C[x][y] = sum_ab (-1)^(a+b) p(a, b | x, y)."""
    c: Tuple[Tuple, Tuple]


def correlators(behavior: Behavior) -> Correlators:
    return Correlators(tuple(
        tuple(sum((-1) ** (a + b) * behavior(a, b, x, y) for a, b in cartesian(BITS, BITS)) for y in BITS)
        for x in BITS))


def chsh(behavior: Behavior):
    """S = |C00 + C01 + C10 - C11|."""
    c = correlators(behavior).c
    return abs(c[0][0] + c[0][1] + c[1][0] - c[1][1])


def pr_box() -> Behavior:
    """p(a, b | x, y) = 1/2 when a XOR b == x AND y, else 0."""
    return Behavior.from_function(lambda a, b, x, y: Fraction(1, 2) if a ^ b == x & y else Fraction(0))


def local_deterministic_behaviors() -> List[Behavior]:
    """The 16 behaviors with a = f(x), b = g(y) for deterministic f, g."""
    behaviors = []
    for fa in cartesian(BITS, BITS):
        for fb in cartesian(BITS, BITS):
            behaviors.append(Behavior.from_function(
                lambda a, b, x, y, fa=fa, fb=fb: Fraction(int(a == fa[x] and b == fb[y]))))
    return behaviors


def _check_binary(system, measurement: Measurement, label: str) -> None:
    if len(measurement.effects) != 2:
        raise IncompleteMeasurement(f"measurement {label} has {len(measurement.effects)} outcomes, expected 2")
    total = add(measurement.effects[0], measurement.effects[1])
    tol = _tolerance(total)
    if any(abs(t - u) > tol for t, u in zip(total, system.unit)):
        raise IncompleteMeasurement(f"measurement {label} does not sum to the unit effect")


def behavior_from(system: JointSystem, state: JointState, ma0: Measurement, ma1: Measurement,
                  mb0: Measurement, mb1: Measurement) -> Behavior:
    """Statistics of binary measurements on a normalized joint state.

    Raises:
        IncompleteMeasurement: If a measurement is not a complete binary one.
        NotAState: If the joint state is not normalized.
    """
    left, right = (ma0, ma1), (mb0, mb1)
    for x, m in enumerate(left):
        _check_binary(system.left, m, f"A{x}")
    for y, m in enumerate(right):
        _check_binary(system.right, m, f"B{y}")
    norm = system.normalization(state)
    if abs(norm - 1) > _tolerance(state.vector):
        raise NotAState(f"joint state has normalization {norm}, expected 1")
    return Behavior.from_function(
        lambda a, b, x, y: system.pair_product(left[x].effects[a], right[y].effects[b], state))


class NoSignalingViolation(BaseModel):
    side: str = Field(description="Party whose marginal depends on the other party's setting")
    outcome: int
    setting: int
    difference: str


class NoSignalingReport(BaseModel):
    passed: bool
    violations: List[NoSignalingViolation] = Field(default_factory=list)


def no_signaling_check(behavior: Behavior) -> NoSignalingReport:
    """Marginals of each party must not depend on the other party's setting."""
    tol = _tolerance(behavior.flat())
    violations = []
    for a, x in cartesian(BITS, BITS):
        diff = sum(behavior(a, b, x, 0) - behavior(a, b, x, 1) for b in BITS)
        if abs(diff) > tol:
            violations.append(NoSignalingViolation(side="A", outcome=a, setting=x, difference=str(diff)))
    for b, y in cartesian(BITS, BITS):
        diff = sum(behavior(a, b, 0, y) - behavior(a, b, 1, y) for a in BITS)
        if abs(diff) > tol:
            violations.append(NoSignalingViolation(side="B", outcome=b, setting=y, difference=str(diff)))
    if violations:
        logger.warning(f"⚠️ Behavior signals ({len(violations)} violations)")
    return NoSignalingReport(passed=not violations, violations=violations)
