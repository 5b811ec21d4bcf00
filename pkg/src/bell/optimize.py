"""
CHSH optimization over joint state spaces and the no-signaling polytope.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from typing import Optional, Sequence, Tuple

import numpy as np

import config
from compose import JointState, JointSystem, TensorRule, bell_state, sample_joint_states
from geometry import LinearConstraint, hrep_to_vrep, maximize
from geometry.cancellation import CancellationToken, check
from theory import Measurement
from utils.errors import UnboundedCone
from utils.scalars import add, dot, scale, zeros

from .behavior import BITS, Behavior, _check_binary, behavior_from, chsh

logger = logging.getLogger(__name__)

SIGNS = ((1, 1), (1, -1))  # s_xy in S = C00 + C01 + C10 - C11


@dataclass(frozen=True)
class ChshOptimum:
    value: object
    state: JointState
    behavior: Behavior


def chsh_functional(system: JointSystem, left: Sequence[Measurement], right: Sequence[Measurement]) -> tuple:
    """Coordinate vector L with L . vec(state) = C00 + C01 + C10 - C11."""
    functional = None
    for x, y in cartesian(BITS, BITS):
        for a, b in cartesian(BITS, BITS):
            term = scale(SIGNS[x][y] * (-1) ** (a + b),
                         system.transform_effect(left[x].effects[a], right[y].effects[b]))
            functional = term if functional is None else add(functional, term)
    return functional


def max_chsh(system: JointSystem, ma0: Measurement, ma1: Measurement, mb0: Measurement, mb1: Measurement,
             net: Optional[Sequence[JointState]] = None,
             token: Optional[CancellationToken] = None) -> ChshOptimum:
    """Largest CHSH value over normalized joint states.

    Exact systems are optimized exactly: over the normalized generators of a
    V-described cone, or by LP over an H-described cone. The quantum rule is
    optimized over a sampled net of joint states (the Bell basis included).

    Raises:
        UnboundedCone: If the LP over the joint cone is unbounded, or a cone
            generator is not positive on the unit effect.
    """
    left, right = (ma0, ma1), (mb0, mb1)
    for x, m in enumerate(left):
        _check_binary(system.left, m, f"A{x}")
    for y, m in enumerate(right):
        _check_binary(system.right, m, f"B{y}")
    functional = chsh_functional(system, left, right)
    unit = system.transform_effect(system.left.unit, system.right.unit)
    n, m = system.shape

    if system.rule == TensorRule.QUANTUM:
        candidates = list(net) if net is not None else sample_joint_states(config.QUBIT_NET_SIZE)
        best = max(candidates, key=lambda s: abs(float(np.dot(functional, s.vector))))
        value = abs(float(np.dot(functional, best.vector)))
    elif system.state_cone.generators is not None:
        candidates = []
        for g in system.state_cone.generators:
            check(token)
            norm = dot(unit, g)
            if norm <= 0:
                raise UnboundedCone(f"generator {g} has unit value {norm}, so the normalized states are unbounded")
            candidates.append(JointState.from_vector(scale(1 / norm, g), n, m))
        best = max(candidates, key=lambda s: abs(dot(functional, s.vector)))
        value = abs(dot(functional, best.vector))
    else:
        constraints = [LinearConstraint(h) for h in system.state_cone.halfspaces]
        constraints.append(LinearConstraint(unit, Fraction(1), True))
        high, high_point = maximize(functional, constraints)
        check(token)
        low, low_point = maximize(scale(-1, functional), constraints)
        value, point = (high, high_point) if high >= low else (low, low_point)
        best = JointState.from_vector(point, n, m)

    behavior = behavior_from(system, best, ma0, ma1, mb0, mb1)
    logger.info(f"✅ Max CHSH over {system.name}: S = {value}")
    return ChshOptimum(value, best, behavior)


def scan_chsh_angles(state: Optional[JointState] = None, steps: int = 16) -> Tuple[float, Tuple[float, ...]]:
    """Grid search of x-z plane measurement angles for a two-qubit state.

    Returns:
        The best CHSH value and the angles (A0, A1, B0, B1).
    """
    state = bell_state() if state is None else state
    t = np.asarray(state.coords, dtype=float)
    angles = np.linspace(0.0, 2 * np.pi, steps, endpoint=False)
    directions = np.stack([np.sin(angles), np.zeros_like(angles), np.cos(angles)], axis=1)
    # correlation of +-1 observables along n_a and n_b is n_a . T n_b
    corr = directions @ t[:3, :3] @ directions.T
    s = (corr[:, None, :, None] + corr[:, None, None, :]
         + corr[None, :, :, None] - corr[None, :, None, :])
    index = np.unravel_index(np.argmax(np.abs(s)), s.shape)
    best = float(np.abs(s[index]))
    logger.info(f"✅ Angle scan ({steps} steps): S = {best:.6f}")
    return best, tuple(float(angles[i]) for i in index)


@dataclass(frozen=True)
class NoSignalingPolytope:
    inequalities: Tuple[tuple, ...]  # rows (b, a...) with b + a.p >= 0
    equalities: Tuple[tuple, ...]
    vertices: Tuple[Behavior, ...]


def _index(a: int, b: int, x: int, y: int) -> int:
    return ((a * 2 + b) * 2 + x) * 2 + y


def no_signaling_polytope(token: Optional[CancellationToken] = None) -> NoSignalingPolytope:
    """Halfspace description and vertices of the 2-2-2 no-signaling polytope."""
    size = 16
    inequalities = []
    for k in range(size):
        row = [Fraction(0)] * (size + 1)
        row[k + 1] = Fraction(1)
        inequalities.append(tuple(row))
    equalities = []
    for x, y in cartesian(BITS, BITS):
        row = [Fraction(-1)] + [Fraction(0)] * size
        for a, b in cartesian(BITS, BITS):
            row[_index(a, b, x, y) + 1] = Fraction(1)
        equalities.append(tuple(row))
    for party in range(2):
        for outcome, setting in cartesian(BITS, BITS):
            row = list(zeros(size + 1))
            for other in BITS:
                if party == 0:
                    row[_index(outcome, other, setting, 0) + 1] += 1
                    row[_index(outcome, other, setting, 1) + 1] -= 1
                else:
                    row[_index(other, outcome, 0, setting) + 1] += 1
                    row[_index(other, outcome, 1, setting) + 1] -= 1
            equalities.append(tuple(row))
    vertices = hrep_to_vrep(inequalities, size, "vertex", equalities=equalities, token=token)
    behaviors = tuple(Behavior.from_flat(v) for v in vertices)
    nonlocal_count = sum(1 for beh in behaviors if chsh(beh) > 2)
    logger.info(f"✅ No-signaling polytope: {len(behaviors)} vertices ({nonlocal_count} violate CHSH)")
    return NoSignalingPolytope(tuple(inequalities), tuple(equalities), behaviors)
