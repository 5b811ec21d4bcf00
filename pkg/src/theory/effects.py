"""
Operations on states, effects and measurements of a system.

Exact systems are answered with exact LPs; numeric systems (the qubit) use
their closed forms within the configured tolerance and raise Unsupported
for polytope-only operations.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import config
from geometry import ConvexBody, Feasibility, ShiftedBody, hrep_to_vrep, intersect_shifted, member
from geometry.cancellation import CancellationToken
from utils.errors import InvalidCompletion, NotAState, NotAnEffect, Unsupported
from utils.scalars import Vector, add, sub, vector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Measurement:
    """Ordered effects summing to the unit effect when complete."""
    effects: Tuple[Vector, ...]
    complete: bool = True

    def __len__(self) -> int:
        return len(self.effects)


@dataclass(frozen=True)
class BooleanEffects:
    """Effects of the coarse-grained outcomes of a joint measurement of e_i and e_j."""
    both: Vector  # e_i AND e_j
    only_i: Vector  # e_i AND NOT e_j
    only_j: Vector  # NOT e_i AND e_j
    neither: Vector  # NOT e_i AND NOT e_j
    either: Vector  # e_i OR e_j


@dataclass(frozen=True)
class NoRestrictionResult:
    unrestricted: bool
    witness: Optional[Vector] = None

    def __bool__(self) -> bool:
        return self.unrestricted


def _tolerance(system) -> Fraction:
    return getattr(system, "tolerance", config.QUBIT_TOLERANCE) if system.numeric else 0


def state_norm(system, w: Sequence):
    """u(w) for a vector of the state cone.

    Raises:
        NotAState: If w lies outside the state cone.
    """
    if system.numeric:
        if not system.is_state(w):
            raise NotAState(f"{tuple(w)} is outside the {system.name} state cone")
    else:
        w = vector(w)
        if not system.contains_state(w).feasible:
            raise NotAState(f"{w} is outside the {system.name} state cone")
    return system.pair(system.unit, w)


def effect_norm(system, e: Sequence):
    """Largest probability an effect reaches on a normalized state.

    Raises:
        NotAnEffect: If e takes a negative value on some state.
    """
    if not system.numeric:
        e = vector(e)
    if system.min_pairing(e) < -_tolerance(system):
        raise NotAnEffect(f"{tuple(e)} is negative on a {system.name} state")
    return system.max_pairing(e)


def compute_emax(system, token: Optional[CancellationToken] = None) -> ConvexBody:
    """All mathematically valid effects: V*_+ intersected with u - V*_+."""
    if system.numeric:
        raise Unsupported("the maximal effect set of a numeric system is not polyhedral")
    rows = []
    for w in system.states:
        gw = system.transform(w)
        rows.append((Fraction(0),) + tuple(gw))
        rows.append((system.pair(system.unit, w),) + tuple(-x for x in gw))
    vertices = hrep_to_vrep(rows, system.dim, "vertex", token=token)
    logger.info(f"✅ E^max of {system.name}: {len(vertices)} vertices")
    return ConvexBody(system.dim, vertices=vertices, inequalities=tuple(sorted(set(rows))))


def check_no_restriction(system, token: Optional[CancellationToken] = None) -> NoRestrictionResult:
    """Whether every valid effect is a physical one.

    Returns the lexicographically first vertex of E^max missing from E when
    the system is restricted.
    """
    emax = compute_emax(system, token)
    body = system.effect_body
    for v in emax.vertices:
        if not member(v, body, token).feasible:
            logger.info(f"⚠️ {system.name} is restricted: {v} is valid but not physical")
            return NoRestrictionResult(False, v)
    logger.info(f"✅ {system.name} satisfies the no-restriction hypothesis")
    return NoRestrictionResult(True)


def and_or_effects(system, e_i: Sequence, e_j: Sequence, both: Sequence) -> BooleanEffects:
    """Rebuild the Boolean algebra of a joint measurement from its AND effect."""
    e_i, e_j, both = vector(e_i), vector(e_j), vector(both)
    return BooleanEffects(
        both=both,
        only_i=sub(e_i, both),
        only_j=sub(e_j, both),
        neither=add(sub(sub(system.unit, e_i), e_j), both),
        either=sub(add(e_i, e_j), both),
    )


def jointly_measurable(system, e_i: Sequence, e_j: Sequence,
                       token: Optional[CancellationToken] = None) -> Feasibility:
    """Decide whether two effects have a common coarse-graining.

    A candidate AND effect f must lie in E, e_i - E, e_j - E and
    e_i + e_j - u + E at once. The witness minimizes the average probability
    of f over the extremal states, then its coordinates lexicographically;
    details["boolean"] holds the reconstructed BooleanEffects.
    """
    if system.numeric:
        raise Unsupported("joint measurability of numeric systems needs a semidefinite program")
    e_i, e_j = vector(e_i), vector(e_j)
    body = system.effect_body
    origin = tuple(Fraction(0) for _ in range(system.dim))
    parts = [
        ShiftedBody(body, origin, 1),
        ShiftedBody(body, e_i, -1),
        ShiftedBody(body, e_j, -1),
        ShiftedBody(body, sub(add(e_i, e_j), system.unit), 1),
    ]
    weight = origin
    for w in system.states:
        weight = add(weight, system.transform(w))
    result = intersect_shifted(parts, objectives=[weight], token=token)
    if not result.feasible:
        logger.info(f"❌ {e_i} and {e_j} are not jointly measurable (infeasible)")
        return result
    boolean = and_or_effects(system, e_i, e_j, result.witness)
    for effect in (boolean.both, boolean.only_i, boolean.only_j, boolean.neither):
        if not member(effect, body).feasible:
            raise ArithmeticError("joint measurement witness failed exact verification")
    logger.info(f"✅ {e_i} and {e_j} are jointly measurable (feasible, AND = {boolean.both})")
    return Feasibility(True, witness=boolean.both, details={"boolean": boolean})


def _is_effect(system, e) -> bool:
    if system.numeric:
        return system.is_effect(e)
    return member(e, system.effect_body).feasible


def complete_measurement(system, effects: Sequence[Sequence]) -> Measurement:
    """Append the failure effect u - sum(effects) when it is non-zero.

    Raises:
        NotAnEffect: If one of the effects is not in E.
        InvalidCompletion: If the effects already exceed the unit effect.
    """
    if not effects:
        raise InvalidCompletion("nothing to complete")
    effects = tuple(tuple(e) if system.numeric else vector(e) for e in effects)
    for e in effects:
        if not _is_effect(system, e):
            raise NotAnEffect(f"{e} is not an effect of {system.name}")
    total = effects[0]
    for e in effects[1:]:
        total = add(total, e)
    failure = sub(system.unit, total)
    tol = _tolerance(system)
    if all(abs(x) <= tol for x in failure):
        return Measurement(effects, complete=True)
    if not _is_effect(system, failure):
        raise InvalidCompletion(f"effects sum beyond the unit effect (failure {failure} is not an effect)")
    logger.debug(f"🔄 Completed measurement with failure effect {failure}")
    return Measurement(effects + (failure,), complete=True)


def effect_leq(system, e_i: Sequence, e_j: Sequence) -> bool:
    """e_i <= e_j, i.e. e_j - e_i is non-negative on every state."""
    if not system.numeric:
        e_i, e_j = vector(e_i), vector(e_j)
    return system.min_pairing(sub(e_j, e_i)) >= -_tolerance(system)


def complement(system, e: Sequence) -> tuple:
    return sub(system.unit, e)


def coarse_grain(effects: Sequence[Sequence]) -> tuple:
    """Sum of effects: the effect of the union of their outcomes."""
    total = tuple(effects[0])
    for e in effects[1:]:
        total = add(total, e)
    return total


def hasse_edges(system, effects: Sequence[Sequence]) -> List[Tuple[int, int]]:
    """Covering pairs (i, j) of the effect order restricted to the given effects.

    Effects equal in the order are reported once, under the first index.
    """
    n = len(effects)
    leq = [[effect_leq(system, effects[i], effects[j]) for j in range(n)] for i in range(n)]
    strict = [[leq[i][j] and not leq[j][i] for j in range(n)] for i in range(n)]
    edges = []
    for i in range(n):
        for j in range(n):
            if strict[i][j] and not any(strict[i][k] and strict[k][j] for k in range(n)):
                edges.append((i, j))
    return edges


def joint_measurability_matrix(system, effects: Sequence[Sequence],
                               token: Optional[CancellationToken] = None) -> List[List[bool]]:
    """Symmetric matrix of pairwise joint measurability; the diagonal is True."""
    n = len(effects)
    matrix = [[i == j for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            matrix[i][j] = matrix[j][i] = jointly_measurable(system, effects[i], effects[j], token).feasible
    return matrix
