"""
Exact feasibility and optimization on top of the cdd backend.

Constraints are written in the natural form coeffs . z >= rhs (or == rhs).
Infeasible systems come back with a Farkas certificate that is checked in
exact arithmetic before it is returned.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from geometry import backend
from geometry.cancellation import CancellationToken, check
from utils.errors import UnboundedCone
from utils.scalars import Vector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearConstraint:
    """coeffs . z >= rhs, or coeffs . z == rhs when equality is set."""
    coeffs: Vector
    rhs: Fraction = Fraction(0)
    equality: bool = False


@dataclass(frozen=True)
class FarkasCertificate:
    """Multipliers proving a constraint system has no solution.

    multipliers[i] pairs with constraints[i]; multipliers on inequalities are
    non-negative, the combination of left-hand sides vanishes and the
    combination of right-hand sides is positive.
    """
    multipliers: Vector

    def verify(self, constraints: Sequence[LinearConstraint]) -> bool:
        if len(self.multipliers) != len(constraints):
            return False
        nvars = len(constraints[0].coeffs) if constraints else 0
        combo = [Fraction(0)] * nvars
        rhs = Fraction(0)
        for y, c in zip(self.multipliers, constraints):
            if not c.equality and y < 0:
                return False
            for k, a in enumerate(c.coeffs):
                combo[k] += y * a
            rhs += y * c.rhs
        return all(x == 0 for x in combo) and rhs > 0


@dataclass(frozen=True)
class Feasibility:
    """Outcome of a feasibility question.

    witness is set when feasible; certificate is set when infeasible. The
    certificate type depends on the caller (Farkas multipliers, a separating
    functional, or a violated halfspace).
    """
    feasible: bool
    witness: Optional[Tuple] = None
    certificate: Optional[object] = None
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.feasible


def _rows(constraints: Sequence[LinearConstraint]):
    ineq = tuple((-c.rhs,) + tuple(c.coeffs) for c in constraints if not c.equality)
    eq = tuple((-c.rhs,) + tuple(c.coeffs) for c in constraints if c.equality)
    return ineq, eq


def optimize(
    objective: Sequence,
    constraints: Sequence[LinearConstraint],
    maximize: bool = True,
) -> backend.LpOutcome:
    """Optimize objective . z under constraints (exact)."""
    ineq, eq = _rows(constraints)
    return backend.solve_lp((Fraction(0),) + tuple(Fraction(c) for c in objective), ineq, eq, maximize)


def maximize(objective: Sequence, constraints: Sequence[LinearConstraint]) -> Tuple[Fraction, Vector]:
    """Exact maximum and an argmax; raises UnboundedCone when unbounded."""
    outcome = optimize(objective, constraints, maximize=True)
    if outcome.status == "unbounded":
        raise UnboundedCone("objective is unbounded on the feasible region")
    if outcome.status == "infeasible":
        raise ValueError("feasible region is empty")
    return outcome.value, outcome.point


def farkas_certificate(constraints: Sequence[LinearConstraint], nvars: int) -> Optional[FarkasCertificate]:
    """Search multipliers proving infeasibility; None when the system is feasible."""
    m = len(constraints)
    cert_constraints = []
    for k in range(nvars):
        cert_constraints.append(LinearConstraint(tuple(c.coeffs[k] for c in constraints), Fraction(0), True))
    cert_constraints.append(LinearConstraint(tuple(c.rhs for c in constraints), Fraction(1), True))
    for i, c in enumerate(constraints):
        if not c.equality:
            cert_constraints.append(LinearConstraint(tuple(Fraction(int(i == j)) for j in range(m)), Fraction(0)))
    outcome = optimize((Fraction(0),) * m, cert_constraints, maximize=False)
    if outcome.status != "optimal":
        return None
    certificate = FarkasCertificate(outcome.point)
    if not certificate.verify(constraints):
        raise ArithmeticError("Farkas certificate failed exact verification")
    return certificate


def solve_feasibility(
    constraints: Sequence[LinearConstraint],
    nvars: int,
    objectives: Sequence[Sequence] = (),
    token: Optional[CancellationToken] = None,
) -> Feasibility:
    """Decide feasibility exactly.

    When objectives are given the witness is the lexicographic minimizer:
    each objective is minimized in turn and pinned at its optimum before the
    next one is considered.

    Returns:
        Feasibility with a witness point or a FarkasCertificate.
    """
    check(token)
    pinned = list(constraints)
    outcome = optimize((Fraction(0),) * nvars, pinned, maximize=False)
    if outcome.status == "infeasible":
        certificate = farkas_certificate(constraints, nvars)
        logger.debug(f"❌ System infeasible ({len(constraints)} constraints)")
        return Feasibility(False, certificate=certificate)
    point = outcome.point
    for objective in objectives:
        check(token)
        step = optimize(objective, pinned, maximize=False)
        if step.status != "optimal":
            continue
        pinned.append(LinearConstraint(tuple(Fraction(c) for c in objective), step.value, True))
        point = step.point
    return Feasibility(True, witness=tuple(point))
