"""
Exact GPT systems.

A GptSystem keeps its normalized extremal states, a generating set of
effects (closed under complement, containing the zero and unit effects),
the unit effect and an optional Gram matrix G so that e(w) = e^T G w. Without
a Gram matrix the pairing is the plain dot product of a conjugate basis.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import ClassVar, Optional, Sequence, Tuple

import sympy

from geometry import Cone, ConvexBody, Feasibility, extreme_points, member
from tablecore import ProbTable, coordinate_rep
from utils.errors import DimensionMismatch, MissingUnit
from utils.scalars import Matrix, Vector, dot, from_sympy_scalar, mat_vec, sub, to_sympy, vector, zeros

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GptSystem:
    """Finite-dimensional system with polyhedral state and effect sets."""
    name: str
    states: Tuple[Vector, ...]
    effects: Tuple[Vector, ...]
    unit: Vector
    gram: Optional[Matrix] = None

    numeric: ClassVar[bool] = False

    def __post_init__(self):
        n = len(self.unit)
        for v in self.states + self.effects:
            if len(v) != n:
                raise DimensionMismatch(f"system {self.name}: vector of length {len(v)} in dimension {n}")
        if self.gram is not None and (len(self.gram) != n or any(len(r) != n for r in self.gram)):
            raise DimensionMismatch(f"system {self.name}: Gram matrix does not match dimension {n}")

    @property
    def dim(self) -> int:
        return len(self.unit)

    def transform(self, w: Sequence) -> tuple:
        """G w, the functional side of a state."""
        return tuple(w) if self.gram is None else mat_vec(self.gram, w)

    def pair(self, e: Sequence, w: Sequence) -> Fraction:
        """Probability e(w) = e^T G w."""
        return dot(e, self.transform(w))

    def values(self, e: Sequence) -> Tuple[Fraction, ...]:
        return tuple(self.pair(e, w) for w in self.states)

    def max_pairing(self, e: Sequence) -> Fraction:
        return max(self.values(e))

    def min_pairing(self, e: Sequence) -> Fraction:
        return min(self.values(e))

    @cached_property
    def state_cone(self) -> Cone:
        return Cone.from_generators(self.states, self.dim)

    @cached_property
    def state_body(self) -> ConvexBody:
        return ConvexBody.from_vertices(self.states, self.dim)

    @cached_property
    def effect_body(self) -> ConvexBody:
        return ConvexBody.from_vertices(extreme_points(self.effects), self.dim)

    def contains_state(self, w: Sequence) -> Feasibility:
        """Membership of a (possibly unnormalized) vector in the state cone."""
        return member(w, self.state_cone)

    def contains_effect(self, e: Sequence) -> Feasibility:
        return member(e, self.effect_body)


def build_system(
    name: str,
    states: Sequence[Sequence],
    effects: Sequence[Sequence],
    unit: Sequence,
    gram: Optional[Sequence[Sequence]] = None,
    reduce_states: bool = True,
) -> GptSystem:
    """Assemble a system, closing the effects under complement.

    The zero and unit effects are appended when missing. With reduce_states
    the states are cut down to the extremal ones.
    """
    unit = vector(unit)
    states = [vector(w) for w in states]
    if reduce_states and len(states) > 1:
        states = list(extreme_points(states))
    closed = []
    for e in [vector(e) for e in effects]:
        for candidate in (e, sub(unit, e)):
            if candidate not in closed:
                closed.append(candidate)
    for candidate in (zeros(len(unit)), unit):
        if candidate not in closed:
            closed.append(candidate)
    gram_rows = tuple(vector(r) for r in gram) if gram is not None else None
    system = GptSystem(name, tuple(states), tuple(closed), unit, gram_rows)
    logger.debug(f"✅ Built system {name}: dim {system.dim}, {len(states)} states, {len(closed)} effects")
    return system


def unit_from_states(states: Sequence[Sequence]) -> Vector:
    """The functional equal to one on every given state.

    Raises:
        MissingUnit: If no such functional exists.
    """
    a = to_sympy(states)
    b = sympy.ones(len(states), 1)
    try:
        solution, params = a.gauss_jordan_solve(b)
    except ValueError as exc:
        raise MissingUnit("no functional is one on every state") from exc
    if params.shape[0]:
        solution = solution.subs({p: 0 for p in params})
    return tuple(from_sympy_scalar(x) for x in solution)


def system_from_table(table: ProbTable, name: str = "table") -> GptSystem:
    """Build the exact system described by a reduced probability table."""
    rep = coordinate_rep(table)
    unit = unit_from_states(rep.state_coords)
    system = build_system(name, rep.state_coords, rep.effect_coords, unit)
    logger.info(f"✅ System {name} from table: dim {system.dim}, {len(system.states)} extremal states")
    return system
