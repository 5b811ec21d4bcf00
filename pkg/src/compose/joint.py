"""
Joint systems of two exact systems under the minimal, maximal, generalized
maximal or an explicit tensor product.

Joint vectors are n x m coefficient matrices; flattened they use the
row-major index i*m + j, with i running over the left system.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import config
from geometry import Cone, ConvexBody, Feasibility, dual_cone, member
from geometry.cancellation import CancellationToken, check
from theory import check_no_restriction
from utils.errors import DimensionMismatch, InvalidJointCone, RestrictedSubsystem, Unsupported
from utils.scalars import dot, kron, vector

logger = logging.getLogger(__name__)


class TensorRule(str, Enum):
    """Composition rules for two systems."""
    MIN = "min"
    MAX = "max"
    GEN_MAX = "genmax"
    EXPLICIT = "explicit"
    QUANTUM = "quantum"


@dataclass(frozen=True)
class JointState:
    """Coefficient matrix of a joint vector."""
    coords: Tuple[tuple, ...]

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.coords), len(self.coords[0]) if self.coords else 0

    @property
    def vector(self) -> tuple:
        return tuple(x for row in self.coords for x in row)

    @classmethod
    def from_vector(cls, values: Sequence, n: int, m: int) -> "JointState":
        if len(values) != n * m:
            raise DimensionMismatch(f"vector of length {len(values)} is not {n} x {m}")
        return cls(tuple(tuple(values[i * m:(i + 1) * m]) for i in range(n)))


def product(w_a: Sequence, w_b: Sequence) -> JointState:
    """Product vector w_a (x) w_b."""
    return JointState(tuple(tuple(x * y for y in w_b) for x in w_a))


@dataclass(frozen=True)
class JointSystem:
    """Composite of two systems.

    state_cone is None only for the numeric quantum rule, whose membership is
    decided by positivity of the density matrix.
    """
    left: object
    right: object
    rule: TensorRule
    state_cone: Optional[Cone]
    effect_body: Optional[ConvexBody]

    @property
    def numeric(self) -> bool:
        return self.left.numeric or self.right.numeric

    @property
    def shape(self) -> Tuple[int, int]:
        return self.left.dim, self.right.dim

    @property
    def dim(self) -> int:
        return self.left.dim * self.right.dim

    @property
    def unit(self) -> tuple:
        return kron(self.left.unit, self.right.unit)

    @property
    def name(self) -> str:
        return f"{self.left.name} x_{self.rule.value} {self.right.name}"

    def transform_effect(self, e_a: Sequence, e_b: Sequence) -> tuple:
        """Coordinate functional of e_a (x) e_b: kron(G_A e_a, G_B e_b)."""
        return kron(self.left.transform(e_a), self.right.transform(e_b))

    def pair_product(self, e_a: Sequence, e_b: Sequence, state: JointState):
        return dot(self.transform_effect(e_a, e_b), state.vector)

    def normalization(self, state: JointState):
        return self.pair_product(self.left.unit, self.right.unit, state)

    def contains_state(self, state: JointState) -> Feasibility:
        if self.rule == TensorRule.QUANTUM:
            from compose.quantum import is_quantum_state
            return Feasibility(is_quantum_state(state, self.left.tolerance))
        return member(state.vector, self.state_cone)


def _require_exact(a, b) -> None:
    if a.numeric or b.numeric:
        raise Unsupported("polyhedral tensor products need exact systems; use quantum_tensor for qubits")


def _product_effects(a, b) -> ConvexBody:
    vertices = [kron(e_a, e_b) for e_a in a.effect_body.vertices for e_b in b.effect_body.vertices]
    return ConvexBody.from_vertices(vertices, a.dim * b.dim)


def min_tensor(a, b) -> JointSystem:
    """Joint cone generated by products of extremal states (separable states only)."""
    _require_exact(a, b)
    generators = [kron(w_a, w_b) for w_a in a.states for w_b in b.states]
    cone = Cone.from_generators(generators, a.dim * b.dim)
    logger.info(f"✅ Minimal tensor product {a.name} x {b.name}: {len(cone.generators)} generators")
    return JointSystem(a, b, TensorRule.MIN, cone, _product_effects(a, b))


def _nonzero(vectors):
    return [v for v in vectors if any(x != 0 for x in v)]


def _maybe_enumerate(cone: Cone, enumerate_vertices: bool, token) -> Cone:
    if not enumerate_vertices:
        return cone
    if cone.dim > config.ENUMERATION_DIM_LIMIT:
        logger.warning(f"⚠️ Skipping vertex enumeration in dimension {cone.dim} "
                       f"(limit {config.ENUMERATION_DIM_LIMIT})")
        return cone
    return cone.with_generators(token)


def max_tensor(a, b, enumerate_vertices: bool = False,
               token: Optional[CancellationToken] = None) -> JointSystem:
    """Joint cone of every vector positive on all product effects.

    Raises:
        RestrictedSubsystem: If either system violates no-restriction.
    """
    _require_exact(a, b)
    for system in (a, b):
        if not check_no_restriction(system, token):
            raise RestrictedSubsystem(f"{system.name} is restricted; use gen_max_tensor")
    halfspaces = [kron(a.transform(e_a), b.transform(e_b))
                  for e_a in _nonzero(a.effect_body.vertices)
                  for e_b in _nonzero(b.effect_body.vertices)]
    cone = _maybe_enumerate(Cone.from_halfspaces(a.dim * b.dim, halfspaces), enumerate_vertices, token)
    logger.info(f"✅ Maximal tensor product {a.name} x {b.name}: {len(cone.halfspaces)} product-effect halfspaces")
    return JointSystem(a, b, TensorRule.MAX, cone, _product_effects(a, b))


def _gen_max_halfspaces(a, b, token) -> list:
    dual_a = dual_cone(a.state_cone, a.gram, token).generators
    dual_b = dual_cone(b.state_cone, b.gram, token).generators
    effects_a = _nonzero(a.effect_body.vertices)
    effects_b = _nonzero(b.effect_body.vertices)
    halfspaces = []
    for left_side, right_side in ((effects_a, dual_b), (dual_a, effects_b)):
        for f_a in left_side:
            check(token)
            for f_b in right_side:
                halfspaces.append(kron(a.transform(f_a), b.transform(f_b)))
    return halfspaces


def gen_max_tensor(a, b, enumerate_vertices: bool = False,
                   token: Optional[CancellationToken] = None) -> JointSystem:
    """Largest joint cone consistent with the physical effects of both sides.

    States must be positive on every product of a physical effect of one side
    with a valid functional of the other side; this coincides with the
    maximal tensor product for unrestricted systems.
    """
    _require_exact(a, b)
    cone = Cone.from_halfspaces(a.dim * b.dim, _gen_max_halfspaces(a, b, token))
    cone = _maybe_enumerate(cone, enumerate_vertices, token)
    logger.info(f"✅ Generalized maximal tensor product {a.name} x {b.name}")
    return JointSystem(a, b, TensorRule.GEN_MAX, cone, _product_effects(a, b))


def explicit_tensor(a, b, generators: Sequence[Sequence],
                    token: Optional[CancellationToken] = None) -> JointSystem:
    """Validate a user-supplied joint cone.

    The cone must contain the minimal tensor product, lie inside the
    generalized maximal one, and every conditional vector of every generator
    must be an unnormalized state of the remaining side.

    Raises:
        InvalidJointCone: Naming the first failed condition.
    """
    _require_exact(a, b)
    n, m = a.dim, b.dim
    generators = [vector(g) for g in generators]
    cone = Cone.from_generators(generators, n * m)
    for w_a in a.states:
        for w_b in b.states:
            check(token)
            if not member(kron(w_a, w_b), cone).feasible:
                raise InvalidJointCone(f"product of {w_a} and {w_b} is missing from the cone")
    upper = _gen_max_halfspaces(a, b, token)
    for g in generators:
        for h in upper:
            if dot(h, g) < 0:
                raise InvalidJointCone(f"generator {g} lies outside the generalized maximal tensor product")
        state = JointState.from_vector(g, n, m)
        for e_b in b.effect_body.vertices:
            conditional = _contract_right(b, state, e_b)
            if not member(conditional, a.state_cone).feasible:
                raise InvalidJointCone(f"generator {g} gives an invalid conditional state on {a.name}")
        for e_a in a.effect_body.vertices:
            conditional = _contract_left(a, state, e_a)
            if not member(conditional, b.state_cone).feasible:
                raise InvalidJointCone(f"generator {g} gives an invalid conditional state on {b.name}")
    logger.info(f"✅ Explicit joint cone with {len(cone.generators)} generators accepted")
    return JointSystem(a, b, TensorRule.EXPLICIT, cone, _product_effects(a, b))


def _contract_right(right, state: JointState, e_b: Sequence) -> tuple:
    """Left vector sum_l T_kl (G_B e_b)_l."""
    g_e = right.transform(e_b)
    return tuple(dot(row, g_e) for row in state.coords)


def _contract_left(left, state: JointState, e_a: Sequence) -> tuple:
    """Right vector sum_k (G_A e_a)_k T_kl."""
    g_e = left.transform(e_a)
    m = len(state.coords[0])
    zero = Fraction(0) if not left.numeric else 0.0
    return tuple(sum((g_e[k] * state.coords[k][l] for k in range(len(g_e))), zero) for l in range(m))


def verify_nesting(system: JointSystem, token: Optional[CancellationToken] = None) -> bool:
    """Every product of extremal states must lie in the joint cone."""
    if system.rule == TensorRule.QUANTUM:
        # products of density matrices are positive
        return True
    for w_a in system.left.states:
        for w_b in system.right.states:
            check(token)
            if not member(kron(w_a, w_b), system.state_cone).feasible:
                logger.warning(f"⚠️ Product of {w_a} and {w_b} is missing from {system.name}")
                return False
    logger.debug(f"✅ Minimal tensor product nests inside {system.name}")
    return True
