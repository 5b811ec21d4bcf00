"""
Evaluation, marginals, conditioning, separability and product-basis
decomposition of joint states.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import linprog

import config
from geometry import Cone, Feasibility, member
from utils.errors import DimensionMismatch, SingularBasis, ZeroProbabilityCondition
from utils.scalars import from_sympy, is_exact, kron, rank, to_sympy, transpose, vector

from .joint import JointState, JointSystem, _contract_left, _contract_right

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConditionalState:
    state: tuple  # normalized state of the remaining side
    probability: object  # probability of the conditioning outcome
    unnormalized: tuple  # state before normalization, equal to probability * state


def _check_shape(system: JointSystem, state: JointState) -> None:
    if state.shape != system.shape:
        raise DimensionMismatch(f"joint state of shape {state.shape} for a {system.shape} system")


def joint_eval(system: JointSystem, e_a: Sequence, e_b: Sequence, state: JointState):
    """Probability (e_a (x) e_b)(state)."""
    _check_shape(system, state)
    if len(e_a) != system.left.dim or len(e_b) != system.right.dim:
        raise DimensionMismatch("effect dimensions do not match the subsystems")
    return system.pair_product(e_a, e_b, state)


def marginal(system: JointSystem, state: JointState, side: str = "left") -> tuple:
    """Reduced state on one side: contract the other side with its unit effect."""
    _check_shape(system, state)
    if side == "left":
        return _contract_right(system.right, state, system.right.unit)
    if side == "right":
        return _contract_left(system.left, state, system.left.unit)
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def conditional(system: JointSystem, state: JointState, effect: Sequence, side: str = "right") -> ConditionalState:
    """Normalized state of one side after observing effect on the other.

    Args:
        effect: Effect of the conditioning side.
        side: Which side the effect acts on; the result lives on the other.

    Raises:
        ZeroProbabilityCondition: If the observed outcome has probability zero.
    """
    _check_shape(system, state)
    if side == "right":
        remaining, unnormalized = system.left, _contract_right(system.right, state, effect)
    elif side == "left":
        remaining, unnormalized = system.right, _contract_left(system.left, state, effect)
    else:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    probability = remaining.pair(remaining.unit, unnormalized)
    tolerance = config.QUBIT_TOLERANCE if system.numeric else 0
    if abs(probability) <= tolerance:
        raise ZeroProbabilityCondition("conditioning outcome has probability zero")
    return ConditionalState(tuple(x / probability for x in unnormalized), probability, tuple(unnormalized))


def is_separable(system: JointSystem, state: JointState,
                 nets: Optional[Tuple[Sequence, Sequence]] = None) -> Feasibility:
    """Whether a joint vector is a conic combination of product states.

    Exact systems use their extremal states and return the weights
    {(i, j): lambda} or an entanglement witness (a SeparatingFunctional on
    flattened coordinates). Numeric systems decide separability within the
    given nets of single-system states (seeded samples by default).
    """
    _check_shape(system, state)
    if system.numeric:
        return _separable_in_net(system, state, nets)
    left_states = system.left.states if nets is None else [vector(w) for w in nets[0]]
    right_states = system.right.states if nets is None else [vector(w) for w in nets[1]]
    pairs = [(i, j) for i in range(len(left_states)) for j in range(len(right_states))]
    generators = tuple(kron(left_states[i], right_states[j]) for i, j in pairs)
    result = member(vector(state.vector), Cone(system.dim, generators=generators))
    if not result.feasible:
        logger.info("❌ Joint state is entangled (separable decomposition infeasible)")
        return result
    weights = {pairs[k]: w for k, w in enumerate(result.witness) if w != 0}
    logger.info(f"✅ Joint state is separable over {len(weights)} product terms")
    return Feasibility(True, witness=result.witness, details={"weights": weights})


def _separable_in_net(system: JointSystem, state: JointState, nets) -> Feasibility:
    if nets is None:
        size = max(config.QUBIT_NET_SIZE // 8, 8)
        nets = (system.left.sample_pure_states(size, seed=config.DEFAULT_SEED),
                system.right.sample_pure_states(size, seed=config.DEFAULT_SEED + 1))
    generators = np.array([np.kron(a, b) for a in nets[0] for b in nets[1]], dtype=float).T
    target = np.asarray(state.vector, dtype=float)
    outcome = linprog(np.zeros(generators.shape[1]), A_eq=generators, b_eq=target,
                      bounds=[(0, None)] * generators.shape[1], method="highs")
    if outcome.status == 0:
        weights = {k: float(w) for k, w in enumerate(outcome.x) if w > config.QUBIT_TOLERANCE}
        return Feasibility(True, witness=tuple(outcome.x), details={"weights": weights, "numeric": True})
    return Feasibility(False, details={"numeric": True, "message": outcome.message})


def product_basis_decomposition(system: JointSystem, state: JointState,
                                basis_a: Sequence[Sequence], basis_b: Sequence[Sequence]) -> tuple:
    """Coefficients c[i][j] with state = sum_ij c[i][j] basis_a[i] (x) basis_b[j].

    Raises:
        SingularBasis: If either basis is not linearly independent.
    """
    _check_shape(system, state)
    n, m = system.shape
    if len(basis_a) != n or len(basis_b) != m:
        raise DimensionMismatch("basis sizes must match the subsystem dimensions")
    exact = is_exact(state.coords) and is_exact(basis_a) and is_exact(basis_b)
    if exact:
        if rank(basis_a) < n or rank(basis_b) < m:
            raise SingularBasis("product basis is not linearly independent")
        b_a = to_sympy(transpose(basis_a))
        b_b = to_sympy(transpose(basis_b))
        coeffs = b_a.inv() * to_sympy(state.coords) * b_b.inv().T
        return from_sympy(coeffs)
    b_a = np.asarray(basis_a, dtype=float).T
    b_b = np.asarray(basis_b, dtype=float).T
    if np.linalg.matrix_rank(b_a) < n or np.linalg.matrix_rank(b_b) < m:
        raise SingularBasis("product basis is not linearly independent")
    t = np.asarray(state.coords, dtype=float)
    coeffs = np.linalg.solve(b_a, np.linalg.solve(b_b, t.T).T)
    return tuple(tuple(float(x) for x in row) for row in coeffs)
