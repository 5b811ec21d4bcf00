"""
Two-qubit composite in the Pauli product parametrization.

Coefficient T[i][j] multiplies sigma_i (x) sigma_j / 4 with the index order
(X, Y, Z, 1) on both sides, matching the single-qubit coordinates.
"""

import logging
from typing import List, Optional

import numpy as np

import config
from models.qubit import PAULI, QubitSystem
from utils.errors import Unsupported

from .joint import JointState, JointSystem, TensorRule

logger = logging.getLogger(__name__)


def quantum_tensor(a: QubitSystem, b: QubitSystem) -> JointSystem:
    """Standard quantum composite of two qubits (numeric)."""
    if not (a.numeric and b.numeric):
        raise Unsupported("the quantum tensor product is defined for qubits only")
    return JointSystem(a, b, TensorRule.QUANTUM, None, None)


def coords_to_density(state: JointState) -> np.ndarray:
    t = np.asarray(state.coords, dtype=float)
    rho = np.zeros((4, 4), dtype=complex)
    for i in range(4):
        for j in range(4):
            if t[i, j]:
                rho += t[i, j] * np.kron(PAULI[i], PAULI[j])
    return rho / 4


def density_to_coords(rho: np.ndarray) -> JointState:
    coords = tuple(
        tuple(float(np.real(np.trace(rho @ np.kron(PAULI[i], PAULI[j])))) for j in range(4))
        for i in range(4)
    )
    return JointState(coords)


def is_quantum_state(state: JointState, tolerance: float = None) -> bool:
    """Positive semidefinite density matrix (trace is not checked)."""
    tol = config.QUBIT_TOLERANCE if tolerance is None else tolerance
    rho = coords_to_density(state)
    return bool(np.min(np.linalg.eigvalsh((rho + rho.conj().T) / 2)) >= -tol)


def bell_state() -> JointState:
    """(|00> + |11>)/sqrt(2)."""
    psi = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)
    return density_to_coords(np.outer(psi, psi.conj()))


def bell_basis() -> List[JointState]:
    """The four maximally entangled Bell states."""
    s = 1 / np.sqrt(2)
    vectors = ([s, 0, 0, s], [s, 0, 0, -s], [0, s, s, 0], [0, s, -s, 0])
    return [density_to_coords(np.outer(v, np.conj(v))) for v in (np.array(x, dtype=complex) for x in vectors)]


def sample_joint_states(count: int, seed: Optional[int] = None) -> List[JointState]:
    """Seeded random pure two-qubit states, led by the Bell basis."""
    rng = np.random.default_rng(config.DEFAULT_SEED if seed is None else seed)
    states = bell_basis()
    for _ in range(max(count - len(states), 0)):
        psi = rng.normal(size=4) + 1j * rng.normal(size=4)
        psi /= np.linalg.norm(psi)
        states.append(density_to_coords(np.outer(psi, psi.conj())))
    logger.debug(f"🔄 Sampled {len(states)} joint qubit states")
    return states
