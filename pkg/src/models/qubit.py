"""
Numeric qubit in the Pauli parametrization.

A state (a, b, c, d) stands for the operator (d*1 + a*X + b*Y + c*Z)/2 and an
effect (x, y, z, f) for (f*1 + x*X + y*Y + z*Z)/2, so the pairing is
(x*a + y*b + z*c + f*d)/2 and the unit effect is (0, 0, 0, 2). Both cones
are the same Lorentz cone, which makes the qubit self-dual in these
coordinates. Checks are made within a tolerance.
"""

import logging
from dataclasses import dataclass, field
from typing import ClassVar, List, Sequence, Tuple

import numpy as np

import config
from theory import Measurement

logger = logging.getLogger(__name__)

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
    np.eye(2, dtype=complex),
)


@dataclass(frozen=True)
class QubitSystem:
    """The qubit as a (non-polyhedral) GPT system."""
    name: str = "qubit"
    tolerance: float = field(default_factory=lambda: config.QUBIT_TOLERANCE)

    numeric: ClassVar[bool] = True
    dim: ClassVar[int] = 4
    unit: ClassVar[Tuple[float, ...]] = (0.0, 0.0, 0.0, 2.0)
    gram: ClassVar[Tuple[Tuple[float, ...], ...]] = tuple(
        tuple(0.5 if i == j else 0.0 for j in range(4)) for i in range(4))
    states: ClassVar[tuple] = ()

    def transform(self, w: Sequence) -> tuple:
        return tuple(0.5 * float(x) for x in w)

    def pair(self, e: Sequence, w: Sequence) -> float:
        return 0.5 * float(np.dot(np.asarray(e, dtype=float), np.asarray(w, dtype=float)))

    def max_pairing(self, e: Sequence) -> float:
        """Largest probability over normalized states: (f + |xyz|)/2."""
        e = np.asarray(e, dtype=float)
        return 0.5 * (e[3] + np.linalg.norm(e[:3]))

    def min_pairing(self, e: Sequence) -> float:
        e = np.asarray(e, dtype=float)
        return 0.5 * (e[3] - np.linalg.norm(e[:3]))

    def in_cone(self, v: Sequence) -> bool:
        v = np.asarray(v, dtype=float)
        return bool(np.linalg.norm(v[:3]) <= v[3] + self.tolerance)

    def is_state(self, w: Sequence) -> bool:
        return self.in_cone(w)

    def is_effect(self, e: Sequence) -> bool:
        complement = np.asarray(self.unit) - np.asarray(e, dtype=float)
        return self.in_cone(e) and self.in_cone(complement)

    def sample_pure_states(self, count: int, seed: int = None) -> List[Tuple[float, ...]]:
        """Uniformly random pure states from a seeded generator."""
        rng = np.random.default_rng(config.DEFAULT_SEED if seed is None else seed)
        points = rng.normal(size=(count, 3))
        points /= np.linalg.norm(points, axis=1, keepdims=True)
        return [tuple(float(x) for x in p) + (1.0,) for p in points]

    def standard_effects(self) -> List[Tuple[float, ...]]:
        """Zero, unit and the projectors onto the six Pauli eigenstates."""
        effects = [(0.0, 0.0, 0.0, 0.0), self.unit]
        for axis in range(3):
            for sign in (1.0, -1.0):
                n = [0.0, 0.0, 0.0]
                n[axis] = sign
                effects.append(tuple(n) + (1.0,))
        return effects


def qubit(tolerance: float = None) -> QubitSystem:
    return QubitSystem(tolerance=config.QUBIT_TOLERANCE if tolerance is None else tolerance)


def bloch_state(n: Sequence[float]) -> Tuple[float, ...]:
    """Normalized state with Bloch vector n (|n| <= 1)."""
    n = tuple(float(x) for x in n)
    if np.linalg.norm(n) > 1 + config.QUBIT_TOLERANCE:
        raise ValueError(f"Bloch vector {n} is longer than one")
    return n + (1.0,)


def identifying_effect(state: Sequence[float]) -> Tuple[float, ...]:
    """Effect that is one on a pure state: the projector onto it."""
    state = np.asarray(state, dtype=float)
    if abs(np.linalg.norm(state[:3]) - state[3]) > config.QUBIT_TOLERANCE:
        raise ValueError("identifying effects exist only for pure states")
    return tuple(float(x) for x in state[:3] / state[3]) + (1.0,)


def binary_measurement(theta: float, phi: float = 0.0) -> Measurement:
    """Projective measurement along the direction (theta, phi); outcome 0 is the + projector."""
    n = np.array([np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)])
    plus = tuple(float(x) for x in n) + (1.0,)
    minus = tuple(float(-x) for x in n) + (1.0,)
    return Measurement((plus, minus))


def to_density(w: Sequence[float]) -> np.ndarray:
    """2x2 operator of a state vector."""
    a, b, c, d = (float(x) for x in w)
    return 0.5 * (d * PAULI[3] + a * PAULI[0] + b * PAULI[1] + c * PAULI[2])


def from_density(rho: np.ndarray) -> Tuple[float, ...]:
    """State vector (tr rho X, tr rho Y, tr rho Z, tr rho)."""
    return tuple(float(np.real(np.trace(rho @ p))) for p in PAULI)
