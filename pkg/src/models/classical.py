"""
Classical systems: the k-simplex with the full hypercube of effects.
"""

from fractions import Fraction
from itertools import product

from theory import GptSystem, build_system
from utils.scalars import unit_vector

MAX_CLASSICAL = 12


def classical(k: int) -> GptSystem:
    """Classical system with k perfectly distinguishable states.

    States are the unit vectors, effects every 0/1 vector, the unit effect is
    all ones.
    """
    if k < 1:
        raise ValueError("a classical system needs at least one state")
    if k > MAX_CLASSICAL:
        raise ValueError(f"classical({k}) would list {2 ** k} effects; the limit is k = {MAX_CLASSICAL}")
    states = [unit_vector(k, j) for j in range(k)]
    effects = [tuple(Fraction(b) for b in bits) for bits in product((0, 1), repeat=k)]
    return build_system(f"classical{k}", states, effects, (Fraction(1),) * k, reduce_states=False)
