"""
Search for pairing-preserving linear isomorphisms between exact systems.
"""

import logging
from dataclasses import dataclass
from itertools import permutations
from typing import Optional, Tuple

from utils.scalars import Matrix, identity, independent_rows, inverse, mat_vec, transpose

logger = logging.getLogger(__name__)

MAX_STATES = 8


@dataclass(frozen=True)
class Isomorphism:
    """state_map L sends states of the source onto states of the target;
    effect_map M sends effects so that pair_b(M e, L w) == pair_a(e, w)."""
    state_map: Matrix
    effect_map: Matrix
    state_permutation: Tuple[int, ...]


def _matmul(a, b) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def find_isomorphism(source, target) -> Optional[Isomorphism]:
    """Return an isomorphism between two exact systems, or None.

    Tries every assignment of a basis of source states to target states, so
    it is meant for small systems (at most eight extremal states).
    """
    if source.numeric or target.numeric:
        return None
    if source.dim != target.dim or len(source.states) != len(target.states):
        return None
    if len(source.states) > MAX_STATES:
        raise ValueError(f"isomorphism search is limited to {MAX_STATES} states")

    n = source.dim
    basis = independent_rows(source.states)
    a_cols = transpose([source.states[k] for k in basis])
    a_inv = inverse(a_cols)
    g_a = source.gram or identity(n)
    g_b_inv = inverse(target.gram) if target.gram is not None else identity(n)
    target_states = set(target.states)
    target_effects = set(target.effect_body.vertices)

    for choice in permutations(range(len(target.states)), len(basis)):
        b_cols = transpose([target.states[k] for k in choice])
        state_map = _matmul(b_cols, a_inv)
        images = [mat_vec(state_map, w) for w in source.states]
        if set(images) != target_states:
            continue
        try:
            l_inv_t = transpose(inverse(state_map))
        except ValueError:
            continue
        effect_map = _matmul(_matmul(g_b_inv, l_inv_t), g_a)
        if {mat_vec(effect_map, e) for e in source.effect_body.vertices} != target_effects:
            continue
        permutation = tuple(target.states.index(img) for img in images)
        logger.info(f"✅ {source.name} is isomorphic to {target.name} (states -> {permutation})")
        return Isomorphism(state_map, effect_map, permutation)
    return None
