"""
Classical extension of an exact system.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from theory import GptSystem
from utils.errors import Unsupported
from utils.scalars import Matrix, unit_vector, vector

from .classical import classical

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClassicalExtension:
    """Embedding of a system's states and effects into a classical system.

    extended_table has one row per original state; its columns are the
    embedded original effects followed by the point-indicator effects.
    """
    system: GptSystem
    state_embedding: Matrix
    effect_embedding: Matrix
    extended_table: Matrix


def classical_extension(source: GptSystem, effects: Optional[Sequence[Sequence]] = None) -> ClassicalExtension:
    """Embed an exact system with N extremal states into classical(N).

    State w_j goes to the j-th vertex of the simplex; effect e goes to its
    vector of values (e(w_1), ..., e(w_N)), so every pairing is preserved.

    Args:
        source: The system to extend.
        effects: Effects to embed; defaults to the system's effect generators.
    """
    if source.numeric:
        raise Unsupported("classical extensions need finitely many extremal states")
    n = len(source.states)
    effects = source.effects if effects is None else tuple(vector(e) for e in effects)
    state_embedding = tuple(unit_vector(n, j) for j in range(n))
    effect_embedding = tuple(source.values(e) for e in effects)
    table = tuple(
        tuple(emb[j] for emb in effect_embedding) + unit_vector(n, j)
        for j in range(n)
    )
    logger.info(f"✅ Classical extension of {source.name} into classical{n}")
    return ClassicalExtension(classical(n), state_embedding, effect_embedding, table)
