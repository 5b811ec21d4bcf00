"""
Restricted classical four-level system and its quotient onto the gbit.

Keeping only the classical effects with x1 + x2 = x3 + x4 makes the states
indistinguishable along (1, 1, -1, -1). Shifting every state along that
direction until its fourth coordinate vanishes and dropping that coordinate
gives a three-dimensional system whose four states form a square.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from geometry import project
from theory import GptSystem, Isomorphism, build_system, find_isomorphism
from utils.scalars import Matrix, unit_vector, vector

from .toy import gbit

logger = logging.getLogger(__name__)

# y -> (y1 + y4, y2 + y4, y3 - y4)
QUOTIENT_MAP = (
    (1, 0, 0, 1),
    (0, 1, 0, 1),
    (0, 0, 1, -1),
)


@dataclass(frozen=True)
class HolevoConstruction:
    restricted: GptSystem  # four-level classical system with restricted effects
    quotient: GptSystem  # three-dimensional image of the restricted system
    projection: Matrix  # state map from the restricted system onto the quotient
    isomorphism: Isomorphism  # quotient -> gbit


def holevo_restricted() -> HolevoConstruction:
    """Build the restricted system, its quotient and the map onto the gbit."""
    states = [unit_vector(4, j) for j in range(4)]
    effects = [tuple(Fraction(b) for b in bits) for bits in product((0, 1), repeat=4)
               if bits[0] + bits[1] == bits[2] + bits[3]]
    restricted = build_system("classical4_restricted", states, effects, (1, 1, 1, 1), reduce_states=False)

    projection = tuple(vector(row) for row in QUOTIENT_MAP)
    quotient_states = project(restricted.state_body, projection).vertices
    # effects act on the quotient through their first three coordinates
    quotient_effects = [e[:3] for e in restricted.effects]
    quotient = build_system("holevo_quotient", quotient_states, quotient_effects, (1, 1, 1), reduce_states=False)

    isomorphism = find_isomorphism(quotient, gbit())
    if isomorphism is None:
        raise ArithmeticError("quotient of the restricted classical system is not a gbit")
    logger.info(f"✅ Restricted classical system: {len(restricted.states)} states x "
                f"{len(restricted.effects)} effects, quotient isomorphic to the gbit")
    return HolevoConstruction(restricted, quotient, projection, isomorphism)
