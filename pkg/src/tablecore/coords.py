"""
Coordinate representation of a reduced probability table.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from tablecore.table import ProbTable
from utils.errors import DimensionMismatch, SingularSystem
from utils.scalars import Matrix, dot, independent_rows, inverse, solve_in_span

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoordRep:
    """Coordinates in which every table entry is a plain dot product.

    effect_coords[i] . state_coords[j] == table.entries[i][j]. Row k of
    conjugate_basis gives the coefficients, over all N states, of the vector
    on which basis effect k evaluates to one and the others to zero.
    """
    dim: int
    effect_coords: Matrix
    state_coords: Matrix
    conjugate_basis: Matrix
    basis_effects: Tuple[int, ...]
    basis_states: Tuple[int, ...]
    effect_labels: Tuple[str, ...] = ()
    state_labels: Tuple[str, ...] = ()

    def conjugate_vectors(self) -> Matrix:
        """Coordinates of the conjugate basis vectors (the unit vectors)."""
        return tuple(
            tuple(sum((row[j] * self.state_coords[j][d] for j in range(len(row))), Fraction(0))
                  for d in range(self.dim))
            for row in self.conjugate_basis
        )


def coordinate_rep(table: ProbTable) -> CoordRep:
    """Pick the first rank-many independent effects as basis and express everything in it.

    Raises:
        SingularSystem: If no rank-many independent states exist.
    """
    rows = [tuple(r) for r in table.entries]
    basis_effects = independent_rows(rows)
    n = len(basis_effects)
    spanning = [rows[b] for b in basis_effects]
    effect_coords = tuple(solve_in_span(spanning, row) for row in rows)

    n_states = len(table.state_classes)
    state_coords = tuple(tuple(rows[b][j] for b in basis_effects) for j in range(n_states))

    basis_states = independent_rows(state_coords)
    if len(basis_states) < n:
        raise SingularSystem(f"only {len(basis_states)} independent states for rank {n}")
    # columns of s are the coordinates of the basis states
    s = tuple(tuple(state_coords[basis_states[c]][r] for c in range(n)) for r in range(n))
    s_inv = inverse(s)
    conjugate = []
    for k in range(n):
        expansion = [Fraction(0)] * n_states
        for c in range(n):
            expansion[basis_states[c]] = s_inv[c][k]
        conjugate.append(tuple(expansion))

    rep = CoordRep(n, effect_coords, state_coords, tuple(conjugate), tuple(basis_effects),
                   tuple(basis_states), table.effect_labels, table.state_labels)
    logger.info(f"✅ Coordinate representation in dimension {n} "
                f"(basis effects {', '.join(table.effect_labels[b] for b in basis_effects)})")
    return rep


def evaluate(effect: Sequence, state: Sequence) -> Fraction:
    """Probability e(w) as the dot product of coordinates."""
    if len(effect) != len(state):
        raise DimensionMismatch(f"effect of length {len(effect)} paired with state of length {len(state)}")
    return dot(effect, state)
