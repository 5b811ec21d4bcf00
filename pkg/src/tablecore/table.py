"""
Probability tables: reduction, redundancy detection, rank and linear
dependencies.

A RawTable is laid out the way experiments are recorded (one row per
preparation, one column per binary measurement). A ProbTable is the reduced
form used everywhere else: one row per distinct effect, one column per
distinct state, entries p_ij = e_i(w_j).
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple, Union

from geometry import ConvexBody, member
from geometry.cancellation import CancellationToken, check
from utils.errors import DimensionMismatch, EmptyTable, TableParseError
from utils.scalars import Matrix, independent_rows, rank, solve_in_span, transpose

logger = logging.getLogger(__name__)


def _check_entries(entries: Sequence[Sequence], nrows: int, ncols: int) -> None:
    if nrows == 0 or ncols == 0:
        raise EmptyTable("table has no rows or no columns")
    if len(entries) != nrows:
        raise DimensionMismatch(f"{len(entries)} entry rows for {nrows} labels")
    for i, row in enumerate(entries):
        if len(row) != ncols:
            raise DimensionMismatch(f"row {i} has {len(row)} entries, expected {ncols}")
        for j, value in enumerate(row):
            if not 0 <= value <= 1:
                raise TableParseError(f"probability {value} outside [0, 1]", row=i, col=j)


@dataclass(frozen=True)
class RawTable:
    """Measured table: rows are preparations, columns are 1-bit measurements."""
    rows: Tuple[str, ...]
    cols: Tuple[str, ...]
    entries: Matrix

    def __post_init__(self):
        _check_entries(self.entries, len(self.rows), len(self.cols))


@dataclass(frozen=True)
class ProbTable:
    """Reduced table with effects as rows and states as columns.

    Each row and column keeps the labels of every raw row or column merged
    into it, in first-appearance order.
    """
    effect_classes: Tuple[Tuple[str, ...], ...]
    state_classes: Tuple[Tuple[str, ...], ...]
    entries: Matrix

    def __post_init__(self):
        _check_entries(self.entries, len(self.effect_classes), len(self.state_classes))

    @property
    def effect_labels(self) -> Tuple[str, ...]:
        return tuple(c[0] for c in self.effect_classes)

    @property
    def state_labels(self) -> Tuple[str, ...]:
        return tuple(c[0] for c in self.state_classes)

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.effect_classes), len(self.state_classes)

    def column(self, j: int) -> Tuple[Fraction, ...]:
        return tuple(row[j] for row in self.entries)

    @cached_property
    def rank(self) -> int:
        return rank(self.entries)


def _group(vectors: Sequence[Tuple], labels: Sequence[Tuple[str, ...]]):
    """Merge identical vectors, keeping first-appearance order and all labels."""
    order: List[Tuple] = []
    members: Dict[Tuple, List[str]] = {}
    for vec, names in zip(vectors, labels):
        if vec not in members:
            order.append(vec)
            members[vec] = []
        members[vec].extend(names)
    return order, [tuple(members[v]) for v in order]


def reduce_table(table: Union[RawTable, ProbTable]) -> ProbTable:
    """Merge identical preparations and identical measurements.

    A ProbTable input is reduced again as is, so the operation is idempotent.
    """
    if isinstance(table, RawTable):
        prep_vectors = [tuple(row) for row in table.entries]
        prep_labels = [(name,) for name in table.rows]
        meas_labels = [(name,) for name in table.cols]
        by_effect = transpose(table.entries)
    else:
        prep_vectors = [table.column(j) for j in range(len(table.state_classes))]
        prep_labels = list(table.state_classes)
        meas_labels = list(table.effect_classes)
        by_effect = table.entries

    states, state_classes = _group(prep_vectors, prep_labels)
    # re-read effect rows over the merged states only
    first_index = [prep_vectors.index(s) for s in states]
    effect_vectors = [tuple(row[j] for j in first_index) for row in by_effect]
    effects, effect_classes = _group(effect_vectors, meas_labels)

    reduced = ProbTable(tuple(effect_classes), tuple(state_classes), tuple(effects))
    merged = (len(prep_vectors) - len(states)) + (len(effect_vectors) - len(effects))
    logger.info(f"✅ Reduced table: {len(effects)} effects x {len(states)} states, "
                f"rank {reduced.rank} ({merged} duplicates merged)")
    return reduced


@dataclass(frozen=True)
class RedundantEntry:
    """A row (effect) or column (state) that is a mixture of the others."""
    axis: str  # "effect" | "state"
    index: int
    label: str
    coefficients: Dict[int, Fraction] = field(default_factory=dict)


def find_convex_redundant(table: ProbTable, token: Optional[CancellationToken] = None) -> List[RedundantEntry]:
    """Find effects and states that are convex combinations of the others.

    Each entry carries exact mixture coefficients over the other indices
    (only non-zero weights are kept).
    """
    found: List[RedundantEntry] = []
    axes = (
        ("effect", [tuple(r) for r in table.entries], table.effect_labels),
        ("state", [table.column(j) for j in range(len(table.state_classes))], table.state_labels),
    )
    for axis, vectors, labels in axes:
        for i, vec in enumerate(vectors):
            check(token)
            others = [k for k in range(len(vectors)) if k != i]
            if not others:
                continue
            body = ConvexBody(len(vec), vertices=tuple(vectors[k] for k in others))
            result = member(vec, body, token)
            if result.feasible:
                coefficients = {others[k]: w for k, w in enumerate(result.witness) if w != 0}
                found.append(RedundantEntry(axis, i, labels[i], coefficients))
                logger.info(f"⚠️ {axis} {labels[i]} is a mixture of "
                            + ", ".join(f"{labels[k]}:{w}" for k, w in coefficients.items()))
    return found


def drop_redundant(table: ProbTable, entries: Sequence[RedundantEntry]) -> ProbTable:
    """Remove the flagged effect rows and state columns."""
    drop_effects = {e.index for e in entries if e.axis == "effect"}
    drop_states = {e.index for e in entries if e.axis == "state"}
    keep_e = [i for i in range(len(table.effect_classes)) if i not in drop_effects]
    keep_s = [j for j in range(len(table.state_classes)) if j not in drop_states]
    return ProbTable(
        tuple(table.effect_classes[i] for i in keep_e),
        tuple(table.state_classes[j] for j in keep_s),
        tuple(tuple(table.entries[i][j] for j in keep_s) for i in keep_e),
    )


def compute_rank(table: ProbTable) -> int:
    """Exact rank of the effect-by-state matrix."""
    return table.rank


@dataclass(frozen=True)
class LinearDependencies:
    """Non-basis effects and states written in their respective bases."""
    effect_basis: Tuple[int, ...]
    state_basis: Tuple[int, ...]
    effect_relations: Dict[int, Dict[int, Fraction]]
    state_relations: Dict[int, Dict[int, Fraction]]


def linear_dependencies(table: ProbTable) -> LinearDependencies:
    """Express every non-basis row and column in the first independent ones."""
    rows = [tuple(r) for r in table.entries]
    cols = [table.column(j) for j in range(len(table.state_classes))]
    relations = []
    bases = []
    for vectors in (rows, cols):
        basis = independent_rows(vectors)
        spanning = [vectors[b] for b in basis]
        found = {}
        for i, vec in enumerate(vectors):
            if i in basis:
                continue
            coeffs = solve_in_span(spanning, vec)
            found[i] = {basis[k]: c for k, c in enumerate(coeffs) if c != 0}
        bases.append(tuple(basis))
        relations.append(found)
    return LinearDependencies(bases[0], bases[1], relations[0], relations[1])
