"""
Probability table reduction and coordinate representations.
"""

from .coords import CoordRep, coordinate_rep, evaluate
from .table import (
    LinearDependencies,
    ProbTable,
    RawTable,
    RedundantEntry,
    compute_rank,
    drop_redundant,
    find_convex_redundant,
    linear_dependencies,
    reduce_table,
)

__all__ = [
    "CoordRep",
    "coordinate_rep",
    "evaluate",
    "LinearDependencies",
    "ProbTable",
    "RawTable",
    "RedundantEntry",
    "compute_rank",
    "drop_redundant",
    "find_convex_redundant",
    "linear_dependencies",
    "reduce_table",
]
