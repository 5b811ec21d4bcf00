"""
Thin wrapper around pycddlib's exact (GMP rational) interface.

All double description conversions and linear programs in gptkit go through
this module. Rows follow cdd's layout: an inequality row [b, a_1..a_n] means
b + a.x >= 0; a generator row [t, v_1..v_n] is a point when t == 1 and a ray
when t == 0. Rows listed in a linearity set are equalities (or lines).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import cdd
import cdd.gmp

logger = logging.getLogger(__name__)

Row = Tuple[Fraction, ...]


@dataclass(frozen=True)
class Generators:
    points: Tuple[Row, ...]
    rays: Tuple[Row, ...]
    lines: Tuple[Row, ...]


@dataclass(frozen=True)
class Inequalities:
    inequalities: Tuple[Row, ...]  # [b, a...] with b + a.x >= 0
    equalities: Tuple[Row, ...]  # [b, a...] with b + a.x == 0


@dataclass(frozen=True)
class LpOutcome:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Optional[Fraction]
    point: Optional[Tuple[Fraction, ...]]


def _to_fraction_rows(rows: Sequence[Sequence]) -> List[List[Fraction]]:
    return [[Fraction(x) for x in row] for row in rows]


def _make_matrix(rows, linearities, rep_type, obj_type=None, obj_func=None):
    kwargs = {"lin_set": set(linearities), "rep_type": rep_type}
    if obj_type is not None:
        kwargs["obj_type"] = obj_type
        kwargs["obj_func"] = [Fraction(x) for x in obj_func]
    return cdd.gmp.matrix_from_array(_to_fraction_rows(rows), **kwargs)


def h_to_v(inequalities: Sequence[Row], equalities: Sequence[Row] = ()) -> Generators:
    """Enumerate the generators of {x : b + a.x >= 0, equalities hold}."""
    rows = list(inequalities) + list(equalities)
    lin = range(len(inequalities), len(rows))
    mat = _make_matrix(rows, lin, cdd.RepType.INEQUALITY)
    poly = cdd.gmp.polyhedron_from_matrix(mat)
    out = cdd.gmp.copy_generators(poly)
    points, rays, lines = [], [], []
    for idx, row in enumerate(out.array):
        row = tuple(Fraction(x) for x in row)
        if idx in out.lin_set:
            lines.append(row[1:])
        elif row[0] == 0:
            rays.append(row[1:])
        else:
            points.append(tuple(x / row[0] for x in row[1:]))
    logger.debug(f"🔄 H->V: {len(rows)} rows -> {len(points)} points, {len(rays)} rays, {len(lines)} lines")
    return Generators(tuple(points), tuple(rays), tuple(lines))


def v_to_h(points: Sequence[Row], rays: Sequence[Row] = (), lines: Sequence[Row] = ()) -> Inequalities:
    """Enumerate the facets of conv(points) + cone(rays) + span(lines)."""
    rows = [(Fraction(1),) + tuple(p) for p in points]
    rows += [(Fraction(0),) + tuple(r) for r in rays]
    lin = range(len(rows), len(rows) + len(lines))
    rows += [(Fraction(0),) + tuple(v) for v in lines]
    mat = _make_matrix(rows, lin, cdd.RepType.GENERATOR)
    poly = cdd.gmp.polyhedron_from_matrix(mat)
    out = cdd.gmp.copy_inequalities(poly)
    ineqs, eqs = [], []
    for idx, row in enumerate(out.array):
        row = tuple(Fraction(x) for x in row)
        (eqs if idx in out.lin_set else ineqs).append(row)
    logger.debug(f"🔄 V->H: {len(rows)} generators -> {len(ineqs)} inequalities, {len(eqs)} equalities")
    return Inequalities(tuple(ineqs), tuple(eqs))


def solve_lp(
    objective: Sequence,
    inequalities: Sequence[Row],
    equalities: Sequence[Row] = (),
    maximize: bool = True,
) -> LpOutcome:
    """Optimize c_0 + c.x subject to the given rows, exactly.

    Args:
        objective: [c_0, c_1..c_n].
        inequalities: Rows [b, a...] with b + a.x >= 0.
        equalities: Rows [b, a...] with b + a.x == 0.
        maximize: Maximize when True, minimize otherwise.
    """
    nvars = len(objective) - 1
    rows = list(inequalities) + list(equalities)
    if not rows:
        rows = [(Fraction(1),) + (Fraction(0),) * nvars]
    lin = range(len(inequalities), len(inequalities) + len(equalities))
    obj_type = cdd.LPObjType.MAX if maximize else cdd.LPObjType.MIN
    mat = _make_matrix(rows, lin, cdd.RepType.INEQUALITY, obj_type, objective)
    lp = cdd.gmp.linprog_from_matrix(mat)
    cdd.gmp.linprog_solve(lp)
    if lp.status == cdd.LPStatusType.OPTIMAL:
        return LpOutcome("optimal", Fraction(lp.obj_value), tuple(Fraction(x) for x in lp.primal_solution))
    if lp.status in (cdd.LPStatusType.INCONSISTENT, cdd.LPStatusType.STRUC_INCONSISTENT):
        return LpOutcome("infeasible", None, None)
    if lp.status in (cdd.LPStatusType.DUAL_INCONSISTENT, cdd.LPStatusType.STRUC_DUAL_INCONSISTENT,
                     cdd.LPStatusType.UNBOUNDED):
        return LpOutcome("unbounded", None, None)
    raise RuntimeError(f"cdd LP ended with status {lp.status!r}")
