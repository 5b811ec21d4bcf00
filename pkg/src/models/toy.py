"""
Toy theories: the gbit (square state space) and regular polygon systems.
"""

import logging
from fractions import Fraction
from typing import Tuple

import sympy

import config
from theory import GptSystem, Measurement, build_system, compute_emax
from utils.scalars import Matrix, vector

logger = logging.getLogger(__name__)

H = Fraction(1, 2)


def gbit() -> GptSystem:
    """Square state space with the four extremal effects and their complements."""
    states = [(1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1)]
    effects = [(H, H, H), (-H, H, H), (-H, -H, H), (H, -H, H)]
    return build_system("gbit", states, effects, (0, 0, 1), reduce_states=False)


def gbit_fiducial_measurements() -> Tuple[Measurement, Measurement]:
    """The two binary measurements {e_1, u - e_1} and {e_2, u - e_2}."""
    return (
        Measurement((vector((H, H, H)), vector((-H, -H, H)))),
        Measurement((vector((-H, H, H)), vector((H, -H, H)))),
    )


def gbit_pr_box_coords() -> Matrix:
    """Joint state of two gbits whose fiducial statistics form a PR box.

    Entry [i][j] multiplies the basis element i of the left gbit and j of the
    right one.
    """
    return (
        (-H, H, Fraction(0)),
        (H, H, Fraction(0)),
        (Fraction(0), Fraction(0), Fraction(1)),
    )


def _trig(expr) -> Fraction:
    if expr.is_rational:
        return Fraction(int(expr.p), int(expr.q))
    return Fraction(str(sympy.N(expr, 40))).limit_denominator(config.POLYGON_DENOMINATOR)


def polygon(k: int, radius=1) -> GptSystem:
    """Regular k-gon state space with every valid effect.

    Vertex coordinates are exact when the trigonometric values are rational
    (k = 4 gives the gbit); otherwise they are rational approximations, so
    the polytope is exact but only approximately regular.
    """
    if k < 3:
        raise ValueError("a polygon needs at least three vertices")
    r = Fraction(radius)
    states = []
    for i in range(k):
        angle = 2 * sympy.pi * i / k
        states.append((r * _trig(sympy.cos(angle)), r * _trig(sympy.sin(angle)), Fraction(1)))
    unit = vector((0, 0, 1))
    draft = GptSystem(f"polygon{k}", tuple(vector(w) for w in states), (), unit)
    emax = compute_emax(draft)
    logger.info(f"✅ polygon({k}): {len(emax.vertices)} extremal effects")
    return build_system(f"polygon{k}", states, emax.vertices, unit, reduce_states=False)
