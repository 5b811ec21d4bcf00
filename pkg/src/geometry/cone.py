"""
Polyhedral cones and convex bodies with exact representation conversion.

A Cone is stored by its generators, its halfspace normals (a.x >= 0), or
both. A ConvexBody is stored by its vertices, its affine inequalities
(b + a.x >= 0, stored as rows (b, a_1..a_n)), or both. Missing
representations are enumerated on request with the double description
method.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

import config
from geometry import backend
from geometry.cancellation import CancellationToken, check
from geometry.lp import Feasibility, LinearConstraint, solve_feasibility
from utils.errors import DegenerateInput, DimensionMismatch
from utils.scalars import Vector, canonical_ray, dot, mat_vec, scale, unit_vector, zeros

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeparatingFunctional:
    """Affine functional offset + normal.x, non-negative on a set and negative at a point."""
    normal: Vector
    offset: Fraction = Fraction(0)

    def value(self, x: Sequence) -> Fraction:
        return self.offset + dot(self.normal, x)


def _canonical_rays(rays: Sequence[Sequence]) -> Tuple[Vector, ...]:
    seen = {canonical_ray(r) for r in rays if any(x != 0 for x in r)}
    return tuple(sorted(seen))


def _canonical_points(points: Sequence[Sequence]) -> Tuple[Vector, ...]:
    return tuple(sorted({tuple(Fraction(x) for x in p) for p in points}))


def _check_dims(dim: int, vectors: Optional[Sequence[Sequence]], offset: int = 0) -> None:
    for v in vectors or ():
        if len(v) != dim + offset:
            raise DimensionMismatch(f"expected length {dim + offset}, got {len(v)}")


@dataclass(frozen=True)
class Cone:
    """Polyhedral cone in R^dim."""
    dim: int
    generators: Optional[Tuple[Vector, ...]] = None
    halfspaces: Optional[Tuple[Vector, ...]] = None

    def __post_init__(self):
        if self.generators is None and self.halfspaces is None:
            raise ValueError("a cone needs generators or halfspaces")
        _check_dims(self.dim, self.generators)
        _check_dims(self.dim, self.halfspaces)

    @classmethod
    def from_generators(cls, generators: Sequence[Sequence], dim: Optional[int] = None) -> "Cone":
        if dim is None:
            if not generators:
                raise ValueError("dimension required for a cone without generators")
            dim = len(generators[0])
        return cls(dim, generators=_canonical_rays(generators))

    @classmethod
    def from_halfspaces(cls, dim: int, halfspaces: Sequence[Sequence]) -> "Cone":
        return cls(dim, halfspaces=_canonical_rays(halfspaces))

    def with_generators(self, token: Optional[CancellationToken] = None) -> "Cone":
        if self.generators is not None:
            return self
        return Cone(self.dim, hrep_to_vrep(self.halfspaces, self.dim, "cone", token=token), self.halfspaces)

    def with_halfspaces(self, token: Optional[CancellationToken] = None) -> "Cone":
        if self.halfspaces is not None:
            return self
        return Cone(self.dim, self.generators, vrep_to_hrep(self.generators, self.dim, "cone", token=token))

    def contains(self, x: Sequence) -> bool:
        return member(x, self).feasible


@dataclass(frozen=True)
class ConvexBody:
    """Bounded polyhedron in R^dim."""
    dim: int
    vertices: Optional[Tuple[Vector, ...]] = None
    inequalities: Optional[Tuple[Vector, ...]] = None

    def __post_init__(self):
        if self.vertices is None and self.inequalities is None:
            raise ValueError("a convex body needs vertices or inequalities")
        _check_dims(self.dim, self.vertices)
        _check_dims(self.dim, self.inequalities, offset=1)

    @classmethod
    def from_vertices(cls, vertices: Sequence[Sequence], dim: Optional[int] = None) -> "ConvexBody":
        if dim is None:
            if not vertices:
                raise ValueError("dimension required for an empty body")
            dim = len(vertices[0])
        return cls(dim, vertices=_canonical_points(vertices))

    def with_vertices(self, token: Optional[CancellationToken] = None) -> "ConvexBody":
        if self.vertices is not None:
            return self
        return ConvexBody(self.dim, hrep_to_vrep(self.inequalities, self.dim, "vertex", token=token),
                          self.inequalities)

    def with_inequalities(self, token: Optional[CancellationToken] = None) -> "ConvexBody":
        if self.inequalities is not None:
            return self
        return ConvexBody(self.dim, self.vertices, vrep_to_hrep(self.vertices, self.dim, "vertex", token=token))

    def contains(self, x: Sequence) -> bool:
        return member(x, self).feasible


def _enforce_cap(count: int) -> None:
    if count > config.VERTEX_CAP:
        raise DegenerateInput(f"enumeration produced {count} generators, above the cap of {config.VERTEX_CAP}")


def hrep_to_vrep(
    rows: Sequence[Sequence],
    dim: int,
    mode: str = "cone",
    equalities: Sequence[Sequence] = (),
    token: Optional[CancellationToken] = None,
) -> Tuple[Vector, ...]:
    """Enumerate generators from a halfspace description.

    Args:
        rows: Cone mode: normals a with a.x >= 0. Vertex mode: rows (b, a...)
            with b + a.x >= 0.
        dim: Ambient dimension.
        mode: "cone" returns extreme rays (lines as opposite ray pairs);
            "vertex" returns the vertices of a bounded polyhedron.
        equalities: Extra equality rows in the same layout as rows.

    Raises:
        DegenerateInput: In vertex mode when the set is empty or unbounded.
    """
    check(token)
    if mode == "cone":
        ineq = [(Fraction(0),) + tuple(a) for a in rows]
        eq = [(Fraction(0),) + tuple(a) for a in equalities]
        if not ineq and not eq:
            full = [unit_vector(dim, k) for k in range(dim)]
            return _canonical_rays(full + [scale(-1, v) for v in full])
        generators = backend.h_to_v(ineq, eq)
        rays = list(generators.rays)
        for line in generators.lines:
            rays += [line, scale(-1, line)]
        _enforce_cap(len(rays))
        return _canonical_rays(rays)
    if mode == "vertex":
        if not rows and not equalities:
            raise DegenerateInput("no inequalities: the set is unbounded")
        generators = backend.h_to_v(rows, equalities)
        if generators.rays or generators.lines:
            raise DegenerateInput("halfspace set is unbounded; no vertex representation")
        if not generators.points:
            raise DegenerateInput("halfspace set is empty")
        _enforce_cap(len(generators.points))
        return _canonical_points(generators.points)
    raise ValueError(f"unknown mode {mode!r}")


def vrep_to_hrep(
    generators: Sequence[Sequence],
    dim: int,
    mode: str = "cone",
    token: Optional[CancellationToken] = None,
) -> Tuple[Vector, ...]:
    """Enumerate an irredundant halfspace description.

    Cone mode returns normals a (a.x >= 0); equalities come back as opposite
    pairs. Vertex mode returns rows (b, a...) meaning b + a.x >= 0.
    """
    check(token)
    if mode == "cone":
        if not generators:
            full = [unit_vector(dim, k) for k in range(dim)]
            return _canonical_rays(full + [scale(-1, v) for v in full])
        out = backend.v_to_h([zeros(dim)], generators)
        normals = [row[1:] for row in out.inequalities]
        for row in out.equalities:
            normals += [row[1:], scale(-1, row[1:])]
        return _canonical_rays(normals)
    if mode == "vertex":
        if not generators:
            raise DegenerateInput("cannot describe the empty set by inequalities")
        out = backend.v_to_h(generators)
        rows = [row for row in out.inequalities if any(x != 0 for x in row[1:])]
        for row in out.equalities:
            rows += [row, scale(-1, row)]
        return tuple(sorted({tuple(r) for r in rows}))
    raise ValueError(f"unknown mode {mode!r}")


def _first_nonzero_functional(x: Sequence) -> SeparatingFunctional:
    for k, value in enumerate(x):
        if value != 0:
            sign = -1 if value > 0 else 1
            return SeparatingFunctional(scale(sign, unit_vector(len(x), k)))
    raise ValueError("zero vector has no separating functional")


def member(x: Sequence, target: Union[Cone, ConvexBody], token: Optional[CancellationToken] = None) -> Feasibility:
    """Exact membership test.

    Feasible results carry the conic/convex coefficients over the generators
    (or the point itself for halfspace-only sets). Infeasible results carry a
    SeparatingFunctional that is non-negative on the set and negative at x.
    """
    x = tuple(Fraction(v) for v in x)
    if len(x) != target.dim:
        raise DimensionMismatch(f"point of length {len(x)} tested against a set in R^{target.dim}")
    is_cone = isinstance(target, Cone)
    points = target.generators if is_cone else target.vertices

    if points is None:
        rows = target.halfspaces if is_cone else target.inequalities
        for row in rows:
            functional = SeparatingFunctional(row) if is_cone else SeparatingFunctional(row[1:], row[0])
            if functional.value(x) < 0:
                return Feasibility(False, certificate=functional)
        return Feasibility(True, witness=x)

    k = len(points)
    if k == 0:
        if is_cone and all(v == 0 for v in x):
            return Feasibility(True, witness=())
        certificate = _first_nonzero_functional(x) if is_cone else SeparatingFunctional(zeros(target.dim), Fraction(-1))
        return Feasibility(False, certificate=certificate)

    constraints = [LinearConstraint(tuple(p[d] for p in points), x[d], True) for d in range(target.dim)]
    if not is_cone:
        constraints.append(LinearConstraint((Fraction(1),) * k, Fraction(1), True))
    constraints += [LinearConstraint(unit_vector(k, i)) for i in range(k)]
    result = solve_feasibility(constraints, k, objectives=[(Fraction(1),) * k], token=token)
    if result.feasible:
        return result

    multipliers = result.certificate.multipliers
    normal = tuple(-w for w in multipliers[:target.dim])
    offset = Fraction(0) if is_cone else -multipliers[target.dim]
    functional = SeparatingFunctional(normal, offset)
    if functional.value(x) >= 0 or any(functional.value(p) < 0 for p in points):
        raise ArithmeticError("separating functional failed exact verification")
    return Feasibility(False, certificate=functional)


@dataclass(frozen=True)
class ShiftedBody:
    """The set shift + sign * body."""
    body: ConvexBody
    shift: Vector
    sign: int = 1


def intersect_shifted(
    parts: Sequence[ShiftedBody],
    objectives: Sequence[Sequence] = (),
    token: Optional[CancellationToken] = None,
) -> Feasibility:
    """Decide whether the sets shift_k + sign_k * body_k share a point.

    The witness is the common point, lexicographically minimal for the given
    objectives. An infeasible answer carries a verified Farkas certificate.
    """
    if not parts:
        raise ValueError("nothing to intersect")
    dim = parts[0].body.dim
    blocks = []
    nvars = dim
    for part in parts:
        if part.body.dim != dim or len(part.shift) != dim:
            raise DimensionMismatch("shifted bodies live in different dimensions")
        if part.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        count = len(part.body.vertices) if part.body.vertices is not None else 0
        blocks.append((part, nvars, count))
        nvars += count

    constraints = []
    for part, start, count in blocks:
        shift = tuple(Fraction(s) for s in part.shift)
        if part.body.vertices is None:
            for row in part.body.inequalities:
                coeffs = tuple(part.sign * a for a in row[1:]) + (Fraction(0),) * (nvars - dim)
                constraints.append(LinearConstraint(coeffs, -row[0] + part.sign * dot(row[1:], shift)))
            continue
        verts = part.body.vertices
        for d in range(dim):
            coeffs = [Fraction(0)] * nvars
            coeffs[d] = Fraction(1)
            for j, v in enumerate(verts):
                coeffs[start + j] = -part.sign * v[d]
            constraints.append(LinearConstraint(tuple(coeffs), shift[d], True))
        simplex = [Fraction(0)] * nvars
        for j in range(count):
            simplex[start + j] = Fraction(1)
            lower = [Fraction(0)] * nvars
            lower[start + j] = Fraction(1)
            constraints.append(LinearConstraint(tuple(lower)))
        constraints.append(LinearConstraint(tuple(simplex), Fraction(1), True))

    padded = [tuple(Fraction(c) for c in obj) + (Fraction(0),) * (nvars - dim) for obj in objectives]
    padded += [unit_vector(nvars, d) for d in range(dim)]
    result = solve_feasibility(constraints, nvars, objectives=padded, token=token)
    if result.feasible:
        return Feasibility(True, witness=result.witness[:dim])
    return result


def extreme_points(points: Sequence[Sequence], token: Optional[CancellationToken] = None) -> Tuple[Vector, ...]:
    """Drop duplicates and points inside the hull of the others; keeps input order."""
    kept = []
    for p in points:
        p = tuple(Fraction(x) for x in p)
        if p not in kept:
            kept.append(p)
    i = 0
    while i < len(kept):
        check(token)
        others = kept[:i] + kept[i + 1:]
        if others and member(kept[i], ConvexBody(len(kept[i]), vertices=tuple(others))).feasible:
            kept.pop(i)
        else:
            i += 1
    return tuple(kept)


def extreme_rays(rays: Sequence[Sequence], token: Optional[CancellationToken] = None) -> Tuple[Vector, ...]:
    """Drop zero, parallel and conically redundant rays; keeps input order."""
    kept = []
    for r in rays:
        if any(x != 0 for x in r):
            c = canonical_ray(r)
            if c not in kept:
                kept.append(c)
    i = 0
    while i < len(kept):
        check(token)
        others = kept[:i] + kept[i + 1:]
        if others and member(kept[i], Cone(len(kept[i]), generators=tuple(others))).feasible:
            kept.pop(i)
        else:
            i += 1
    return tuple(kept)


def dual_cone(cone: Cone, gram: Optional[Sequence[Sequence]] = None,
              token: Optional[CancellationToken] = None) -> Cone:
    """The cone of functionals e with e.(G x) >= 0 for every x in cone.

    The dual of {0} is the whole space; the dual of the whole space is {0}.
    """
    cone = cone.with_generators(token)
    normals = [mat_vec(gram, g) if gram is not None else g for g in cone.generators]
    halfspaces = _canonical_rays(normals)
    generators = hrep_to_vrep(halfspaces, cone.dim, "cone", token=token)
    logger.debug(f"✅ Dual cone: {len(halfspaces)} halfspaces, {len(generators)} generators")
    return Cone(cone.dim, generators=generators, halfspaces=halfspaces)


def project(shape: Union[Cone, ConvexBody], linear_map: Sequence[Sequence],
            token: Optional[CancellationToken] = None) -> Union[Cone, ConvexBody]:
    """Image of a cone or body under a linear map, in irredundant form.

    Cones map their generators and keep the extreme rays of the images.
    Bodies map their vertices and keep the extreme points.
    """
    if not linear_map:
        raise DimensionMismatch("empty linear map")
    if any(len(row) != shape.dim for row in linear_map):
        raise DimensionMismatch("linear map does not match the input dimension")
    if isinstance(shape, Cone):
        cone = shape.with_generators(token)
        images = [mat_vec(linear_map, g) for g in cone.generators]
        return Cone(len(linear_map), generators=_canonical_rays(extreme_rays(images, token)))
    body = shape.with_vertices(token)
    images = [mat_vec(linear_map, v) for v in body.vertices]
    return ConvexBody(len(linear_map), vertices=_canonical_points(extreme_points(images, token)))


def cones_equal(a: Cone, b: Cone, token: Optional[CancellationToken] = None) -> bool:
    """Set equality of two cones by mutual generator membership."""
    if a.dim != b.dim:
        return False
    a_gen = a.with_generators(token)
    b_gen = b.with_generators(token)
    return (all(member(g, b, token).feasible for g in a_gen.generators)
            and all(member(g, a, token).feasible for g in b_gen.generators))
