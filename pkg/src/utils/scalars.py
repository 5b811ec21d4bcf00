"""
Exact scalar and vector helpers.

Scalars are fractions.Fraction throughout the exact kernel. Vectors are plain
tuples of scalars, matrices are tuples of rows. sympy is used wherever a
linear-algebra routine (rank, solve, inverse, nullspace) is needed.
"""

from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, List, Sequence, Tuple, Union

import sympy

from utils.errors import DimensionMismatch

Scalar = Fraction
Vector = Tuple[Fraction, ...]
Matrix = Tuple[Vector, ...]
ScalarLike = Union[str, int, Fraction, float]


def parse_scalar(value: ScalarLike) -> Fraction:
    """Parse a decimal or "p/q" value into an exact Fraction.

    Floats go through their shortest printed decimal, so 0.75 becomes 3/4.

    Raises:
        ValueError: If the value is not a finite rational literal.
    """
    if isinstance(value, bool):
        raise ValueError(f"boolean is not a scalar: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    text = str(value).strip()
    if not text:
        raise ValueError("empty scalar literal")
    return Fraction(text)


def format_scalar(value) -> str:
    """Format an exact scalar as "p/q" (or "p" for integers)."""
    return str(Fraction(value))


def vector(values: Iterable[ScalarLike]) -> Vector:
    return tuple(parse_scalar(v) for v in values)


def matrix(rows: Iterable[Iterable[ScalarLike]]) -> Matrix:
    return tuple(vector(row) for row in rows)


def is_exact(values) -> bool:
    """True when every entry (recursively) is an int or Fraction."""
    for item in values:
        if isinstance(item, (tuple, list)):
            if not is_exact(item):
                return False
        elif isinstance(item, bool) or not isinstance(item, (int, Fraction)):
            return False
    return True


def check_length(a: Sequence, b: Sequence) -> None:
    if len(a) != len(b):
        raise DimensionMismatch(f"length {len(a)} does not match length {len(b)}")


def dot(a: Sequence, b: Sequence):
    check_length(a, b)
    return sum((x * y for x, y in zip(a, b)), Fraction(0) if is_exact(a) and is_exact(b) else 0.0)


def add(a: Sequence, b: Sequence) -> tuple:
    check_length(a, b)
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence, b: Sequence) -> tuple:
    check_length(a, b)
    return tuple(x - y for x, y in zip(a, b))


def scale(c, a: Sequence) -> tuple:
    return tuple(c * x for x in a)


def zeros(n: int) -> Vector:
    return tuple(Fraction(0) for _ in range(n))


def unit_vector(n: int, k: int) -> Vector:
    return tuple(Fraction(1 if i == k else 0) for i in range(n))


def kron(a: Sequence, b: Sequence) -> tuple:
    """Row-major tensor product of two vectors: index i*len(b) + j."""
    return tuple(x * y for x in a for y in b)


def mat_vec(m: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(dot(row, v) for row in m)


def transpose(m: Sequence[Sequence]) -> tuple:
    return tuple(zip(*m)) if m else ()


def identity(n: int) -> Matrix:
    return tuple(unit_vector(n, k) for k in range(n))


def to_sympy(rows: Sequence[Sequence]) -> sympy.Matrix:
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in map(Fraction, row)] for row in rows])


def from_sympy_scalar(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def from_sympy(m: sympy.Matrix) -> Matrix:
    return tuple(tuple(from_sympy_scalar(m[i, j]) for j in range(m.cols)) for i in range(m.rows))


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return to_sympy(rows).rank()


def independent_rows(rows: Sequence[Sequence]) -> List[int]:
    """Indices of the first maximal linearly independent subset, greedily in order."""
    if not rows:
        return []
    pivots = to_sympy(rows).T.rref()[1]
    return list(pivots)


def solve_in_span(basis: Sequence[Sequence], target: Sequence) -> Vector:
    """Coefficients c with sum_k c_k basis[k] == target (basis assumed independent).

    Raises:
        ValueError: If target is outside the span of basis.
    """
    a = to_sympy(basis).T
    b = to_sympy([target]).T
    solution, params = a.gauss_jordan_solve(b)
    if params.shape[0]:
        solution = solution.subs({p: 0 for p in params})
    return tuple(from_sympy_scalar(x) for x in solution)


def inverse(m: Sequence[Sequence]) -> Matrix:
    return from_sympy(to_sympy(m).inv())


def canonical_ray(v: Sequence) -> Vector:
    """Positive rescaling of a rational vector to an integral vector with content 1."""
    v = tuple(Fraction(x) for x in v)
    nonzero = [x for x in v if x != 0]
    if not nonzero:
        return v
    lcm = 1
    for x in nonzero:
        lcm = lcm * x.denominator // gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return tuple(Fraction(x, g) for x in ints)


def mix(weights: Sequence, vectors: Sequence[Sequence]) -> tuple:
    """Convex mixture sum_k w_k v_k; weights must be non-negative and sum to one."""
    if len(weights) != len(vectors):
        raise DimensionMismatch("weights and vectors differ in length")
    if not vectors:
        raise ValueError("cannot mix an empty family")
    if any(w < 0 for w in weights):
        raise ValueError("mixture weights must be non-negative")
    total = sum(weights)
    if is_exact(weights) and total != 1:
        raise ValueError(f"mixture weights sum to {total}, expected 1")
    if not is_exact(weights) and abs(total - 1) > 1e-9:
        raise ValueError(f"mixture weights sum to {total}, expected 1")
    result = scale(weights[0], vectors[0])
    for w, v in zip(weights[1:], vectors[1:]):
        result = add(result, scale(w, v))
    return result
