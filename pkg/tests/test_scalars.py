"""
Tests for exact scalar parsing and the small linear-algebra helpers.
"""

from fractions import Fraction

import pytest

from utils.errors import DimensionMismatch
from utils.scalars import (
    canonical_ray,
    dot,
    format_scalar,
    independent_rows,
    inverse,
    is_exact,
    kron,
    mix,
    parse_scalar,
    rank,
    solve_in_span,
    vector,
)


@pytest.mark.parametrize("text, expected", [
    ("3/4", Fraction(3, 4)),
    ("0.75", Fraction(3, 4)),
    (" -2 ", Fraction(-2)),
    (0.1, Fraction(1, 10)),
    (5, Fraction(5)),
])
def test_parse_scalar(text, expected):
    assert parse_scalar(text) == expected


@pytest.mark.parametrize("bad", ["", "one half", "1/0", True])
def test_parse_scalar_rejects(bad):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_scalar(bad)


def test_format_scalar():
    assert format_scalar(Fraction(1, 2)) == "1/2"
    assert format_scalar(Fraction(4, 2)) == "2"
    assert format_scalar(-3) == "-3"


def test_dot_keeps_exactness():
    result = dot(vector(["1/2", "1/3"]), vector([2, 3]))
    assert result == 2
    assert isinstance(result, Fraction)
    assert isinstance(dot((0.5, 1.0), (1, 1)), float)


def test_dot_length_mismatch():
    with pytest.raises(DimensionMismatch):
        dot((1, 2), (1, 2, 3))


def test_kron_is_row_major():
    assert kron((1, 2), (3, 4, 5)) == (3, 4, 5, 6, 8, 10)


def test_is_exact():
    assert is_exact([(Fraction(1), 2), (3, Fraction(1, 2))])
    assert not is_exact([(1.0, 2)])
    assert not is_exact([True])


def test_rank_and_independent_rows():
    rows = [(1, 0, 0), (2, 0, 0), (0, 1, 0), (1, 1, 0)]
    assert rank(rows) == 2
    assert independent_rows(rows) == [0, 2]


def test_solve_in_span():
    basis = [vector((1, 0, 0)), vector((0, 1, 0)), vector((0, 0, 1))]
    assert solve_in_span(basis, vector(("2/3", "-2/3", "1/3"))) == (Fraction(2, 3), Fraction(-2, 3), Fraction(1, 3))


def test_solve_in_span_outside_span():
    with pytest.raises(ValueError):
        solve_in_span([vector((1, 0))], vector((0, 1)))


def test_inverse():
    assert inverse([(2, 0), (0, Fraction(1, 2))]) == ((Fraction(1, 2), 0), (0, 2))


@pytest.mark.parametrize("ray, expected", [
    ((2, 4, -6), (1, 2, -3)),
    ((Fraction(1, 2), Fraction(1, 3)), (3, 2)),
    ((0, 0), (0, 0)),
    ((0, -5), (0, -1)),
])
def test_canonical_ray(ray, expected):
    assert canonical_ray(ray) == expected


def test_mix():
    assert mix([Fraction(1, 2), Fraction(1, 2)], [(1, 0), (0, 1)]) == (Fraction(1, 2), Fraction(1, 2))
    with pytest.raises(ValueError):
        mix([Fraction(3, 2), Fraction(-1, 2)], [(1, 0), (0, 1)])
