"""
Tests for systems, maximal effect sets, joint measurability and validation.
"""

from fractions import Fraction

import pytest

from models import classical, gbit, polygon
from theory import (
    GptSystem,
    ViolationKind,
    and_or_effects,
    build_system,
    check_no_restriction,
    complement,
    complete_measurement,
    compute_emax,
    effect_leq,
    effect_norm,
    find_isomorphism,
    hasse_edges,
    joint_measurability_matrix,
    jointly_measurable,
    state_norm,
    unit_from_states,
    validate_system,
)
from utils.errors import InvalidCompletion, MissingUnit, NotAnEffect, NotAState
from utils.scalars import vector

H = Fraction(1, 2)
E1 = vector((H, H, H))
E2 = vector((-H, H, H))
ZERO = vector((0, 0, 0))
UNIT = vector((0, 0, 1))


def restricted_gbit() -> GptSystem:
    """gbit keeping only e1 and its complement."""
    return build_system("restricted_gbit", gbit().states, [E1], UNIT, reduce_states=False)


def test_four_state_system(four_state_system):
    assert four_state_system.unit == (0, 0, 1)
    assert len(four_state_system.states) == 4
    for w in four_state_system.states:
        assert four_state_system.pair(four_state_system.unit, w) == 1
    assert validate_system(four_state_system).valid


def test_four_state_emax_has_six_vertices(four_state_system):
    emax = compute_emax(four_state_system)
    assert len(emax.vertices) == 6
    assert ZERO in emax.vertices and UNIT in emax.vertices


def test_gbit_emax():
    emax = compute_emax(gbit())
    expected = {ZERO, UNIT, E1, E2, vector((-H, -H, H)), vector((H, -H, H))}
    assert set(emax.vertices) == expected


def test_gbit_is_unrestricted():
    result = check_no_restriction(gbit())
    assert result.unrestricted
    assert result.witness is None


def test_restricted_gbit_witness():
    result = check_no_restriction(restricted_gbit())
    assert not result
    assert result.witness == E2


def test_unit_from_states():
    assert unit_from_states([(1, 0, 1), (0, 1, 1), (-1, 0, 1)]) == (0, 0, 1)


def test_missing_unit():
    with pytest.raises(MissingUnit):
        unit_from_states([(1, 0), (2, 0)])


def test_build_system_closes_effects():
    system = build_system("bit", [(1, 0), (0, 1)], [(1, 0)], (1, 1))
    assert set(system.effects) == {(1, 0), (0, 1), (0, 0), (1, 1)}


def test_build_system_drops_mixed_states():
    system = build_system("bit", [(1, 0), (H, H), (0, 1)], [], (1, 1))
    assert system.states == ((1, 0), (0, 1))


def test_norms():
    system = gbit()
    assert state_norm(system, (2, 0, 2)) == 2
    assert effect_norm(system, E1) == 1
    assert effect_norm(system, vector(("1/4", 0, "1/4"))) == H
    with pytest.raises(NotAState):
        state_norm(system, (2, 0, 1))
    with pytest.raises(NotAnEffect):
        effect_norm(system, (1, 0, 0))


def test_gbit_fiducial_effects_are_not_jointly_measurable():
    result = jointly_measurable(gbit(), E1, E2)
    assert not result.feasible
    assert result.certificate is not None


def test_complementary_effects_are_jointly_measurable():
    result = jointly_measurable(gbit(), E1, complement(gbit(), E1))
    assert result.feasible
    assert result.witness == ZERO
    boolean = result.details["boolean"]
    assert boolean.only_i == E1
    assert boolean.either == UNIT


def test_classical_effects_are_jointly_measurable():
    system = classical(3)
    matrix = joint_measurability_matrix(system, system.effects)
    assert all(all(row) for row in matrix)


def test_joint_measurability_matrix_gbit():
    system = gbit()
    matrix = joint_measurability_matrix(system, [E1, E2, ZERO])
    assert matrix == [[True, False, True], [False, True, True], [True, True, True]]


def test_and_or_effects():
    boolean = and_or_effects(gbit(), E1, E2, ZERO)
    assert boolean.either == (0, 1, 1)
    assert boolean.neither == (0, -1, 0)


def test_complete_measurement():
    system = gbit()
    measurement = complete_measurement(system, [E1])
    assert measurement.effects == (E1, vector((-H, -H, H)))
    assert measurement.complete
    assert complete_measurement(system, [E1, complement(system, E1)]).effects == (E1, vector((-H, -H, H)))


def test_complete_measurement_errors():
    system = gbit()
    with pytest.raises(InvalidCompletion):
        complete_measurement(system, [UNIT, E1])
    with pytest.raises(NotAnEffect):
        complete_measurement(system, [(1, 1, 1)])
    with pytest.raises(InvalidCompletion):
        complete_measurement(system, [])


def test_effect_order():
    system = gbit()
    assert effect_leq(system, ZERO, E1)
    assert not effect_leq(system, E1, ZERO)
    assert not effect_leq(system, E1, E2)


def test_hasse_edges():
    assert hasse_edges(gbit(), [ZERO, E1, UNIT, E2]) == [(0, 1), (0, 3), (1, 2), (3, 2)]


def test_polygon4_is_the_gbit():
    iso = find_isomorphism(polygon(4), gbit())
    assert iso is not None
    assert iso.state_permutation == (0, 1, 2, 3)


def test_isomorphism_needs_matching_sizes():
    assert find_isomorphism(gbit(), classical(3)) is None


def test_validation_lists_offending_pair():
    base = gbit()
    bad = GptSystem("bad", base.states + (vector((2, 0, 1)),), base.effects, base.unit)
    report = validate_system(bad)
    assert not report.valid
    kinds = {v.kind for v in report.violations}
    assert ViolationKind.PROBABILITY_OUT_OF_RANGE in kinds
    offending = [v for v in report.violations if v.kind == ViolationKind.PROBABILITY_OUT_OF_RANGE]
    assert all(v.state_index == 4 for v in offending)


def test_validation_missing_complement():
    base = gbit()
    bad = GptSystem("no_complement", base.states, (E1, ZERO, UNIT), base.unit)
    report = validate_system(bad)
    assert [v.kind for v in report.violations] == [ViolationKind.MISSING_COMPLEMENT]
