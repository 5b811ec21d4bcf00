"""
Property-based tests.

Random tables, cones, behaviors and joint states are drawn with hypothesis;
the qubit checks use a seeded numpy generator.
"""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from bell import (
    Behavior,
    behavior_from,
    chsh,
    local_deterministic_behaviors,
    no_signaling_check,
    pr_box,
)
from compose import (
    JointState,
    gen_max_tensor,
    is_separable,
    max_tensor,
    product,
    quantum_tensor,
    sample_joint_states,
    verify_nesting,
)
from geometry import Cone, cones_equal, dual_cone
from models import classical, gbit, gbit_fiducial_measurements, gbit_pr_box_coords, holevo_restricted, polygon, qubit
from models.qubit import binary_measurement
from tablecore import RawTable, reduce_table
from theory import jointly_measurable, system_from_table, validate_system
from utils.scalars import add, kron, mix, rank, scale, zeros

SETTINGS = settings(deadline=None, suppress_health_check=[HealthCheck.too_slow])

GBIT = gbit()
BOXWORLD = max_tensor(GBIT, GBIT)
FIDUCIALS = gbit_fiducial_measurements()
EXTREMAL_BEHAVIORS = local_deterministic_behaviors() + [pr_box()]

probabilities = st.sampled_from([Fraction(k, 12) for k in range(13)])


@st.composite
def tables(draw):
    """Random tables with a trivial (always-yes) measurement column."""
    n_states = draw(st.integers(min_value=2, max_value=5))
    n_effects = draw(st.integers(min_value=1, max_value=4))
    entries = tuple(
        tuple(draw(probabilities) for _ in range(n_effects)) + (Fraction(1),)
        for _ in range(n_states)
    )
    rows = tuple(f"w{i}" for i in range(n_states))
    cols = tuple(f"e{j}" for j in range(n_effects)) + ("u",)
    return RawTable(rows, cols, entries)


@st.composite
def weights(draw, size):
    """Convex weights with denominators bounded by the draw."""
    raw = draw(st.lists(st.integers(min_value=0, max_value=6), min_size=size, max_size=size))
    if not any(raw):
        raw[0] = 1
    total = sum(raw)
    return [Fraction(r, total) for r in raw]


@st.composite
def pointed_cones(draw):
    """Cones in R^3 generated by rays with positive last coordinate."""
    count = draw(st.integers(min_value=3, max_value=6))
    coords = st.integers(min_value=-4, max_value=4)
    rays = [(draw(coords), draw(coords), draw(st.integers(min_value=1, max_value=4))) for _ in range(count)]
    assume(rank(rays) == 3)
    return Cone.from_generators(rays, 3)


def mix_behaviors(behaviors, w) -> Behavior:
    return Behavior.from_flat(mix(w, [b.flat() for b in behaviors]))


@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(tables())
def test_tables_give_valid_systems(raw):
    system = system_from_table(reduce_table(raw))
    assert validate_system(system).valid
    for e in system.effects:
        for w in system.states:
            assert 0 <= system.pair(e, w) <= 1
    for w in system.states:
        assert system.pair(system.unit, w) == 1


@SETTINGS
@given(pointed_cones())
def test_double_dual(cone):
    assert cones_equal(dual_cone(dual_cone(cone)), cone)


@SETTINGS
@given(pointed_cones())
def test_generator_halfspace_round_trip(cone):
    from_halfspaces = Cone.from_halfspaces(3, cone.with_halfspaces().halfspaces)
    assert cones_equal(from_halfspaces, cone)
    for g in cone.generators:
        assert from_halfspaces.contains(g)


@settings(max_examples=500, deadline=None)
@given(weights(len(EXTREMAL_BEHAVIORS)))
def test_mixtures_of_extremal_behaviors_do_not_signal(w):
    behavior = mix_behaviors(EXTREMAL_BEHAVIORS, w)
    assert no_signaling_check(behavior).passed
    assert 0 <= chsh(behavior) <= 4
    if w[-1] == 0:
        assert chsh(behavior) <= 2


@SETTINGS
@given(weights(5), st.sampled_from(range(4)), st.sampled_from(range(4)))
def test_boxworld_states_do_not_signal(w, i, j):
    pr = JointState(gbit_pr_box_coords())
    components = [pr] + [product(GBIT.states[(i + k) % 4], GBIT.states[(j + k) % 4]) for k in range(4)]
    vec = zeros(9)
    for state, weight in zip(components, w):
        vec = add(vec, scale(weight, state.vector))
    behavior = behavior_from(BOXWORLD, JointState.from_vector(vec, 3, 3), *FIDUCIALS, *FIDUCIALS)
    assert no_signaling_check(behavior).passed


@SETTINGS
@given(st.integers(min_value=0, max_value=2 ** 32 - 1),
       st.lists(st.floats(min_value=0, max_value=2 * np.pi), min_size=4, max_size=4))
def test_quantum_behaviors_do_not_signal(seed, angles):
    joint = quantum_tensor(qubit(), qubit())
    state = sample_joint_states(5, seed=seed)[-1]
    behavior = behavior_from(joint, state, *(binary_measurement(t) for t in angles))
    assert no_signaling_check(behavior).passed
    assert chsh(behavior) <= 2 * np.sqrt(2) + 1e-9


@settings(max_examples=100, deadline=None)
@given(weights(16))
def test_separable_mixtures_are_reconstructed(w):
    pairs = [(i, j) for i in range(4) for j in range(4)]
    vec = zeros(9)
    for (i, j), weight in zip(pairs, w):
        vec = add(vec, scale(weight, kron(GBIT.states[i], GBIT.states[j])))
    result = is_separable(BOXWORLD, JointState.from_vector(vec, 3, 3))
    assert result.feasible
    rebuilt = zeros(9)
    for (i, j), weight in result.details["weights"].items():
        assert weight > 0
        rebuilt = add(rebuilt, scale(weight, kron(GBIT.states[i], GBIT.states[j])))
    assert rebuilt == vec


@SETTINGS
@given(st.integers(min_value=3, max_value=6), st.data())
def test_joint_measurability_witness_is_sound(n, data):
    system = polygon(n)
    e_i = data.draw(st.sampled_from(system.effects))
    e_j = data.draw(st.sampled_from(system.effects))
    result = jointly_measurable(system, e_i, e_j)
    if not result.feasible:
        return
    boolean = result.details["boolean"]
    assert add(boolean.both, boolean.only_i) == e_i
    assert add(boolean.both, boolean.only_j) == e_j
    assert add(add(boolean.both, boolean.only_i), add(boolean.only_j, boolean.neither)) == system.unit
    for effect in (boolean.both, boolean.only_i, boolean.only_j, boolean.neither):
        assert system.contains_effect(effect).feasible


@pytest.mark.slow
@settings(max_examples=10, deadline=None)
@given(st.integers(min_value=3, max_value=5), st.integers(min_value=3, max_value=5))
def test_min_tensor_nests_in_gen_max(n, m):
    assert verify_nesting(gen_max_tensor(polygon(n), polygon(m)))


def test_qubit_cone_is_self_dual():
    system = qubit()
    rng = np.random.default_rng(7)
    for v in rng.normal(size=(1000, 4)):
        if system.in_cone(v):
            directions = rng.normal(size=(20, 3))
            directions /= np.linalg.norm(directions, axis=1, keepdims=True)
            for n in directions:
                assert system.pair(v, tuple(n) + (1.0,)) >= -1e-9
        else:
            n = -v[:3] / np.linalg.norm(v[:3])
            assert system.pair(v, tuple(n) + (1.0,)) < 0


@pytest.mark.parametrize("system", [classical(3), GBIT, polygon(5), polygon(6), holevo_restricted().quotient],
                         ids=["classical3", "gbit", "polygon5", "polygon6", "holevo"])
def test_builtin_probabilities_in_range(system):
    for e in system.effects:
        for w in system.states:
            assert 0 <= system.pair(e, w) <= 1
