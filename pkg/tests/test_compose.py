"""
Tests for tensor products, joint-state operations and the two-qubit composite.
"""

import math
from fractions import Fraction

import numpy as np
import pytest

from compose import (
    JointState,
    bell_state,
    coords_to_density,
    conditional,
    explicit_tensor,
    gen_max_tensor,
    is_quantum_state,
    is_separable,
    joint_eval,
    marginal,
    max_tensor,
    min_tensor,
    product,
    product_basis_decomposition,
    quantum_tensor,
    verify_nesting,
)
from geometry import cones_equal
from models import classical, gbit, qubit
from theory import build_system, compute_emax
from utils.errors import (
    DimensionMismatch,
    InvalidJointCone,
    RestrictedSubsystem,
    SingularBasis,
    Unsupported,
    ZeroProbabilityCondition,
)
from utils.scalars import kron, unit_vector, vector

from .oracles import phi_plus, reduced_left

H = Fraction(1, 2)
E1 = vector((H, H, H))
E2 = vector((-H, H, H))


def restricted_gbit():
    return build_system("restricted_gbit", gbit().states, [E1], (0, 0, 1), reduce_states=False)


def test_min_tensor_of_bits(classical_pair):
    assert set(classical_pair.state_cone.generators) == {unit_vector(4, k) for k in range(4)}
    assert classical_pair.dim == 4
    assert classical_pair.unit == (1, 1, 1, 1)


def test_max_tensor_rejects_restricted_inputs():
    with pytest.raises(RestrictedSubsystem):
        max_tensor(restricted_gbit(), gbit())


def test_gen_max_tensor_of_restricted_gbits():
    a = restricted_gbit()
    joint = gen_max_tensor(a, a)
    assert joint.state_cone.halfspaces
    assert verify_nesting(joint)


def test_gen_max_equals_max_for_unrestricted(boxworld, pr_state):
    g = gbit()
    generalized = gen_max_tensor(g, g)
    assert generalized.contains_state(pr_state).feasible
    assert boxworld.contains_state(pr_state).feasible


def test_gen_max_and_max_cones_agree_for_gbits():
    g = gbit()
    assert cones_equal(gen_max_tensor(g, g).state_cone, max_tensor(g, g).state_cone)


def test_gen_max_with_unrestricted_side_uses_extended_effects():
    a = restricted_gbit()
    extended = build_system("restricted_gbit_extended", a.states, compute_emax(a).vertices, a.unit,
                            reduce_states=False)
    bit = classical(2)
    generalized = gen_max_tensor(a, bit)
    traditional = max_tensor(extended, bit)
    assert cones_equal(generalized.state_cone, traditional.state_cone)


@pytest.mark.parametrize("k,j", [(2, 2), (2, 3), (3, 3)])
def test_classical_max_tensor_is_minimal(k, j):
    a, b = classical(k), classical(j)
    assert cones_equal(max_tensor(a, b).state_cone, min_tensor(a, b).state_cone)


def test_boxworld_enumeration_limit():
    g = gbit()
    joint = max_tensor(g, g, enumerate_vertices=True)
    assert joint.state_cone.generators is not None
    # 16 product states and 8 entangled ones
    assert len(joint.state_cone.generators) == 24


def test_pr_state_is_entangled(boxworld, pr_state):
    assert not min_tensor(gbit(), gbit()).contains_state(pr_state).feasible
    result = is_separable(boxworld, pr_state)
    assert not result.feasible
    witness = result.certificate
    assert witness.value(pr_state.vector) < 0
    for w_a in gbit().states:
        for w_b in gbit().states:
            assert witness.value(kron(w_a, w_b)) >= 0


def test_product_state_is_separable(boxworld):
    g = gbit()
    state = product(g.states[0], g.states[1])
    result = is_separable(boxworld, state)
    assert result.feasible
    rebuilt = [Fraction(0)] * 9
    for (i, j), weight in result.details["weights"].items():
        for k, x in enumerate(kron(g.states[i], g.states[j])):
            rebuilt[k] += weight * x
    assert tuple(rebuilt) == state.vector


def test_product_effect_on_product_state(boxworld):
    g = gbit()
    state = product(g.states[0], g.states[1])
    assert joint_eval(boxworld, E1, E2, state) == 1
    assert joint_eval(boxworld, E2, E1, state) == 0


def test_joint_eval_shape_mismatch(boxworld):
    with pytest.raises(DimensionMismatch):
        joint_eval(boxworld, E1, E2, JointState(((1, 0), (0, 1))))


def test_pr_state_marginals(boxworld, pr_state):
    assert marginal(boxworld, pr_state, "left") == (0, 0, 1)
    assert marginal(boxworld, pr_state, "right") == (0, 0, 1)


def test_pr_state_conditional(boxworld, pr_state):
    result = conditional(boxworld, pr_state, E1, side="right")
    assert result.probability == H
    assert result.state == (0, 1, 1)
    assert result.unnormalized == (0, H, H)
    assert result.unnormalized == tuple(result.probability * x for x in result.state)


def test_conditional_on_impossible_outcome(boxworld, pr_state):
    with pytest.raises(ZeroProbabilityCondition):
        conditional(boxworld, pr_state, (0, 0, 0))


def test_explicit_tensor_accepts_min_cone():
    bit = classical(2)
    generators = [kron(w_a, w_b) for w_a in bit.states for w_b in bit.states]
    joint = explicit_tensor(bit, bit, generators)
    assert len(joint.state_cone.generators) == 4


def test_explicit_tensor_missing_product():
    bit = classical(2)
    generators = [kron(w_a, w_b) for w_a in bit.states for w_b in bit.states][:3]
    with pytest.raises(InvalidJointCone):
        explicit_tensor(bit, bit, generators)


def test_explicit_tensor_outside_gen_max():
    bit = classical(2)
    generators = [kron(w_a, w_b) for w_a in bit.states for w_b in bit.states] + [(-1, 0, 0, 0)]
    with pytest.raises(InvalidJointCone):
        explicit_tensor(bit, bit, generators)


def test_polyhedral_products_reject_qubits():
    with pytest.raises(Unsupported):
        min_tensor(qubit(), qubit())
    with pytest.raises(Unsupported):
        quantum_tensor(gbit(), gbit())


def test_nesting(boxworld, classical_pair):
    assert verify_nesting(boxworld)
    assert verify_nesting(classical_pair)


def test_bell_state_coordinates():
    t = np.asarray(bell_state().coords)
    assert np.allclose(t, np.diag([1.0, -1.0, 1.0, 1.0]), atol=1e-9)
    assert np.allclose(coords_to_density(bell_state()), phi_plus(), atol=1e-9)


def test_bell_marginal_and_conditional():
    joint = quantum_tensor(qubit(), qubit())
    bell = bell_state()
    assert np.allclose(marginal(joint, bell), (0, 0, 0, 1), atol=1e-9)
    reduced = reduced_left(phi_plus())
    assert np.allclose(reduced, np.eye(2) / 2, atol=1e-9)
    result = conditional(joint, bell, (0.0, 0.0, 1.0, 1.0))
    assert result.probability == pytest.approx(0.5, abs=1e-9)
    assert np.allclose(result.state, (0, 0, 1, 1), atol=1e-9)


def test_bell_product_basis_decomposition():
    joint = quantum_tensor(qubit(), qubit())
    basis = [(0, 0, 0, 1), (1, 0, 0, 1), (0, 1, 0, 1), (0, 0, 1, 1)]
    coeffs = np.asarray(product_basis_decomposition(joint, bell_state(), basis, basis))
    expected = np.array([[2, -1, 1, -1], [-1, 1, 0, 0], [1, 0, -1, 0], [-1, 0, 0, 1]], dtype=float)
    assert np.allclose(coeffs, expected, atol=1e-9)
    assert np.count_nonzero(np.abs(coeffs) > 1e-9) == 10


def test_exact_product_basis_decomposition(pr_state, boxworld):
    basis = gbit().states[:3]
    coeffs = product_basis_decomposition(boxworld, pr_state, basis, basis)
    rebuilt = [Fraction(0)] * 9
    for i in range(3):
        for j in range(3):
            for k, x in enumerate(kron(basis[i], basis[j])):
                rebuilt[k] += coeffs[i][j] * x
    assert tuple(rebuilt) == pr_state.vector


def test_singular_product_basis(boxworld, pr_state):
    basis = [(1, 0, 1), (2, 0, 2), (0, 1, 1)]
    with pytest.raises(SingularBasis):
        product_basis_decomposition(boxworld, pr_state, basis, basis)


def test_quantum_membership():
    assert is_quantum_state(bell_state())
    bad = JointState(tuple(tuple(2 * x if i == j and i < 3 else x for j, x in enumerate(row))
                           for i, row in enumerate(bell_state().coords)))
    assert not is_quantum_state(bad)
    assert math.isclose(np.trace(coords_to_density(bell_state())).real, 1.0)
