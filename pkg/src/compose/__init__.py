"""
Composite systems, joint states and their operations.
"""

from .joint import (
    JointState,
    JointSystem,
    TensorRule,
    explicit_tensor,
    gen_max_tensor,
    max_tensor,
    min_tensor,
    product,
    verify_nesting,
)
from .operations import (
    ConditionalState,
    conditional,
    is_separable,
    joint_eval,
    marginal,
    product_basis_decomposition,
)
from .quantum import (
    bell_basis,
    bell_state,
    coords_to_density,
    density_to_coords,
    is_quantum_state,
    quantum_tensor,
    sample_joint_states,
)

__all__ = [
    "JointState",
    "JointSystem",
    "TensorRule",
    "explicit_tensor",
    "gen_max_tensor",
    "max_tensor",
    "min_tensor",
    "product",
    "verify_nesting",
    "ConditionalState",
    "conditional",
    "is_separable",
    "joint_eval",
    "marginal",
    "product_basis_decomposition",
    "bell_basis",
    "bell_state",
    "coords_to_density",
    "density_to_coords",
    "is_quantum_state",
    "quantum_tensor",
    "sample_joint_states",
]
