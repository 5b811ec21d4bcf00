"""
Bell scenarios: behaviors, CHSH values and no-signaling checks.
"""

from .behavior import (
    Behavior,
    Correlators,
    NoSignalingReport,
    NoSignalingViolation,
    behavior_from,
    chsh,
    correlators,
    local_deterministic_behaviors,
    no_signaling_check,
    pr_box,
)
from .optimize import (
    ChshOptimum,
    NoSignalingPolytope,
    chsh_functional,
    max_chsh,
    no_signaling_polytope,
    scan_chsh_angles,
)

__all__ = [
    "Behavior",
    "Correlators",
    "NoSignalingReport",
    "NoSignalingViolation",
    "behavior_from",
    "chsh",
    "correlators",
    "local_deterministic_behaviors",
    "no_signaling_check",
    "pr_box",
    "ChshOptimum",
    "NoSignalingPolytope",
    "chsh_functional",
    "max_chsh",
    "no_signaling_polytope",
    "scan_chsh_angles",
]
