"""
Built-in systems: classical simplices, the gbit and regular polygons, the
numeric qubit, the restricted classical construction and classical
extensions.
"""

from .classical import classical
from .extension import ClassicalExtension, classical_extension
from .holevo import HolevoConstruction, holevo_restricted
from .qubit import QubitSystem, qubit
from .toy import gbit, gbit_fiducial_measurements, gbit_pr_box_coords, polygon

__all__ = [
    "classical",
    "ClassicalExtension",
    "classical_extension",
    "HolevoConstruction",
    "holevo_restricted",
    "QubitSystem",
    "qubit",
    "gbit",
    "gbit_fiducial_measurements",
    "gbit_pr_box_coords",
    "polygon",
]
