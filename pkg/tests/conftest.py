"""
Shared fixtures for the gptkit test suite.
"""

from fractions import Fraction
from pathlib import Path

import pytest

from compose import JointState, max_tensor, min_tensor
from models import classical, gbit, gbit_fiducial_measurements, gbit_pr_box_coords
from serialization import read_table_csv
from tablecore import drop_redundant, find_convex_redundant, reduce_table
from theory import Measurement, system_from_table

DATA = Path(__file__).parent / "data"

H = Fraction(1, 2)


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA


@pytest.fixture(scope="session")
def four_state_raw():
    return read_table_csv(DATA / "four_states.csv")


@pytest.fixture(scope="session")
def four_state_table(four_state_raw):
    """Four-state table reduced, with the convexly redundant effect removed."""
    reduced = reduce_table(four_state_raw)
    return drop_redundant(reduced, find_convex_redundant(reduced))


@pytest.fixture(scope="session")
def four_state_system(four_state_table):
    return system_from_table(four_state_table, name="four_states")


@pytest.fixture(scope="session")
def gbit_system():
    return gbit()


@pytest.fixture(scope="session")
def boxworld(gbit_system):
    return max_tensor(gbit_system, gbit_system)


@pytest.fixture(scope="session")
def pr_state():
    return JointState(gbit_pr_box_coords())


@pytest.fixture(scope="session")
def gbit_measurements():
    return gbit_fiducial_measurements()


@pytest.fixture(scope="session")
def classical_pair():
    bit = classical(2)
    return min_tensor(bit, bit)


@pytest.fixture(scope="session")
def classical_measurements():
    """A0 = B0 = which-state, A1 = B1 = the trivial measurement {u, 0}."""
    one, zero = Fraction(1), Fraction(0)
    which = Measurement(((one, zero), (zero, one)))
    trivial = Measurement(((one, one), (zero, zero)))
    return which, trivial
