import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from horopoly.polytope import convex_hull


@pytest.fixture(scope="session")
def l1_ball():
    """The unit ball of the 1-norm in the plane."""
    return convex_hull([(1, 0), (0, 1), (-1, 0), (0, -1)])


@pytest.fixture(scope="session")
def square_ball():
    """The sup-norm ball, which is also the polar of the 1-norm ball."""
    return convex_hull([(1, 1), (1, -1), (-1, 1), (-1, -1)])


@pytest.fixture(scope="session")
def skew_hexagon():
    """Hull of the six rank-two root vectors in chamber coordinates."""
    return convex_hull([(1, 0), (0, 1), (1, 1), (-1, 0), (0, -1), (-1, -1)])


@pytest.fixture(scope="session")
def asym_ball():
    """An asymmetric quadrilateral ball used for gauge asymmetry tests."""
    return convex_hull([(2, 0), (0, 1), (-1, 0), (0, -1)])
