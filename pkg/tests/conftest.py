import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from jamtopo import scenarios


@pytest.fixture
def rng():
    return np.random.default_rng(20260214)


@pytest.fixture
def path3():
    return scenarios.path_complex(3)


@pytest.fixture
def path6():
    return scenarios.path_complex(6)


@pytest.fixture
def ring6():
    return scenarios.ring_complex(6)


@pytest.fixture
def tetra():
    return scenarios.hollow_tetrahedron()
