"""
Shared fixtures for the test modules.
"""

import os
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

# Add the repository root to the path
ROOT = Path(__file__).parent
sys.path.insert(0, str(ROOT))

from algebra.exterior import MultiForm, Multivector  # noqa: E402
from algebra.scalar_ring import RingContext  # noqa: E402
from algebroids.algebroid import Algebroid  # noqa: E402
from algebroids.jacobi_pair import JacobiStructure, build_tm_r  # noqa: E402
from bialgebroids.glb import GLBPair  # noqa: E402
from bialgebroids.lie_bialgebras import gl2, heisenberg, su2_u2  # noqa: E402

settings.register_profile(
    'default',
    max_examples=100,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile('quick', max_examples=20, deadline=None, derandomize=True)
settings.load_profile(os.getenv('HYPOTHESIS_PROFILE', 'default'))

STRUCTURES = ROOT / 'structures'


@pytest.fixture
def structures_dir() -> Path:
    return STRUCTURES


@pytest.fixture
def contact():
    return JacobiStructure.contact_r3()


@pytest.fixture
def heisenberg_data():
    return heisenberg()


@pytest.fixture
def su2_data():
    return su2_u2()


@pytest.fixture
def gl2_data():
    return gl2()


@pytest.fixture
def plane():
    """T R^2 over the (x, y) chart."""
    return Algebroid.tangent(RingContext(('x', 'y')))


@pytest.fixture
def tm_r_plane():
    """(T R^2 x R, (0, 1))."""
    return build_tm_r(RingContext(('x', 'y')))


@pytest.fixture
def bialgebra_2d():
    """[e1, e2] = e2 with [e*1, e*2] = e*2 and zero cocycles."""
    point = RingContext(())
    algebra = Algebroid.lie_algebra(2, {(1, 2): [0, 1]}, name='b2')
    dual = Algebroid.lie_algebra(2, {(1, 2): [0, 1]}, name='b2*')
    return GLBPair(algebra, dual, MultiForm.zero(point, 2, 1), Multivector.zero(point, 2, 1),
                   name='lie_bialgebra_2d')
