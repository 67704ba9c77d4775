import numpy as np
import pytest
from hypothesis import settings

from closedfrechet import ClosedCurve

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture
def square():
    return ClosedCurve([(0, 0), (1, 0), (1, 1), (0, 1)])


@pytest.fixture
def shifted_square():
    return ClosedCurve([(0.5, 0), (1.5, 0), (1.5, 1), (0.5, 1)])


@pytest.fixture
def origin4():
    return ClosedCurve([(0, 0)] * 4)


@pytest.fixture
def corners():
    return ClosedCurve([(-1, -1), (1, -1), (1, 1), (-1, 1)])


def random_pair(rng, lo=3, hi=8, dimension=2):
    m, n = rng.integers(lo, hi + 1, size=2)
    return ClosedCurve(rng.random((m, dimension))), ClosedCurve(rng.random((n, dimension)))


def rotation(theta):
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s], [s, c]])
