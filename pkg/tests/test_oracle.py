import math

import numpy as np
import pytest

from closedfrechet import ClosedCurve, GeometryError, eps_upper_bound
from closedfrechet.oracle import (
    default_candidates,
    discrete_frechet_cyclic,
    naive_closed_decide,
    sample_curve,
)


class TestDiscrete:
    def test_identical_samplings(self, square):
        s = sample_curve(square, 8)
        assert discrete_frechet_cyclic(s, s) == 0

    def test_point_vs_corners(self, corners):
        assert discrete_frechet_cyclic(np.zeros((1, 2)), corners.vertices) == pytest.approx(math.sqrt(2))

    def test_translated_squares(self, square, shifted_square):
        value = discrete_frechet_cyclic(sample_curve(square, 64), sample_curve(shifted_square, 64))
        assert value == pytest.approx(0.5, abs=0.05)

    def test_shift_invariant(self, square):
        s = sample_curve(square, 4).points
        assert discrete_frechet_cyclic(s, np.roll(s, 5, axis=0)) == 0

    def test_empty(self, square):
        with pytest.raises(ValueError):
            discrete_frechet_cyclic(np.zeros((0, 2)), square.vertices)

    def test_sampling(self, square):
        s = sample_curve(square, 64)
        assert len(s) == 4 * 64
        assert s.spacing == pytest.approx(1 / 64)
        assert np.allclose(s.points[::64], square.vertices)


class TestNaiveDecide:
    def test_identical_squares(self, square):
        assert naive_closed_decide(square, square, 0.1)

    def test_point_vs_corners(self, origin4, corners):
        assert not naive_closed_decide(origin4, corners, 1.0)
        assert naive_closed_decide(origin4, corners, 1.415)

    @pytest.mark.parametrize("seed", range(10))
    def test_free_at_upper_bound(self, seed):
        rng = np.random.default_rng(seed)
        x, y = ClosedCurve(rng.random((5, 2))), ClosedCurve(rng.random((4, 2)))
        assert naive_closed_decide(x, y, eps_upper_bound(x, y))

    def test_candidate_out_of_range(self, square):
        with pytest.raises(GeometryError):
            naive_closed_decide(square, square, 0.1, candidates=[5.0])

    def test_candidates_in_range(self, square, shifted_square):
        c = default_candidates(square, shifted_square, 0.6)
        assert c.min() >= 0 and c.max() <= 4
        assert {0.0, 1.0, 2.0, 3.0, 4.0} <= set(c.tolist())

    def test_explicit_candidates(self, square, shifted_square):
        # u = 0 pairs the starts, u = 2 puts (1, 1) against (0.5, 0)
        assert naive_closed_decide(square, shifted_square, 0.51, candidates=[0.0])
        assert not naive_closed_decide(square, shifted_square, 0.51, candidates=[2.0])
