from types import SimpleNamespace

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from closedfrechet import ClosedCurve, decide, eps_upper_bound
from closedfrechet.freespace import build_boundary_grid, build_reach_grid, grid_from_intervals
from closedfrechet.oracle import naive_r_down_top, naive_r_up_bottom
from closedfrechet.pointer_pass import ReachDeque, ReachTriple, backward_pass, forward_pass, run_passes


def triples(q):
    return [tuple(t) for t in q]


class TestCuts:
    def test_cut_left_drops_and_truncates(self):
        q = ReachDeque([(0, 1, 0), (1, 2, 1)], identity=False)
        q.cut_left(1.5)
        assert triples(q) == [(1.5, 2, 1)]

    def test_cut_left_everything(self):
        q = ReachDeque([(0, 1, 0)])
        q.cut_left(2)
        assert triples(q) == []

    def test_cut_left_keeps_identity(self):
        q = ReachDeque([(0, 2, 2)])
        q.cut_left(1)
        assert triples(q) == [(1, 2, 2)]
        assert next(iter(q)).is_identity

    def test_cut_right_identity(self):
        q = ReachDeque([(0, 2, 2)])
        q.cut_right(1)
        assert triples(q) == [(0, 1, 1)]
        assert next(iter(q)).is_identity

    def test_cut_right_constant(self):
        q = ReachDeque([(0, 2, 0)])
        q.cut_right(1)
        assert triples(q) == [(0, 1, 0)]

    def test_cut_right_drops(self):
        q = ReachDeque([(0, 1, 0), (1, 2, 2)])
        q.cut_right(0.5)
        assert triples(q) == [(0, 0.5, 0)]

    def test_backward_cut_right_keeps_constant(self):
        # on a backward deque val == end is a coincidence, not the identity
        q = ReachDeque([(0, 2, 2)], identity=False)
        q.cut_right(1)
        assert triples(q) == [(0, 1, 2)]

    def test_truncation_counts_as_push(self):
        q = ReachDeque([(0, 1, 0), (1, 2, 1)])
        assert q.push_count == 2
        q.cut_left(1.5)
        # one triple removed, one replaced: two pops and one push
        assert (q.push_count, q.pop_count) == (3, 2)

    def test_no_op_cut_is_free(self):
        q = ReachDeque([(0, 1, 0)])
        q.cut_left(0)
        q.cut_right(1)
        assert (q.push_count, q.pop_count) == (1, 0)

    def test_grows_past_capacity(self):
        q = ReachDeque(capacity=2)
        for k in range(10):
            q.push_right(k, k + 1, 0)
        for k in range(1, 4):
            q.push_left(-k, -k + 1, -10)
        assert len(q) == 13
        assert triples(q)[0] == (-3, -2, -10) and triples(q)[-1] == (9, 10, 0)

    def test_check_rejects_overlap(self):
        q = ReachDeque([(0, 1, 0), (0.5, 2, 0)], identity=False)
        with pytest.raises(AssertionError):
            q.check()

    def test_value_at(self):
        assert ReachTriple(0, 2, 2).value_at(1.5) == 1.5
        assert ReachTriple(1, 2, 0.5).value_at(1.5) == 0.5
        assert ReachTriple(0, 2, 2).value_at(1.5, identity=False) == 2


def model_cut_left(ts, x):
    out = [t for t in ts if t[1] >= x]
    if out and out[0][0] < x:
        out[0] = (x, out[0][1], out[0][2])
    return out


def model_cut_right(ts, x, identity):
    out = [t for t in ts if t[0] <= x]
    if out and out[-1][1] > x:
        beg, end, val = out[-1]
        out[-1] = (beg, x, x if identity and val == end else val)
    return out


@st.composite
def partitions(draw):
    k = draw(st.integers(1, 8))
    cuts = sorted(draw(st.lists(st.floats(0, 10), min_size=k + 1, max_size=k + 1, unique=True)))
    ts = []
    for a, b in zip(cuts, cuts[1:]):
        identity = draw(st.booleans())
        ts.append((a, b, b if identity else a))
    return ts


@given(partitions(), st.lists(st.tuples(st.booleans(), st.floats(-1, 11)), max_size=6), st.booleans())
def test_cuts_match_list_model(ts, ops, identity):
    q = ReachDeque(ts, identity=identity, capacity=3)
    model = list(ts)
    for left, x in ops:
        if left:
            q.cut_left(x)
            model = model_cut_left(model, x)
        else:
            q.cut_right(x)
            model = model_cut_right(model, x, identity)
        assert triples(q) == model
    assert q.pop_count <= q.push_count


class TestForwardPass:
    def test_fully_free_is_identity(self):
        for m, n in [(1, 1), (2, 3), (4, 2)]:
            fwd = forward_pass(build_reach_grid(grid_from_intervals(m, n, {}, {}, default="full")), check=True)
            for i in range(1, 2 * m + 1):
                assert fwd.partition(i) == [(i - 1, i, i)]

    def test_blocked_bottom(self):
        g = grid_from_intervals(2, 3, {(i, 0): None for i in range(1, 5)}, {(0, 1): None}, default="full")
        fwd = forward_pass(build_reach_grid(g), check=True)
        assert all(fwd.partition(i) == [] for i in range(1, 5))
        assert fwd.counters.pushes == 0

    @staticmethod
    def single_column(rows):
        """m = 1 diagram whose second column is unreachable; downT[1][j] = rows[j]."""
        n = len(rows) - 1
        nan = np.full((3, n + 1), np.nan)
        dt_lo, dt_hi = nan.copy(), nan.copy()
        dr_lo, dr_hi = nan.copy(), nan.copy()
        for j, (lo, hi) in enumerate(rows):
            dt_lo[1, j], dt_hi[1, j] = lo, hi
        dr_lo[0, 1:] = np.arange(n)
        dr_hi[0, 1:] = np.arange(1, n + 1)
        return SimpleNamespace(m=1, n=n, down_t_lo=dt_lo, down_t_hi=dt_hi, down_r_lo=dr_lo, down_r_hi=dr_hi)

    def test_hand_trace_one_row(self):
        fwd = forward_pass(self.single_column([(0, 1), (0.5, 1)]), check=True)
        assert fwd.partition(1) == [(0.5, 1, 1)]

    def test_hand_trace_two_rows(self):
        fwd = forward_pass(self.single_column([(0, 1), (0.5, 1), (0, 1)]), check=True)
        assert fwd.partition(1) == [(0, 0.5, 0), (0.5, 1, 1)]
        assert fwd.partition(2) == []

    def test_partition_index_error(self):
        fwd = forward_pass(build_reach_grid(grid_from_intervals(1, 1, {}, {}, default="full")))
        with pytest.raises(IndexError):
            fwd.partition(0)
        with pytest.raises(IndexError):
            fwd.partition(3)


class TestBackwardPass:
    def test_fully_free(self):
        for m, n in [(1, 1), (2, 3), (3, 2)]:
            bwd = backward_pass(build_reach_grid(grid_from_intervals(m, n, {}, {}, default="full")), check=True)
            assert [bwd.value(i) for i in range(1, 2 * m + 1)] == [2 * m] * (2 * m)

    def test_blocked_top_and_right(self):
        free_t = {(i, 2): None for i in range(1, 5)}
        free_r = {(4, j): None for j in range(1, 3)}
        g = grid_from_intervals(2, 2, free_t, free_r, default="full")
        bwd = backward_pass(build_reach_grid(g), check=True)
        assert all(bwd.value(i) is None for i in range(1, 5))

    def test_partial_right_side(self):
        m, n = 2, 3
        g = grid_from_intervals(m, n, {}, {(2 * m, n): (n - 0.5, n)}, default="full")
        bwd = backward_pass(build_reach_grid(g), check=True)
        assert [bwd.value(i) for i in range(1, 2 * m + 1)] == [2 * m] * (2 * m)

    def test_top_gap_splits_runs(self):
        # a hole in the top side is bypassed through the cells below it
        g = grid_from_intervals(2, 1, {(2, 1): None}, {(4, 1): None}, default="full")
        bwd = backward_pass(build_reach_grid(g), check=True)
        assert bwd.value(1) == 4.0


def random_instance(rng, lo=1, hi=6):
    m, n = rng.integers(lo, hi + 1, size=2)
    x, y = ClosedCurve(rng.random((m, 2))), ClosedCurve(rng.random((n, 2)))
    return x, y, rng.uniform(0.2, 1.0) * eps_upper_bound(x, y)


@pytest.mark.parametrize("seed", range(40))
def test_counters_and_bounds(seed):
    x, y, eps = random_instance(np.random.default_rng(seed), 2, 12)
    passes = run_passes(build_reach_grid(build_boundary_grid(x, y, eps)), check=True)
    m, n = x.m, y.m
    for c in (passes.forward.counters, passes.backward.counters):
        assert c.pushes <= 6 * m * n
        assert c.pops <= c.pushes
        assert c.bound_violations == 0
    assert passes.forward.counters.max_len <= 2 * n + 1
    assert passes.backward.counters.max_len <= 4 * m + 1
    assert passes.cells == 2 * (2 * m * n)


def instance_with_passes(seed):
    """Random instance redrawn until both passes run (no early exit)."""
    rng = np.random.default_rng(seed)
    while True:
        x, y, eps = random_instance(rng)
        report = decide(x, y, eps, keep=True, check=True)
        if report.passes is not None:
            return x, y, eps, report


def encoded_value(part, u):
    """Value of a forward partition at u; at a shared endpoint the rightmost triple wins."""
    owner = [t for t in part if t.beg <= u <= t.end][-1]
    return owner.value_at(u)


@pytest.mark.parametrize("seed", range(30))
def test_forward_partitions_match_oracle(seed):
    x, y, eps, report = instance_with_passes(1000 + seed)
    fwd = report.passes.forward
    for i in range(1, 2 * x.m + 1):
        part = fwd.partition(i)
        for t in part:
            for u in np.linspace(t.beg, t.end, 32):
                want = naive_r_down_top(x, y, eps, u)
                assert want is not None
                assert encoded_value(part, u) == pytest.approx(want, abs=1e-9), (i, t, u)


@pytest.mark.parametrize("seed", range(30))
def test_backward_values_match_oracle(seed):
    x, y, eps, report = instance_with_passes(2000 + seed)
    bwd = report.passes.backward
    for i in range(1, 2 * x.m + 1):
        iv = report.reach.up_t(i, 0)
        assert (bwd.value(i) is None) == iv.is_empty
        if iv:
            for u in np.linspace(iv.lo, iv.hi, 32):
                assert naive_r_up_bottom(x, y, eps, u) == pytest.approx(bwd.value(i), abs=1e-9)
