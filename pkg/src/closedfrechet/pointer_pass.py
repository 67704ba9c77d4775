"""Deque-represented reach functions and the forward/backward passes.

``r_down(u, v)`` is the rightmost point of the bottom side from which
``(u, v)`` is reachable by a monotone path; ``r_up(u, v)`` the rightmost
point of the top side. On a cell border each is a piecewise function, kept
as a deque of ``(beg, end, val)`` triples sorted along the border:

* forward triples live on horizontal borders (u-axis). ``val == end`` marks
  the identity piece ``r_down(u) = u``, anything else a constant piece.
* backward triples live on vertical borders (v-axis) and are always constant;
  ``val`` is a u-coordinate on the top side.

Both passes run in O(mn) amortized time: each cell pushes at most three
triples and every pop consumes an earlier push.

The deque itself is a ring buffer over a ``(capacity, 3)`` float array with a
``[head, size]`` state vector, so the same helpers serve the compiled passes
and the :class:`ReachDeque` wrapper.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from numba import njit

# layout of the int64 counter vector shared by the kernels
PUSHES, POPS, CELLS, MAX_LEN, BOUND_VIOLATIONS = range(5)
N_STATS = 5


class ReachTriple(NamedTuple):
    beg: float
    end: float
    val: float

    @property
    def is_identity(self) -> bool:
        return self.val == self.end

    def value_at(self, x: float, identity: bool = True) -> float:
        if identity and self.val == self.end:
            return x
        return self.val


# --- ring-buffer primitives -------------------------------------------------


@njit(cache=True, inline="always")
def _tail(state, cap):
    return (state[0] + state[1] - 1) % cap


@njit(cache=True)
def _push_left(buf, state, stats, beg, end, val):
    cap = buf.shape[0]
    if state[1] == cap:
        raise AssertionError("deque capacity exceeded")
    h = (state[0] - 1) % cap
    buf[h, 0] = beg
    buf[h, 1] = end
    buf[h, 2] = val
    state[0] = h
    state[1] += 1
    stats[PUSHES] += 1


@njit(cache=True)
def _push_right(buf, state, stats, beg, end, val):
    cap = buf.shape[0]
    if state[1] == cap:
        raise AssertionError("deque capacity exceeded")
    t = (state[0] + state[1]) % cap
    buf[t, 0] = beg
    buf[t, 1] = end
    buf[t, 2] = val
    state[1] += 1
    stats[PUSHES] += 1


@njit(cache=True)
def _clear(state, stats):
    stats[POPS] += state[1]
    state[1] = 0


@njit(cache=True)
def _cut_left(buf, state, stats, x):
    cap = buf.shape[0]
    while state[1] > 0 and buf[state[0], 1] < x:
        state[0] = (state[0] + 1) % cap
        state[1] -= 1
        stats[POPS] += 1
    if state[1] > 0 and buf[state[0], 0] < x:
        buf[state[0], 0] = x
        stats[POPS] += 1
        stats[PUSHES] += 1


@njit(cache=True)
def _cut_right(buf, state, stats, x, identity):
    cap = buf.shape[0]
    while state[1] > 0 and buf[_tail(state, cap), 0] > x:
        state[1] -= 1
        stats[POPS] += 1
    if state[1] > 0:
        t = _tail(state, cap)
        if buf[t, 1] > x:
            if identity and buf[t, 2] == buf[t, 1]:
                buf[t, 2] = x
            buf[t, 1] = x
            stats[POPS] += 1
            stats[PUSHES] += 1


@njit(cache=True)
def _peek(buf, state, stats, right):
    # read-without-removal, accounted as remove-and-push
    stats[POPS] += 1
    stats[PUSHES] += 1
    if right:
        return buf[_tail(state, buf.shape[0]), 2]
    return buf[state[0], 2]


@njit(cache=True)
def _check_deque(buf, state, identity, lo, hi):
    """Sorted, contiguous, value-monotone, spanning exactly ``[lo, hi]``.

    Forward values never decrease along the border. Backward values never
    increase with v: a higher point on a vertical border can only reach
    top-side points that a lower one also reaches.
    """
    cap = buf.shape[0]
    size = state[1]
    if size == 0:
        if not np.isnan(lo):
            raise AssertionError("deque empty but its border is reachable")
        return
    if np.isnan(lo):
        raise AssertionError("deque non-empty but its border is unreachable")
    first = state[0]
    last = (state[0] + size - 1) % cap
    if buf[first, 0] != lo or buf[last, 1] != hi:
        raise AssertionError("deque span differs from the reachable interval")
    sign = 1.0 if identity else -1.0
    prev_end = np.nan
    prev_right_value = -np.inf
    for k in range(size):
        p = (state[0] + k) % cap
        beg = buf[p, 0]
        end = buf[p, 1]
        val = buf[p, 2]
        if beg > end:
            raise AssertionError("triple with beg > end")
        if k > 0 and beg != prev_end:
            raise AssertionError("triples not contiguous")
        is_id = identity and val == end
        if identity and not is_id and val > beg:
            raise AssertionError("constant forward triple with val > beg")
        left_value = beg if is_id else val
        if sign * left_value < prev_right_value:
            raise AssertionError("reach values out of order along the deque")
        prev_right_value = sign * (end if is_id else val)
        prev_end = end


# --- passes -------------------------------------------------------------------


@njit(cache=True)
def _forward_pass(dt_lo, dt_hi, dr_lo, dr_hi, m2, n, check):
    stats = np.zeros(N_STATS, dtype=np.int64)
    buf = np.empty((2 * n + 3, 3))
    state = np.zeros(2, dtype=np.int64)
    # r*(i-1, j) for the column being processed, one slot per row
    rstar = np.full(n + 1, np.nan)
    for j in range(1, n + 1):
        if not np.isnan(dr_lo[0, j]):
            rstar[j] = 0.0

    offsets = np.zeros(m2 + 2, dtype=np.int64)
    out = np.empty((4 * m2 + 4, 3))
    n_out = 0

    for i in range(1, m2 + 1):
        state[0] = 0
        state[1] = 0
        if not np.isnan(dt_lo[i, 0]):
            _push_right(buf, state, stats, dt_lo[i, 0], dt_hi[i, 0], dt_hi[i, 0])
        for j in range(1, n + 1):
            stats[CELLS] += 1
            a = dt_lo[i, j - 1]
            b = dt_hi[i, j - 1]
            c = dt_lo[i, j]
            d = dt_hi[i, j]
            has_b = state[1] > 0
            has_l = not np.isnan(dr_lo[i - 1, j])
            has_t = not np.isnan(c)
            has_r = not np.isnan(dr_lo[i, j])
            r_left = rstar[j]
            new_r = np.nan
            if has_b:
                r_b = _peek(buf, state, stats, True)
                if has_t:
                    if has_l and c < a:
                        if np.isnan(r_left):
                            raise AssertionError("left pointer consumed but undefined")
                        _push_left(buf, state, stats, c, a, r_left)
                    else:
                        _cut_left(buf, state, stats, c)
                    if b < d:
                        _push_right(buf, state, stats, max(b, c), d, r_b)
                    else:
                        _cut_right(buf, state, stats, d, True)
                else:
                    _clear(state, stats)
                if has_r:
                    new_r = r_b
            elif has_l:
                if np.isnan(r_left):
                    raise AssertionError("left pointer consumed but undefined")
                if has_t:
                    _push_right(buf, state, stats, c, d, r_left)
                if has_r:
                    new_r = r_left
            elif has_t or has_r:
                raise AssertionError("border reachable from nowhere")
            rstar[j] = new_r

            size = state[1]
            if size > stats[MAX_LEN]:
                stats[MAX_LEN] = size
            if size > 2 * j + 1:
                stats[BOUND_VIOLATIONS] += 1
            if check:
                _check_deque(buf, state, True, c, d)

        size = state[1]
        while n_out + size > out.shape[0]:
            grown = np.empty((2 * out.shape[0], 3))
            grown[:n_out] = out[:n_out]
            out = grown
        for k in range(size):
            p = (state[0] + k) % buf.shape[0]
            out[n_out, 0] = buf[p, 0]
            out[n_out, 1] = buf[p, 1]
            out[n_out, 2] = buf[p, 2]
            n_out += 1
        offsets[i + 1] = n_out
    return offsets, out[:n_out].copy(), stats


@njit(cache=True)
def _top_run_ends(t_lo, t_hi, m2, n):
    """r_up on the top side: right end of the free run of T containing each edge."""
    ends = np.full(m2 + 1, np.nan)
    run_end = np.nan
    for i in range(m2, 0, -1):
        if np.isnan(t_lo[i, n]):
            run_end = np.nan
            continue
        joined = (
            i < m2
            and not np.isnan(run_end)
            and t_hi[i, n] == i
            and t_lo[i + 1, n] == i
        )
        if not joined:
            run_end = t_hi[i, n]
        ends[i] = run_end
    return ends


@njit(cache=True)
def _backward_pass(ut_lo, ut_hi, ur_lo, ur_hi, m2, n, check):
    stats = np.zeros(N_STATS, dtype=np.int64)
    buf = np.empty((2 * m2 + 3, 3))
    state = np.zeros(2, dtype=np.int64)
    # r*(i, j) on the top border of the current row, one slot per column
    rtop = _top_run_ends(ut_lo, ut_hi, m2, n)

    for j in range(n, 0, -1):
        state[0] = 0
        state[1] = 0
        if not np.isnan(ur_lo[m2, j]):
            _push_right(buf, state, stats, ur_lo[m2, j], ur_hi[m2, j], float(m2))
        for i in range(m2, 0, -1):
            stats[CELLS] += 1
            a = ur_lo[i, j]
            b = ur_hi[i, j]
            c = ur_lo[i - 1, j]
            d = ur_hi[i - 1, j]
            has_r = state[1] > 0
            has_t = not np.isnan(ut_lo[i, j])
            has_l = not np.isnan(c)
            has_b = not np.isnan(ut_lo[i, j - 1])
            r_top = rtop[i]
            new_r = np.nan
            if has_r:
                r_a = _peek(buf, state, stats, False)
                if has_l:
                    if has_t and b < d:
                        if np.isnan(r_top):
                            raise AssertionError("top pointer consumed but undefined")
                        _push_right(buf, state, stats, b, d, r_top)
                    else:
                        _cut_right(buf, state, stats, d, False)
                    if c < a:
                        _push_left(buf, state, stats, c, min(a, d), r_a)
                    else:
                        _cut_left(buf, state, stats, c)
                else:
                    _clear(state, stats)
                if has_b:
                    new_r = r_a
            elif has_t:
                if np.isnan(r_top):
                    raise AssertionError("top pointer consumed but undefined")
                if has_l:
                    _push_right(buf, state, stats, c, d, r_top)
                if has_b:
                    new_r = r_top
            elif has_l or has_b:
                raise AssertionError("border reachable from nowhere")
            rtop[i] = new_r

            size = state[1]
            if size > stats[MAX_LEN]:
                stats[MAX_LEN] = size
            # the deque now describes column i - 1
            if size > 2 * m2 - 2 * (i - 1) + 1:
                stats[BOUND_VIOLATIONS] += 1
            if check:
                _check_deque(buf, state, False, c, d)
                for k in range(size):
                    if buf[(state[0] + k) % buf.shape[0], 2] < i - 1:
                        raise AssertionError("backward pointer left of its column")
    return rtop, stats


# --- public surface -------------------------------------------------------------


@dataclass(frozen=True)
class PassCounters:
    pushes: int
    pops: int
    cells: int
    max_len: int
    bound_violations: int

    @classmethod
    def from_stats(cls, stats) -> "PassCounters":
        return cls(*(int(s) for s in stats[:N_STATS]))


@dataclass(frozen=True)
class ForwardResult:
    """Final partitions of ``g_down`` on every top-side edge ``T[i][n]``."""

    m: int
    n: int
    offsets: np.ndarray
    triples: np.ndarray
    counters: PassCounters

    def partition(self, i: int) -> list[ReachTriple]:
        if not 1 <= i <= 2 * self.m:
            raise IndexError(i)
        rows = self.triples[self.offsets[i]:self.offsets[i + 1]]
        return [ReachTriple(*map(float, row)) for row in rows]


@dataclass(frozen=True)
class BackwardResult:
    """Constant ``r_up`` on each bottom-side edge ``T[i][0]``; NaN where undefined."""

    m: int
    n: int
    r_up: np.ndarray
    counters: PassCounters

    def value(self, i: int) -> float | None:
        if not 1 <= i <= 2 * self.m:
            raise IndexError(i)
        v = self.r_up[i]
        return None if np.isnan(v) else float(v)


@dataclass(frozen=True)
class PassResult:
    forward: ForwardResult
    backward: BackwardResult

    @property
    def pushes(self) -> int:
        return self.forward.counters.pushes + self.backward.counters.pushes

    @property
    def pops(self) -> int:
        return self.forward.counters.pops + self.backward.counters.pops

    @property
    def cells(self) -> int:
        return self.forward.counters.cells + self.backward.counters.cells


def forward_pass(reach, check: bool = False) -> ForwardResult:
    """Propagate ``r_down`` bottom-to-top, one column deque at a time.

    ``reach`` is a :class:`~closedfrechet.freespace.ReachGrid` (only its
    ``down_*`` arrays are read). With ``check=True`` every step verifies the
    deque invariants and raises ``AssertionError`` on a violation.
    """
    offsets, triples, stats = _forward_pass(
        reach.down_t_lo, reach.down_t_hi, reach.down_r_lo, reach.down_r_hi,
        2 * reach.m, reach.n, check,
    )
    return ForwardResult(reach.m, reach.n, offsets, triples, PassCounters.from_stats(stats))


def backward_pass(reach, check: bool = False) -> BackwardResult:
    """Propagate ``r_up`` top-to-bottom, one row deque at a time."""
    r_up, stats = _backward_pass(
        reach.up_t_lo, reach.up_t_hi, reach.up_r_lo, reach.up_r_hi,
        2 * reach.m, reach.n, check,
    )
    return BackwardResult(reach.m, reach.n, r_up, PassCounters.from_stats(stats))


def run_passes(reach, check: bool = False) -> PassResult:
    return PassResult(forward_pass(reach, check), backward_pass(reach, check))


class ReachDeque:
    """Deque of reach triples with cut operations and push/pop counters.

    ``identity=True`` gives forward semantics (a triple with ``val == end``
    is the identity piece); backward deques hold constants only.
    """

    def __init__(self, triples=(), identity: bool = True, capacity: int = 8):
        self.identity = identity
        self._buf = np.empty((max(capacity, 1), 3))
        self._state = np.zeros(2, dtype=np.int64)
        self._stats = np.zeros(N_STATS, dtype=np.int64)
        for t in triples:
            self.push_right(*t)

    def _reserve(self):
        if self._state[1] < self._buf.shape[0]:
            return
        rows = self._rows()
        self._buf = np.empty((2 * self._buf.shape[0], 3))
        self._buf[: len(rows)] = rows
        self._state[0] = 0

    def _rows(self) -> np.ndarray:
        idx = (self._state[0] + np.arange(self._state[1])) % self._buf.shape[0]
        return self._buf[idx]

    @property
    def push_count(self) -> int:
        return int(self._stats[PUSHES])

    @property
    def pop_count(self) -> int:
        return int(self._stats[POPS])

    def push_left(self, beg: float, end: float, val: float) -> None:
        self._reserve()
        _push_left(self._buf, self._state, self._stats, beg, end, val)

    def push_right(self, beg: float, end: float, val: float) -> None:
        self._reserve()
        _push_right(self._buf, self._state, self._stats, beg, end, val)

    def cut_left(self, x: float) -> None:
        """Drop everything left of ``x``; a straddling triple becomes ``(x, end, val)``."""
        _cut_left(self._buf, self._state, self._stats, float(x))

    def cut_right(self, x: float) -> None:
        """Drop everything right of ``x``; an identity triple keeps ``val == end``."""
        _cut_right(self._buf, self._state, self._stats, float(x), self.identity)

    def peek_left(self) -> ReachTriple:
        return ReachTriple(*map(float, self._buf[self._state[0]]))

    def peek_right(self) -> ReachTriple:
        return ReachTriple(*map(float, self._buf[_tail(self._state, self._buf.shape[0])]))

    def clear(self) -> None:
        _clear(self._state, self._stats)

    def check(self) -> None:
        if len(self):
            first, last = self.peek_left(), self.peek_right()
            _check_deque(self._buf, self._state, self.identity, first.beg, last.end)

    def __len__(self) -> int:
        return int(self._state[1])

    def __iter__(self):
        return (ReachTriple(*map(float, row)) for row in self._rows())

    def __repr__(self) -> str:
        return f"ReachDeque({list(self)!r})"
