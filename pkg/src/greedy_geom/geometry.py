"""Integer point-plane primitives and arboral satisfaction checks.

A point is ``(key, time)``. Rectangles are closed: a third point lying on the
boundary of the rectangle spanned by ``p`` and ``q`` satisfies it.
"""
from __future__ import annotations

from bisect import bisect_left
from collections import defaultdict
from typing import Iterable, NamedTuple

import numpy as np


class Point(NamedTuple):
    key: int
    time: int


NEG_INF = float("-inf")

# Above this many compressed grid cells the prefix-count table is skipped.
_GRID_CELL_LIMIT = 20_000_000


def _check_proper(p: Point, q: Point) -> None:
    if p.key == q.key or p.time == q.time:
        raise ValueError(f"degenerate pair {tuple(p)}, {tuple(q)}: shares a key or a time")


def rect_satisfied(p: Point, q: Point, points: Iterable[Point]) -> bool:
    """True iff some point other than ``p`` and ``q`` lies in the closed
    rectangle spanned by them."""
    _check_proper(p, q)
    lo_k, hi_k = min(p.key, q.key), max(p.key, q.key)
    lo_t, hi_t = min(p.time, q.time), max(p.time, q.time)
    for r in points:
        if r == p or r == q:
            continue
        if lo_k <= r.key <= hi_k and lo_t <= r.time <= hi_t:
            return True
    return False


class ColumnIndex:
    """Points bucketed by key, each column kept as a sorted list of times.

    Supports closed-rectangle witness queries in O(width * log height).
    """

    def __init__(self, points: Iterable[Point] = ()):
        self._cols: dict[int, list[int]] = defaultdict(list)
        for p in points:
            self.add(p)

    def add(self, p: Point) -> None:
        col = self._cols[p.key]
        i = bisect_left(col, p.time)
        if i < len(col) and col[i] == p.time:
            return
        col.insert(i, p.time)

    def __contains__(self, p: Point) -> bool:
        col = self._cols.get(p.key)
        if not col:
            return False
        i = bisect_left(col, p.time)
        return i < len(col) and col[i] == p.time

    def _column_hit(self, key: int, lo_t: int, hi_t: int, skip: int | None) -> bool:
        # Any time in [lo_t, hi_t] in this column other than ``skip``.
        col = self._cols.get(key)
        if not col:
            return False
        i = bisect_left(col, lo_t)
        if i < len(col) and col[i] == skip:
            i += 1
        return i < len(col) and col[i] <= hi_t

    def has_witness(self, p: Point, q: Point) -> bool:
        """Closed rectangle of ``p`` and ``q`` holds a third point.

        Endpoint columns are probed first, then the columns strictly between,
        walking away from the lower endpoint.
        """
        _check_proper(p, q)
        lo, hi = (p, q) if p.time < q.time else (q, p)
        if self._column_hit(lo.key, lo.time, hi.time, lo.time):
            return True
        if self._column_hit(hi.key, lo.time, hi.time, hi.time):
            return True
        step = 1 if hi.key > lo.key else -1
        for key in range(lo.key + step, hi.key, step):
            if self._column_hit(key, lo.time, hi.time, None):
                return True
        return False


def _pairs_ok_grid(keys: np.ndarray, times: np.ndarray, cutoff: float) -> bool:
    # Closed-rectangle point counts from a 2-D prefix sum over compressed ranks;
    # a non-degenerate pair is satisfied iff its rectangle holds >= 3 points.
    ukeys, kr = np.unique(keys, return_inverse=True)
    utimes, tr = np.unique(times, return_inverse=True)
    grid = np.zeros((len(ukeys) + 1, len(utimes) + 1), dtype=np.int32)
    np.add.at(grid, (kr + 1, tr + 1), 1)
    pref = grid.cumsum(axis=0).cumsum(axis=1)

    high = np.nonzero(times >= cutoff)[0]
    chunk = max(1, 4_000_000 // max(1, len(keys)))
    for start in range(0, len(high), chunk):
        h = high[start:start + chunk]
        hk, ht = kr[h][:, None], tr[h][:, None]
        lo_k = np.minimum(hk, kr[None, :])
        hi_k = np.maximum(hk, kr[None, :])
        lo_t = np.minimum(ht, tr[None, :])
        hi_t = np.maximum(ht, tr[None, :])
        count = (pref[hi_k + 1, hi_t + 1] - pref[lo_k, hi_t + 1]
                 - pref[hi_k + 1, lo_t] + pref[lo_k, lo_t])
        proper = (hk != kr[None, :]) & (ht != tr[None, :])
        if np.any(proper & (count < 3)):
            return False
    return True


def pairs_satisfied_above(points: Iterable[Point], cutoff: float) -> bool:
    """True iff every non-degenerate pair whose later point has time >= cutoff
    is arborally satisfied within ``points``."""
    pts = list(dict.fromkeys(points))
    if len(pts) < 2:
        return True
    keys = np.fromiter((p.key for p in pts), dtype=np.int64, count=len(pts))
    times = np.fromiter((p.time for p in pts), dtype=np.int64, count=len(pts))
    cells = len(np.unique(keys)) * len(np.unique(times))
    if cells <= _GRID_CELL_LIMIT:
        return _pairs_ok_grid(keys, times, cutoff)

    index = ColumnIndex(pts)
    for p in pts:
        if p.time < cutoff:
            continue
        for q in pts:
            if q.time < p.time and q.key != p.key and not index.has_witness(p, q):
                return False
    return True


def is_arborally_satisfied_set(points: Iterable[Point]) -> bool:
    return pairs_satisfied_above(points, NEG_INF)
