from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from greedy_geom.geometry import Point


class TreeKind(enum.Enum):
    FLAT = "flat"
    PERMUTATION_ROWS = "permutation-rows"
    ARBITRARY_POINTS = "arbitrary-points"


def is_permutation(seq: Sequence[int]) -> bool:
    n = len(seq)
    return sorted(seq) == list(range(1, n + 1))


def check_sequence(seq: Sequence[int], universe: Optional[int] = None) -> tuple[int, ...]:
    """Validate an access sequence; keys must lie in ``[1, universe]``.

    ``universe`` defaults to ``len(seq)``.
    """
    seq = tuple(int(k) for k in seq)
    n = len(seq) if universe is None else universe
    for i, k in enumerate(seq, start=1):
        if not 1 <= k <= n:
            raise ValueError(f"key {k} at time {i} outside universe [1, {n}]")
    return seq


def check_permutation(seq: Sequence[int]) -> tuple[int, ...]:
    seq = tuple(int(k) for k in seq)
    if not is_permutation(seq):
        raise ValueError(f"not a permutation of 1..{len(seq)}: {seq[:20]}")
    return seq


@dataclass(frozen=True)
class InitialTree:
    """Point set at strictly negative times present before the first access.

    Build instances with :meth:`flat`, :meth:`permutation_rows` or
    :meth:`arbitrary`; those constructors enforce the kind invariants.
    """

    kind: TreeKind
    points: frozenset[Point] = frozenset()
    rows: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        for p in self.points:
            if p.time >= 0:
                raise ValueError(f"initial point {tuple(p)} must have negative time")
            if p.key < 1:
                raise ValueError(f"initial point {tuple(p)} has key < 1")

    @classmethod
    def flat(cls) -> "InitialTree":
        return cls(TreeKind.FLAT)

    @classmethod
    def permutation_rows(cls, rows: Sequence[int]) -> "InitialTree":
        """Permutation matrix with ``rows[i-1]`` placed at time ``-i``."""
        rows = tuple(int(k) for k in rows)
        if not is_permutation(rows):
            raise ValueError("permutation-rows tree needs one point per row and per key 1..n")
        pts = frozenset(Point(k, -i) for i, k in enumerate(rows, start=1))
        return cls(TreeKind.PERMUTATION_ROWS, pts, rows)

    @classmethod
    def arbitrary(cls, points: Iterable[Point]) -> "InitialTree":
        return cls(TreeKind.ARBITRARY_POINTS, frozenset(Point(*p) for p in points))

    @classmethod
    def from_points(cls, points: Iterable[Point]) -> "InitialTree":
        """Classify a raw point set: empty -> flat, permutation matrix on rows
        -1..-n -> permutation rows, anything else -> arbitrary."""
        pts = frozenset(Point(*p) for p in points)
        if not pts:
            return cls.flat()
        n = len(pts)
        by_row = {p.time: p.key for p in pts}
        if len(by_row) == n and set(by_row) == set(range(-n, 0)):
            rows = [by_row[-i] for i in range(1, n + 1)]
            if is_permutation(rows):
                return cls.permutation_rows(rows)
        return cls(TreeKind.ARBITRARY_POINTS, pts)

    def check_universe(self, n: int) -> None:
        for p in self.points:
            if p.key > n:
                raise ValueError(f"initial point {tuple(p)} outside universe [1, {n}]")


@dataclass(frozen=True)
class Step:
    accessed: int
    touched: tuple[int, ...]


@dataclass(frozen=True)
class ExecutionTrace:
    n: int
    steps: tuple[Step, ...]
    touched_total: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "touched_total", sum(len(s.touched) for s in self.steps))

    @property
    def cost(self) -> int:
        return self.n + self.touched_total

    def touch_points(self) -> list[Point]:
        return [Point(y, t) for t, s in enumerate(self.steps, start=1) for y in s.touched]

    def access_points(self) -> list[Point]:
        return [Point(s.accessed, t) for t, s in enumerate(self.steps, start=1)]


def cost(trace: ExecutionTrace) -> int:
    return trace.n + trace.touched_total


def last_touch_init(init: InitialTree, n: int) -> dict[int, int]:
    """Column maxima of the initial tree; keys without a point are absent."""
    init.check_universe(n)
    last: dict[int, int] = {}
    for p in init.points:
        if p.time > last.get(p.key, p.time - 1):
            last[p.key] = p.time
    return last


def touched_staircase(x: int, side: str, last_touch: Mapping[int, int]) -> list[int]:
    """Keys on one side of ``x`` that Greedy touches when ``x`` is accessed.

    Walking outward from ``x``, a key is touched iff its last-touch time is
    strictly greater than every last-touch time seen so far, the column of
    ``x`` included. Ties are not touched: the equal-time point lies on the
    closed rectangle's boundary. Linear scan; reference for the fast kernels.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    best = last_touch.get(x, float("-inf"))
    out = []
    if side == "left":
        lo = min(last_touch, default=x)
        for y in range(x - 1, lo - 1, -1):
            t = last_touch.get(y)
            if t is not None and t > best:
                out.append(y)
                best = t
        out.reverse()
    else:
        hi = max(last_touch, default=x)
        for y in range(x + 1, hi + 1):
            t = last_touch.get(y)
            if t is not None and t > best:
                out.append(y)
                best = t
    return out
