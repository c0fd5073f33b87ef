"""Definition-level Greedy: add corner points on the sweep line until every
rectangle between a line point and a point below the line is satisfied.

Slow (polynomial in the number of points per pass) and meant as a test oracle.
"""
from __future__ import annotations

import random
from typing import Optional, Sequence, Union

from greedy_geom.engine.model import ExecutionTrace, InitialTree, Step, check_sequence
from greedy_geom.geometry import ColumnIndex, Point

ScanOrder = Union[str, int]


def _ordered(pairs: list, order: ScanOrder, rng: Optional[random.Random]) -> list:
    if order == "forward":
        return pairs
    if order == "reverse":
        return pairs[::-1]
    rng.shuffle(pairs)
    return pairs


def greedy_run_oracle(
    seq: Sequence[int],
    init: Optional[InitialTree] = None,
    order: ScanOrder = "forward",
    *,
    prune: bool = False,
    return_points: bool = False,
):
    """Run Greedy by fixpoint iteration over all line/below-line pairs.

    ``order`` is ``"forward"``, ``"reverse"`` or an integer seed for a
    shuffled pair order per pass. ``prune`` skips below-line points that have
    a higher below-line point in their own column: that point lies on the
    rectangle's edge, so such pairs are always satisfied. With
    ``return_points`` the final point set is returned alongside the trace.
    """
    seq = check_sequence(seq)
    init = init or InitialTree.flat()
    n = len(seq)
    init.check_universe(n)
    rng = random.Random(order) if isinstance(order, int) else None
    if rng is None and order not in ("forward", "reverse"):
        raise ValueError(f"unknown scan order {order!r}")

    index = ColumnIndex(init.points)
    below: list[Point] = sorted(init.points, key=lambda p: (p.time, p.key))
    top: dict[int, int] = {}
    for p in below:
        top[p.key] = p.time
    steps = []
    for i, x in enumerate(seq, start=1):
        access = Point(x, i)
        line = [access]
        index.add(access)
        changed = True
        while changed:
            changed = False
            if prune:
                candidates = [Point(k, t) for k, t in sorted(top.items())]
            else:
                candidates = below
            pairs = [(p, q) for p in line for q in candidates if p.key != q.key]
            for p, q in _ordered(pairs, order, rng):
                if index.has_witness(p, q):
                    continue
                corner = Point(q.key, i)
                line.append(corner)
                index.add(corner)
                changed = True
        touched = tuple(sorted(p.key for p in line[1:]))
        steps.append(Step(x, touched))
        below.extend(line)
        for p in line:
            top[p.key] = i
    trace = ExecutionTrace(n, tuple(steps))
    if return_points:
        return trace, frozenset(below)
    return trace
