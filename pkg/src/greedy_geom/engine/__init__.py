"""Greedy execution engines.

``greedy_run_fast`` uses the compiled staircase kernel when the extension is
built and falls back to the pure-Python kernel otherwise. Set
``GREEDY_GEOM_PURE=1`` to force the fallback.
"""
from __future__ import annotations

import os
from typing import Optional, Sequence

from greedy_geom.engine import _pure
from greedy_geom.engine.model import (
    ExecutionTrace,
    InitialTree,
    Step,
    TreeKind,
    check_permutation,
    check_sequence,
    cost,
    is_permutation,
    last_touch_init,
    touched_staircase,
)
from greedy_geom.engine.oracle import greedy_run_oracle

if os.environ.get("GREEDY_GEOM_PURE"):
    _kernel = None
else:
    try:
        from greedy_geom.engine import _kernel
    except ImportError:
        _kernel = None

BACKEND = "compiled" if _kernel is not None else "pure"

__all__ = [
    "BACKEND",
    "ExecutionTrace",
    "InitialTree",
    "Step",
    "TreeKind",
    "check_permutation",
    "check_sequence",
    "cost",
    "fast_cost",
    "greedy_run_fast",
    "greedy_run_oracle",
    "is_permutation",
    "last_touch_init",
    "touched_staircase",
]


def _kernel_for(backend: Optional[str]):
    if backend is None:
        backend = BACKEND
    if backend == "pure":
        return _pure
    if backend == "compiled":
        if _kernel is None:
            raise RuntimeError("compiled kernel not available; build the extension first")
        return _kernel
    raise ValueError(f"unknown backend {backend!r}")


def _run(seq, init, backend):
    seq = check_sequence(seq)
    init = init or InitialTree.flat()
    n = len(seq)
    last = last_touch_init(init, n)
    column = [_pure.NEG] * (n + 1)
    for k, t in last.items():
        column[k] = t
    offsets, touched = _kernel_for(backend).run_staircase(seq, column, n)
    return seq, offsets, touched


def greedy_run_fast(
    seq: Sequence[int],
    init: Optional[InitialTree] = None,
    backend: Optional[str] = None,
) -> ExecutionTrace:
    """Run Greedy with the staircase kernel in O((n + touches) log n)."""
    seq, offsets, touched = _run(seq, init, backend)
    touched = [int(k) for k in touched]
    offsets = [int(o) for o in offsets]
    steps = tuple(
        Step(x, tuple(touched[offsets[i]:offsets[i + 1]])) for i, x in enumerate(seq)
    )
    return ExecutionTrace(len(seq), steps)


def fast_cost(
    seq: Sequence[int],
    init: Optional[InitialTree] = None,
    backend: Optional[str] = None,
) -> int:
    """Greedy cost without materialising the per-step trace."""
    seq, offsets, _ = _run(seq, init, backend)
    return len(seq) + int(offsets[-1])
