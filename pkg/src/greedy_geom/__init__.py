"""Greedy BST execution in the geometric (arborally satisfied set) model."""
from greedy_geom.engine import (
    BACKEND,
    ExecutionTrace,
    InitialTree,
    Step,
    TreeKind,
    cost,
    fast_cost,
    greedy_run_fast,
    greedy_run_oracle,
    last_touch_init,
    touched_staircase,
)
from greedy_geom.geometry import (
    Point,
    is_arborally_satisfied_set,
    pairs_satisfied_above,
    rect_satisfied,
)

__version__ = "0.1.0"
