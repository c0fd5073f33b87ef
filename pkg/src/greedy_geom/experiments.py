"""Verification and measurement harness.

Compares Greedy under the flat tree and under the mirror tree, runs
exhaustive small-n oracle batteries, and measures cost growth on preorder,
sequential and uniform-random families.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from statistics import mean
from typing import Iterable, Optional, Sequence

from greedy_geom.engine import (
    InitialTree,
    TreeKind,
    check_permutation,
    fast_cost,
    greedy_run_fast,
    greedy_run_oracle,
)
from greedy_geom.geometry import pairs_satisfied_above
from greedy_geom.patterns import (
    avoids_231,
    avoids_231_bruteforce,
    mirror,
    mirror_inverse,
    random_permutation,
    random_preorder,
)

EXHAUSTIVE_MAX_N = 8
FAMILIES = ("preorder-random", "sequential", "uniform-random")
DOUBLING_RATIO_MAX = 2.2
CONSTANT_SLACK = Fraction(5, 4)


class BudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class LemmaCheckResult:
    n: int
    case: object
    equal_traces: bool
    cost_flat: int
    cost_mirror: int
    first_divergence: Optional[tuple[int, tuple[int, ...], tuple[int, ...]]] = None
    preorder: Optional[bool] = None

    def line(self) -> str:
        cost = (f"{self.cost_flat}" if self.cost_flat == self.cost_mirror
                else f"{self.cost_flat}/{self.cost_mirror}")
        return f"n={self.n} case={self.case} equal={str(self.equal_traces).lower()} cost={cost}"


def final_points(seq, init, trace):
    return set(init.points) | set(trace.access_points()) | set(trace.touch_points())


def verify_lemma(seq: Sequence[int], case: object = None) -> LemmaCheckResult:
    """Run Greedy on ``seq`` from the flat tree and from its mirror and
    compare the touched sets time by time."""
    seq = check_permutation(seq)
    flat = greedy_run_fast(seq, InitialTree.flat())
    mirrored = greedy_run_fast(seq, mirror(seq))
    divergence = None
    for t, (a, b) in enumerate(zip(flat.steps, mirrored.steps), start=1):
        if a.touched != b.touched:
            divergence = (t, a.touched, b.touched)
            break
    return LemmaCheckResult(
        n=len(seq),
        case=case if case is not None else ",".join(map(str, seq)),
        equal_traces=divergence is None,
        cost_flat=flat.cost,
        cost_mirror=mirrored.cost,
        first_divergence=divergence,
    )


def verify_corollary_initial(init: InitialTree, case: object = None) -> LemmaCheckResult:
    """Start from a permutation-rows tree, take the sequence it mirrors and
    check the lemma; also flag whether the rows form a preorder sequence."""
    if init.kind is not TreeKind.PERMUTATION_ROWS:
        raise ValueError(f"expected a permutation-rows tree, got {init.kind.value}")
    seq = mirror_inverse(init)
    res = verify_lemma(seq, case)
    return LemmaCheckResult(**{**res.__dict__, "preorder": avoids_231(seq).avoids})


@dataclass
class ExhaustiveReport:
    n: int
    cases: int = 0
    failures: int = 0
    by_check: dict[str, int] = field(default_factory=dict)
    counterexamples: list[tuple[str, tuple[int, ...], str]] = field(default_factory=list)

    def fail(self, check: str, seq, detail: str = "") -> None:
        self.by_check[check] = self.by_check.get(check, 0) + 1
        if len(self.counterexamples) < 10:
            self.counterexamples.append((check, tuple(seq), detail))

    def summary(self) -> str:
        return f"{self.cases} cases, {self.failures} failures"


def exhaustive_check(n: int, random_rows: int = 0, seed: int = 0) -> ExhaustiveReport:
    """All n! permutations: fast engine == oracle (flat, mirror and
    ``random_rows`` seeded random permutation-rows trees), lemma equality,
    post-run satisfaction and pattern-checker agreement."""
    if not 1 <= n <= EXHAUSTIVE_MAX_N:
        raise BudgetExceeded(f"exhaustive check supports 1 <= n <= {EXHAUSTIVE_MAX_N}, got {n}")
    rng = random.Random(seed)
    report = ExhaustiveReport(n)
    keys = list(range(1, n + 1))
    for perm in itertools.permutations(keys):
        report.cases += 1
        before = sum(report.by_check.values())
        inits = [InitialTree.flat(), mirror(perm)]
        inits += [InitialTree.permutation_rows(rng.sample(keys, n)) for _ in range(random_rows)]
        for init in inits:
            fast = greedy_run_fast(perm, init)
            if fast != greedy_run_oracle(perm, init):
                report.fail("engine", perm, init.kind.value + (f" rows={init.rows}" if init.rows else ""))
            if not pairs_satisfied_above(final_points(perm, init, fast), 1):
                report.fail("satisfied", perm, init.kind.value)
        lemma = verify_lemma(perm)
        if not lemma.equal_traces:
            report.fail("lemma", perm, str(lemma.first_divergence))
        if avoids_231(perm).avoids != avoids_231_bruteforce(perm).avoids:
            report.fail("pattern", perm)
        if sum(report.by_check.values()) > before:
            report.failures += 1
    return report


@dataclass(frozen=True)
class ScalingRow:
    family: str
    n: int
    seed: int
    initial_tree: str
    cost: int

    @property
    def cost_per_n(self) -> Fraction:
        return Fraction(self.cost, self.n)

    def csv(self) -> str:
        return f"{self.family},{self.n},{self.seed},{self.initial_tree},{self.cost},{float(self.cost_per_n):.6f}"


CSV_HEADER = "family,n,seed,initial_tree,cost,cost_per_n"


def family_sequence(family: str, n: int, seed: int) -> tuple[int, ...]:
    if family == "preorder-random":
        return random_preorder(n, seed)
    if family == "sequential":
        return tuple(range(1, n + 1))
    if family == "uniform-random":
        return random_permutation(n, seed)
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def scaling_study(family: str, sizes: Iterable[int], trials: int, seed: int = 0) -> list[ScalingRow]:
    """Greedy cost under flat and mirror trees for ``trials`` sequences per
    size; trial ``t`` uses seed ``seed + t``. Rows come out in (size, trial,
    flat-then-mirror) order."""
    sizes = list(sizes)
    if not sizes:
        raise ValueError("sizes must be nonempty")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rows = []
    for n in sizes:
        for t in range(trials):
            s = seed + t
            seq = family_sequence(family, n, s)
            rows.append(ScalingRow(family, n, s, "flat", fast_cost(seq, InitialTree.flat())))
            rows.append(ScalingRow(family, n, s, "mirror", fast_cost(seq, mirror(seq))))
    return rows


def scaling_csv(rows: Iterable[ScalingRow]) -> str:
    return CSV_HEADER + "\n" + "".join(r.csv() + "\n" for r in rows)


def scaling_summary(rows: Sequence[ScalingRow]) -> dict:
    """Per-(family, tree) mean cost/n by size, doubling ratios of mean cost,
    and the empirical constant c* (mean cost/n at the smallest size)."""
    by_pair = {(a.family, a.n, a.seed): a.cost for a in rows if a.initial_tree == "flat"}
    mismatches = [
        (r.family, r.n, r.seed) for r in rows
        if r.initial_tree == "mirror" and by_pair.get((r.family, r.n, r.seed)) != r.cost
    ]
    out = {"flat_equals_mirror": not mismatches, "mismatches": mismatches,
           "thresholds": {"doubling_ratio_max": DOUBLING_RATIO_MAX,
                          "constant_slack": float(CONSTANT_SLACK)},
           "series": {}}
    groups: dict[tuple[str, str], dict[int, list[int]]] = {}
    for r in rows:
        groups.setdefault((r.family, r.initial_tree), {}).setdefault(r.n, []).append(r.cost)
    for (family, tree), by_n in sorted(groups.items()):
        sizes = sorted(by_n)
        mean_cost = {n: mean(by_n[n]) for n in sizes}
        per_n = {n: mean_cost[n] / n for n in sizes}
        ratios = {f"{a}->{b}": mean_cost[b] / mean_cost[a]
                  for a, b in zip(sizes, sizes[1:]) if b == 2 * a}
        c_star = per_n[sizes[0]]
        out["series"][f"{family}/{tree}"] = {
            "mean_cost_per_n": per_n,
            "doubling_ratios": ratios,
            "max_doubling_ratio": max(ratios.values(), default=None),
            "c_star": c_star,
            "within_constant": all(v <= c_star * float(CONSTANT_SLACK) for v in per_n.values()),
            "strictly_increasing": all(per_n[a] < per_n[b] for a, b in zip(sizes, sizes[1:])),
        }
    return out
