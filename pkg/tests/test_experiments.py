import pytest

from greedy_geom.engine import InitialTree
from greedy_geom.experiments import (
    CSV_HEADER,
    BudgetExceeded,
    LemmaCheckResult,
    ScalingRow,
    exhaustive_check,
    scaling_csv,
    scaling_study,
    scaling_summary,
    verify_corollary_initial,
    verify_lemma,
)
from greedy_geom.geometry import Point
from greedy_geom.patterns import mirror


def test_verify_lemma_213():
    res = verify_lemma((2, 1, 3))
    assert res.equal_traces and res.cost_flat == res.cost_mirror == 5
    assert res.first_divergence is None
    assert res.line() == "n=3 case=2,1,3 equal=true cost=5"


def test_verify_lemma_single():
    res = verify_lemma((1,), case=0)
    assert res.equal_traces and res.cost_flat == res.cost_mirror == 1


def test_verify_lemma_rejects_repeats():
    with pytest.raises(ValueError):
        verify_lemma((1, 1))


def test_unequal_line_format():
    res = LemmaCheckResult(3, "x", False, 5, 6, (2, (1,), (1, 3)))
    assert res.line() == "n=3 case=x equal=false cost=5/6"


def test_corollary_from_initial():
    assert verify_corollary_initial(mirror((2, 1, 3))).equal_traces
    res = verify_corollary_initial(InitialTree.permutation_rows((2, 3, 1)))
    assert res.equal_traces and res.preorder is False
    assert verify_corollary_initial(InitialTree.permutation_rows((3, 1, 2))).preorder is True


def test_corollary_rejects_other_kinds():
    with pytest.raises(ValueError):
        verify_corollary_initial(InitialTree.flat())
    with pytest.raises(ValueError):
        verify_corollary_initial(InitialTree.arbitrary([Point(1, -1)]))


@pytest.mark.parametrize("n,cases", [(1, 1), (3, 6), (5, 120)])
def test_exhaustive_small(n, cases):
    rep = exhaustive_check(n, random_rows=1)
    assert rep.cases == cases and rep.failures == 0
    assert rep.summary() == f"{cases} cases, 0 failures"


def test_exhaustive_seven():
    rep = exhaustive_check(7)
    assert rep.cases == 5040 and rep.failures == 0, rep.counterexamples


@pytest.mark.extended
def test_exhaustive_eight():
    rep = exhaustive_check(8)
    assert rep.cases == 40320 and rep.failures == 0, rep.counterexamples


@pytest.mark.parametrize("n", [0, 9])
def test_exhaustive_budget(n):
    with pytest.raises(BudgetExceeded):
        exhaustive_check(n)


def test_sequential_scaling_rows():
    rows = scaling_study("sequential", [100], 1, seed=0)
    assert [(r.initial_tree, r.cost) for r in rows] == [("flat", 199), ("mirror", 199)]
    assert rows[0].csv() == "sequential,100,0,flat,199,1.990000"


def test_scaling_seeds_and_order():
    rows = scaling_study("preorder-random", [16, 32], 3, seed=10)
    assert [(r.n, r.seed, r.initial_tree) for r in rows[:4]] == [
        (16, 10, "flat"), (16, 10, "mirror"), (16, 11, "flat"), (16, 11, "mirror")]
    assert len(rows) == 12
    for r in rows:
        assert r.n <= r.cost <= r.n + r.n * (r.n - 1)
    assert scaling_summary(rows)["flat_equals_mirror"]


def test_scaling_csv_header():
    text = scaling_csv(scaling_study("uniform-random", [8], 1))
    assert text.splitlines()[0] == CSV_HEADER == "family,n,seed,initial_tree,cost,cost_per_n"


def test_scaling_rejects_bad_args():
    with pytest.raises(ValueError):
        scaling_study("sequential", [], 1)
    with pytest.raises(ValueError):
        scaling_study("sequential", [4], 0)
    with pytest.raises(ValueError):
        scaling_study("zigzag", [4], 1)


def test_summary_flags_mismatch():
    rows = [ScalingRow("sequential", 4, 0, "flat", 7), ScalingRow("sequential", 4, 0, "mirror", 8)]
    summary = scaling_summary(rows)
    assert not summary["flat_equals_mirror"]
    assert summary["mismatches"] == [("sequential", 4, 0)]


def test_summary_statistics():
    rows = scaling_study("sequential", [64, 128, 256], 2)
    series = scaling_summary(rows)["series"]["sequential/mirror"]
    assert series["c_star"] == 127 / 64
    assert series["doubling_ratios"]["64->128"] == 255 / 127
    assert series["strictly_increasing"] and series["within_constant"]
