#!/usr/bin/env python3
"""Compare the compiled and pure-Python staircase kernels.

    python benchmarks/bench_engine.py [--sizes 1024,4096,16384] [--repeat 3]
"""
import argparse
import time

from greedy_geom.engine import BACKEND, InitialTree, fast_cost
from greedy_geom.experiments import family_sequence
from greedy_geom.patterns import mirror


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="1024,4096,16384")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if BACKEND != "compiled":
        raise SystemExit("compiled kernel not built; run `python setup.py build_ext --inplace`")

    print(f"{'family':<16}{'tree':<8}{'n':>7}{'cost':>10}{'pure s':>10}{'compiled s':>12}{'speedup':>9}")
    for family in ("preorder-random", "sequential", "uniform-random"):
        for n in (int(s) for s in args.sizes.split(",")):
            seq = family_sequence(family, n, args.seed)
            for name, init in (("flat", InitialTree.flat()), ("mirror", mirror(seq))):
                costs = {}

                def go(backend):
                    costs[backend] = fast_cost(seq, init, backend=backend)

                tp = best_of(lambda: go("pure"), args.repeat)
                tc = best_of(lambda: go("compiled"), args.repeat)
                assert costs["pure"] == costs["compiled"]
                print(f"{family:<16}{name:<8}{n:>7}{costs['pure']:>10}{tp:>10.4f}{tc:>12.4f}{tp / tc:>8.1f}x")


if __name__ == "__main__":
    main()
