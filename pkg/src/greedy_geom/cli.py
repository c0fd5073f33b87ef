"""Command-line interface.

Exit status: 0 success, 1 invariant or claim violation, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import itertools
import json
import os
import re
import sys

from greedy_geom import experiments
from greedy_geom.engine import InitialTree, TreeKind, greedy_run_fast, greedy_run_oracle
from greedy_geom.formats import (
    FormatError,
    atomic_write,
    format_sequence,
    format_trace,
    parse_points,
    parse_sequence,
)
from greedy_geom.patterns import (
    avoids_231,
    bst_from_insertions,
    bst_to_initial_points,
    mirror,
    random_permutation,
)
from greedy_geom.render import render_svg

DEFAULT_SEED = 0


class UsageError(Exception):
    pass


class ClaimViolation(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def load_sequence(spec: str, permutation: bool = True) -> tuple[int, ...]:
    """``spec`` is a file path or an inline list such as ``2,1,3``."""
    if spec is None:
        raise UsageError("--seq is required")
    if os.path.exists(spec):
        text = _read(spec)
    else:
        if not re.fullmatch(r"[\s(\[]*\d+([\s,]+\d+)*[\s)\]]*", spec):
            raise UsageError(f"--seq {spec!r} is neither a file nor an inline integer list")
        text = "\n".join(re.findall(r"\d+", spec))
    return parse_sequence(text, permutation=permutation)


def load_rows_tree(path: str) -> InitialTree:
    """A point-set file (``key time`` lines) or a sequence file of row keys."""
    text = _read(path)
    body = [line for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    if any(len(line.split()) == 2 for line in body):
        init = InitialTree.from_points(parse_points(text))
    else:
        init = InitialTree.permutation_rows(parse_sequence(text))
    if init.kind is not TreeKind.PERMUTATION_ROWS:
        raise UsageError(f"{path} is not a permutation-rows initial tree")
    return init


def load_initial(spec: str, seq: tuple[int, ...]) -> InitialTree:
    n = len(seq)
    if spec == "flat":
        init = InitialTree.flat()
    elif spec == "mirror":
        if sorted(seq) != list(range(1, n + 1)):
            raise UsageError("--initial mirror needs a permutation sequence")
        init = mirror(seq)
    elif spec.startswith("rows:"):
        init = load_rows_tree(spec[5:])
    elif spec.startswith("bst:"):
        init = bst_to_initial_points(bst_from_insertions(parse_sequence(_read(spec[4:]))))
    else:
        raise UsageError(f"unknown --initial {spec!r}; use flat, mirror, rows:PATH or bst:PATH")
    try:
        init.check_universe(n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return init


def parse_sizes(spec: str) -> list[int]:
    """Comma list (``1024,2048``) or doubling range (``1024..65536``)."""
    try:
        if ".." in spec:
            lo, hi = (int(x) for x in spec.split(".."))
            if lo < 1 or hi < lo:
                raise ValueError
            sizes = []
            while lo <= hi:
                sizes.append(lo)
                lo *= 2
            return sizes
        sizes = [int(x) for x in spec.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad --sizes {spec!r}") from None
    if not sizes or min(sizes) < 1:
        raise UsageError(f"bad --sizes {spec!r}")
    return sizes


def emit(text: str, out: str | None) -> None:
    if out:
        atomic_write(out, text)
    else:
        sys.stdout.write(text)


def _check_trace(trace) -> None:
    for t, step in enumerate(trace.steps, start=1):
        if step.accessed in step.touched:
            raise ClaimViolation(f"time {t}: accessed key {step.accessed} reported as touched")
        if list(step.touched) != sorted(set(step.touched)):
            raise ClaimViolation(f"time {t}: touched keys not strictly ascending")


def cmd_run(args) -> int:
    seq = load_sequence(args.seq, permutation=False)
    init = load_initial(args.initial, seq)
    run = greedy_run_oracle if args.engine == "oracle" else greedy_run_fast
    trace = run(seq, init)
    _check_trace(trace)
    text = format_trace(trace)
    emit(text, args.out)
    if args.out:
        print(text.splitlines()[0])
    return 0


def cmd_render(args) -> int:
    seq = load_sequence(args.seq, permutation=False)
    init = load_initial(args.initial, seq)
    trace = greedy_run_fast(seq, init)
    _check_trace(trace)
    emit(render_svg(trace, init), args.out)
    return 0


def cmd_gen(args) -> int:
    if args.n is None or args.n < 1:
        raise UsageError("gen needs --n >= 1")
    seq = experiments.family_sequence(args.family, args.n, args.seed)
    header = f"# family={args.family} n={args.n} seed={args.seed}\n"
    emit(header + format_sequence(seq), args.out)
    return 0


def cmd_check_preorder(args) -> int:
    report = avoids_231(load_sequence(args.seq))
    if report.avoids:
        print("avoids (2,3,1)")
        return 0
    print(f"contains (2,3,1) at indices ({','.join(map(str, report.witness))})")
    return 1


def cmd_verify_lemma(args) -> int:
    results = []
    if args.exhaustive is not None:
        if not 1 <= args.exhaustive <= experiments.EXHAUSTIVE_MAX_N:
            raise UsageError(f"--exhaustive must be in 1..{experiments.EXHAUSTIVE_MAX_N}")
        keys = range(1, args.exhaustive + 1)
        for i, perm in enumerate(itertools.permutations(keys)):
            results.append(experiments.verify_lemma(perm, case=i))
    elif args.trials is not None:
        if args.n is None or args.n < 1:
            raise UsageError("--trials needs --n >= 1")
        for t in range(args.trials):
            s = args.seed + t
            results.append(experiments.verify_lemma(random_permutation(args.n, s), case=f"seed{s}"))
    elif args.initial and args.initial.startswith("rows:"):
        res = experiments.verify_corollary_initial(load_rows_tree(args.initial[5:]))
        results.append(res)
        print(f"preorder={str(res.preorder).lower()}")
    else:
        results.append(experiments.verify_lemma(load_sequence(args.seq)))
    lines = [r.line() for r in results]
    failures = sum(not r.equal_traces for r in results)
    lines.append(f"{len(results)} cases, {failures} failures")
    emit("\n".join(lines) + "\n", args.out)
    if args.out:
        print(lines[-1])
    return 1 if failures else 0


def cmd_exhaustive(args) -> int:
    try:
        report = experiments.exhaustive_check(args.n, random_rows=args.random_rows, seed=args.seed)
    except experiments.BudgetExceeded as exc:
        raise UsageError(str(exc)) from None
    print(f"n={report.n} {report.summary()}")
    for check, seq, detail in report.counterexamples:
        print(f"  {check}: {','.join(map(str, seq))} {detail}")
    return 1 if report.failures else 0


def cmd_scaling(args) -> int:
    sizes = parse_sizes(args.sizes)
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    rows = experiments.scaling_study(args.family, sizes, args.trials, args.seed)
    emit(experiments.scaling_csv(rows), args.out)
    summary = experiments.scaling_summary(rows)
    summary["arguments"] = {"family": args.family, "sizes": sizes,
                            "trials": args.trials, "seed": args.seed}
    if args.report:
        atomic_write(args.report, json.dumps(summary, indent=2, sort_keys=True) + "\n")
    for name, series in sorted(summary["series"].items()):
        print(f"{name}: c*={series['c_star']:.6f} max_doubling_ratio="
              f"{series['max_doubling_ratio'] if series['max_doubling_ratio'] is None else round(series['max_doubling_ratio'], 6)}",
              file=sys.stderr)
    if not summary["flat_equals_mirror"]:
        print(f"flat and mirror costs differ: {summary['mismatches'][:5]}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="greedy-geom",
        description="Greedy BST execution in the geometric model.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, seq=True, initial=True):
        if seq:
            p.add_argument("--seq", help="sequence file or inline list, e.g. 2,1,3")
        if initial:
            p.add_argument("--initial", default="flat",
                           help="flat | mirror | rows:PATH | bst:PATH (default flat)")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="default 0")
        p.add_argument("--out", help="output path (default stdout)")

    p = sub.add_parser("run", help="run Greedy and print the trace")
    common(p)
    p.add_argument("--engine", choices=("fast", "oracle"), default="fast")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("render", help="render an execution as SVG")
    common(p)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser(
        "gen", help="generate a sequence",
        description="Generate a sequence. preorder-random is the preorder of a BST built "
                    "from a uniform random permutation; it is not uniform over "
                    "(2,3,1)-avoiding permutations.")
    common(p, seq=False, initial=False)
    p.add_argument("--family", choices=experiments.FAMILIES, default="preorder-random")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check-preorder", help="exit 0 iff the sequence avoids (2,3,1)")
    common(p, initial=False)
    p.set_defaults(func=cmd_check_preorder)

    p = sub.add_parser("verify-lemma", help="compare flat and mirror executions")
    common(p)
    p.add_argument("--exhaustive", type=int, metavar="N", help="all permutations of 1..N")
    p.add_argument("--trials", type=int, help="random permutations of size --n")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_verify_lemma)

    p = sub.add_parser("exhaustive", help="small-n oracle battery over all permutations")
    common(p, seq=False, initial=False)
    p.add_argument("n", type=int)
    p.add_argument("--random-rows", type=int, default=0,
                   help="extra random permutation-rows trees per case")
    p.set_defaults(func=cmd_exhaustive)

    p = sub.add_parser(
        "scaling", help="cost scaling study (CSV)",
        description="Cost scaling study. preorder-random sequences are not uniform over "
                    "(2,3,1)-avoiders; uniform-random is a non-preorder control.")
    common(p, seq=False, initial=False)
    p.add_argument("--family", choices=experiments.FAMILIES, default="preorder-random")
    p.add_argument("--sizes", default="1024..65536", help="comma list or LO..HI doubling range")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--report", help="write summary JSON (thresholds, c*, ratios) here")
    p.set_defaults(func=cmd_scaling)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ClaimViolation as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
