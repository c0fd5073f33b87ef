"""Text formats for point sets, sequences and traces, plus atomic writes."""
from __future__ import annotations

import os
import tempfile
from typing import Iterable

from greedy_geom.engine.model import ExecutionTrace, Step, check_permutation
from greedy_geom.geometry import Point


class FormatError(ValueError):
    pass


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def parse_points(text: str) -> list[Point]:
    """One ``key time`` pair per line; ``#`` lines are comments."""
    points = []
    seen = set()
    for lineno, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'key time', got {line!r}")
        try:
            p = Point(int(parts[0]), int(parts[1]))
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer coordinate in {line!r}") from None
        if p.key < 1:
            raise FormatError(f"line {lineno}: key must be >= 1")
        if p.time == 0:
            raise FormatError(f"line {lineno}: time 0 is not allowed")
        if p in seen:
            raise FormatError(f"line {lineno}: duplicate point {tuple(p)}")
        seen.add(p)
        points.append(p)
    return points


def format_points(points: Iterable[Point]) -> str:
    return "".join(f"{p.key} {p.time}\n" for p in sorted(points, key=lambda p: (-p.time, p.key)))


def parse_sequence(text: str, permutation: bool = True) -> tuple[int, ...]:
    """One integer per line; ``#`` lines are comments."""
    seq = []
    for lineno, line in _content_lines(text):
        try:
            seq.append(int(line))
        except ValueError:
            raise FormatError(f"line {lineno}: not an integer: {line!r}") from None
    if not seq:
        raise FormatError("empty sequence")
    if permutation:
        try:
            return check_permutation(seq)
        except ValueError as exc:
            raise FormatError(str(exc)) from None
    n = len(seq)
    bad = [k for k in seq if not 1 <= k <= n]
    if bad:
        raise FormatError(f"key {bad[0]} outside [1, {n}]")
    return tuple(seq)


def format_sequence(seq: Iterable[int]) -> str:
    return "".join(f"{k}\n" for k in seq)


def format_trace(trace: ExecutionTrace) -> str:
    lines = [f"n={trace.n} touched={trace.touched_total} cost={trace.cost}"]
    for t, step in enumerate(trace.steps, start=1):
        lines.append(f"{t}\t{step.accessed}\t{','.join(map(str, step.touched))}")
    return "\n".join(lines) + "\n"


def parse_trace(text: str) -> ExecutionTrace:
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty trace")
    try:
        header = dict(field.split("=", 1) for field in lines[0].split())
        n, touched, cost = int(header["n"]), int(header["touched"]), int(header["cost"])
    except (KeyError, ValueError):
        raise FormatError(f"bad trace header {lines[0]!r}") from None
    steps = []
    for t, line in enumerate(lines[1:], start=1):
        parts = line.split("\t")
        if len(parts) != 3 or int(parts[0]) != t:
            raise FormatError(f"bad trace line {t}: {line!r}")
        keys = tuple(int(k) for k in parts[2].split(",")) if parts[2] else ()
        steps.append(Step(int(parts[1]), keys))
    trace = ExecutionTrace(n, tuple(steps))
    if len(steps) != n or trace.touched_total != touched or trace.cost != cost:
        raise FormatError("trace header disagrees with body")
    return trace


def atomic_write(path: str, text: str) -> None:
    """Write via a temp file in the target directory and rename into place."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
