"""Permutation and BST utilities: (2,3,1)-avoidance, preorder sequences,
mirror initial trees and BST point encodings."""
from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

from greedy_geom.engine.model import InitialTree, TreeKind, check_permutation
from greedy_geom.geometry import Point


@dataclass(frozen=True)
class PatternReport:
    avoids: bool
    witness: Optional[tuple[int, int, int]] = None  # 1-based indices i1 < i2 < i3

    def __bool__(self):
        return self.avoids


def avoids_231(seq: Sequence[int]) -> PatternReport:
    """Single left-to-right pass with a decreasing stack.

    When a larger value pops smaller ones, the largest popped value becomes a
    floor: any later value below it completes a (2,3,1) occurrence.
    """
    seq = check_permutation(seq)
    stack: list[int] = []  # indices, values decreasing bottom to top
    floor = None  # (index of the "2", index of the "3" that popped it)
    for k, v in enumerate(seq):
        if floor is not None and v < seq[floor[0]]:
            return PatternReport(False, (floor[0] + 1, floor[1] + 1, k + 1))
        while stack and seq[stack[-1]] < v:
            floor = (stack.pop(), k)
        stack.append(k)
    return PatternReport(True)


def avoids_231_bruteforce(seq: Sequence[int]) -> PatternReport:
    """Cubic scan over all index triples (test oracle)."""
    seq = check_permutation(seq)
    for i, j, k in itertools.combinations(range(len(seq)), 3):
        if seq[k] < seq[i] < seq[j]:
            return PatternReport(False, (i + 1, j + 1, k + 1))
    return PatternReport(True)


@dataclass
class Bst:
    """Binary search tree as child maps keyed by node key."""

    root: Optional[int] = None
    left: dict[int, int] = field(default_factory=dict)
    right: dict[int, int] = field(default_factory=dict)

    def keys(self) -> list[int]:
        """In-order key list."""
        out, stack, node = [], [], self.root
        while stack or node is not None:
            while node is not None:
                stack.append(node)
                node = self.left.get(node)
            node = stack.pop()
            out.append(node)
            node = self.right.get(node)
        return out

    def depths(self) -> dict[int, int]:
        if self.root is None:
            return {}
        depth = {self.root: 0}
        queue = deque([self.root])
        while queue:
            u = queue.popleft()
            for child in (self.left.get(u), self.right.get(u)):
                if child is not None:
                    depth[child] = depth[u] + 1
                    queue.append(child)
        return depth

    def is_valid(self) -> bool:
        keys = self.keys()
        return len(keys) == len(set(keys)) and all(a < b for a, b in zip(keys, keys[1:]))


def bst_from_insertions(perm: Sequence[int]) -> Bst:
    """BST produced by inserting ``perm`` in order into an empty tree.

    Built in linear time as the Cartesian tree over keys 1..n with insertion
    position as priority: each subtree's root is its earliest-inserted key.
    """
    perm = check_permutation(perm)
    n = len(perm)
    tree = Bst()
    if n == 0:
        return tree
    pos = [0] * (n + 1)
    for i, k in enumerate(perm):
        pos[k] = i
    stack: list[int] = []
    for k in range(1, n + 1):
        last = None
        while stack and pos[stack[-1]] > pos[k]:
            last = stack.pop()
        if last is not None:
            tree.left[k] = last
        if stack:
            tree.right[stack[-1]] = k
        stack.append(k)
    tree.root = stack[0]
    return tree


def preorder_of(tree: Bst) -> tuple[int, ...]:
    out = []
    stack = [tree.root] if tree.root is not None else []
    while stack:
        u = stack.pop()
        out.append(u)
        r, l = tree.right.get(u), tree.left.get(u)
        if r is not None:
            stack.append(r)
        if l is not None:
            stack.append(l)
    return tuple(out)


def random_permutation(n: int, seed: int) -> tuple[int, ...]:
    perm = list(range(1, n + 1))
    random.Random(seed).shuffle(perm)
    return tuple(perm)


def random_preorder(n: int, seed: int) -> tuple[int, ...]:
    """Preorder of the BST built from a seeded uniform random permutation.

    Not uniform over (2,3,1)-avoiding permutations: shapes follow the random
    BST distribution.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return preorder_of(bst_from_insertions(random_permutation(n, seed)))


def mirror(seq: Sequence[int]) -> InitialTree:
    """Reflect the access points across the time axis: key ``s_i`` sits at
    time ``-i``."""
    return InitialTree.permutation_rows(check_permutation(seq))


def mirror_inverse(init: InitialTree) -> tuple[int, ...]:
    if init.kind is not TreeKind.PERMUTATION_ROWS:
        raise ValueError(f"mirror_inverse needs a permutation-rows tree, got {init.kind.value}")
    return init.rows


def bst_to_initial_points(tree: Bst) -> InitialTree:
    """Encode a BST as initial points: a node at depth d sits at time -(d+1)."""
    return InitialTree.arbitrary(Point(k, -(d + 1)) for k, d in tree.depths().items())
