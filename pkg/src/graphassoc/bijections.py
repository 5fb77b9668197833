"""Permutations, ordered partitions and planar trees as tubings of complete and path graphs.

Conventions:

* a permutation is the tuple of images ``(s(1), ..., s(n))``; node ``i`` sits in tube ``s(i)``
  counted from the innermost, so the proper tubes are ``{i : s(i) <= j}`` for ``j < n``;
* an ordered partition is a tuple of disjoint blocks, innermost first;
* a planar tree has leaves ``0..n`` left to right and every internal node has at least two
  children. The internal node spanning leaves ``a..b`` becomes the path tube ``{a+1..b}``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

from .graph_core import (
    GraphAssocError,
    GraphFamily,
    GraphMismatch,
    Tubing,
    build_graph,
    mask_of,
    nodes_of,
    popcount,
)

Permutation = tuple
OrderedPartition = tuple


def check_permutation(perm: Sequence[int]) -> Permutation:
    perm = tuple(perm)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise GraphAssocError(f"not a permutation: {perm}")
    return perm


def check_partition(blocks) -> OrderedPartition:
    blocks = tuple(frozenset(b) for b in blocks)
    if any(not b for b in blocks):
        raise GraphAssocError("ordered partition has an empty block")
    seen = [x for b in blocks for x in b]
    if sorted(seen) != list(range(1, len(seen) + 1)):
        raise GraphAssocError("blocks must be disjoint and cover 1..n")
    return blocks


def permutations(n: int) -> Iterator[Permutation]:
    return itertools.permutations(range(1, n + 1))


def perm_inverse(perm: Permutation) -> Permutation:
    inv = [0] * len(perm)
    for i, v in enumerate(perm, 1):
        inv[v - 1] = i
    return tuple(inv)


def perm_to_partition(perm: Permutation) -> OrderedPartition:
    return tuple(frozenset([i]) for i in perm_inverse(perm))


def partition_to_function(blocks: OrderedPartition) -> tuple[int, ...]:
    """``u(i)`` = index of the block holding ``i``."""
    n = sum(len(b) for b in blocks)
    u = [0] * n
    for k, b in enumerate(blocks, 1):
        for i in b:
            u[i - 1] = k
    return tuple(u)


def function_to_partition(u: Sequence[int]) -> OrderedPartition:
    m = max(u, default=0)
    blocks = [set() for _ in range(m)]
    for i, k in enumerate(u, 1):
        blocks[k - 1].add(i)
    return check_partition(blocks)


def ordered_partitions(n: int) -> Iterator[OrderedPartition]:
    """Every ordered set partition of ``[n]`` (surjections onto ``[m]``)."""
    for m in range(1, n + 1) if n else [0]:
        for u in itertools.product(range(1, m + 1), repeat=n):
            if len(set(u)) == m:
                yield function_to_partition(u)


# ---------------------------------------------------------------------------
# complete graph: the map f


def perm_to_tubing(perm: Sequence[int]) -> Tubing:
    perm = check_permutation(perm)
    n = len(perm)
    tubes = [mask_of(i for i, v in enumerate(perm, 1) if v <= j) for j in range(1, n)]
    return Tubing(build_graph(GraphFamily.COMPLETE, n), tuple(tubes))


def partition_to_tubing(blocks) -> Tubing:
    blocks = check_partition(blocks)
    n = sum(len(b) for b in blocks)
    tubes, acc = [], 0
    for b in blocks[:-1]:
        acc |= mask_of(b)
        tubes.append(acc)
    return Tubing(build_graph(GraphFamily.COMPLETE, n), tuple(tubes))


def _complete_chain(t: Tubing) -> list[int]:
    if t.graph != build_graph(GraphFamily.COMPLETE, t.n):
        raise GraphMismatch("expected a tubing of a complete graph")
    return sorted(t.tubes, key=popcount)


def tubing_to_partition(t: Tubing) -> OrderedPartition:
    blocks, prev = [], 0
    for tube in _complete_chain(t) + [t.graph.full]:
        blocks.append(frozenset(nodes_of(tube & ~prev)))
        prev = tube
    return tuple(blocks)


def tubing_to_perm(t: Tubing) -> Permutation:
    if not t.is_vertex:
        raise GraphAssocError("only vertices of the permutohedron correspond to permutations")
    return partition_to_function(tubing_to_partition(t))


# ---------------------------------------------------------------------------
# planar trees and the map g


@dataclass(frozen=True)
class PlanarTree:
    children: tuple = ()

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @cached_property
    def leaf_count(self) -> int:
        if not self.children:
            return 1
        return sum(c.leaf_count for c in self.children)

    @cached_property
    def internal_count(self) -> int:
        if not self.children:
            return 0
        return 1 + sum(c.internal_count for c in self.children)

    @cached_property
    def is_binary(self) -> bool:
        if not self.children:
            return True
        return len(self.children) == 2 and all(c.is_binary for c in self.children)

    @property
    def degree(self) -> int:
        """Number of nodes of the matching path graph (leaves minus one)."""
        return self.leaf_count - 1

    def __str__(self):
        return format_tree(self)


LEAF = PlanarTree()


def node(*children: PlanarTree) -> PlanarTree:
    if len(children) < 2:
        raise GraphAssocError("internal nodes need at least two children")
    return PlanarTree(tuple(children))


def format_tree(t: PlanarTree) -> str:
    """Balanced parentheses: a leaf is ``()``, an internal node wraps its children."""
    if t.is_leaf:
        return "()"
    return "(" + "".join(format_tree(c) for c in t.children) + ")"


def parse_tree(text: str) -> PlanarTree:
    text = re.sub(r"\s+", "", text)
    stack: list[list] = []
    root = None
    for i, ch in enumerate(text):
        if ch == "(":
            stack.append([])
        elif ch == ")":
            if not stack:
                raise GraphAssocError(f"unbalanced tree text at position {i}")
            kids = stack.pop()
            if len(kids) == 1:
                raise GraphAssocError("internal nodes need at least two children")
            t = PlanarTree(tuple(kids))
            if stack:
                stack[-1].append(t)
            elif root is None and i == len(text) - 1:
                root = t
            else:
                raise GraphAssocError("trailing text after tree")
        else:
            raise GraphAssocError(f"unexpected character {ch!r} in tree text")
    if stack or root is None:
        raise GraphAssocError("unbalanced tree text")
    return root


def tree_to_tubing(t: PlanarTree) -> Tubing:
    n = t.degree
    if n < 1:
        raise GraphAssocError("a tree needs at least two leaves")
    tubes = []

    def walk(tree, first_leaf):
        if tree.is_leaf:
            return
        last = first_leaf + tree.leaf_count - 1
        tubes.append(mask_of(range(first_leaf + 1, last + 1)))
        pos = first_leaf
        for c in tree.children:
            walk(c, pos)
            pos += c.leaf_count

    walk(t, 0)
    g = build_graph(GraphFamily.PATH, n)
    return Tubing(g, tuple(x for x in tubes if x != g.full))


def tubing_to_tree(t: Tubing) -> PlanarTree:
    n = t.n
    if t.graph != build_graph(GraphFamily.PATH, n):
        raise GraphMismatch("expected a tubing of a path graph")
    spans = {}
    for tube in list(t.tubes) + [t.graph.full]:
        nodes = nodes_of(tube)
        spans[nodes[0] - 1] = spans.get(nodes[0] - 1, []) + [nodes[-1]]

    def build(a, b):
        kids = []
        x = a
        while x <= b:
            inner = [end for end in spans.get(x, []) if end <= b and (x, end) != (a, b)]
            if inner:
                end = max(inner)
                kids.append(build(x, end))
                x = end + 1
            else:
                kids.append(LEAF)
                x += 1
        return PlanarTree(tuple(kids))

    return build(0, n)


@lru_cache(maxsize=None)
def binary_trees(n: int) -> tuple[PlanarTree, ...]:
    """Binary trees with ``n`` internal nodes (Catalan recursion)."""
    if n == 0:
        return (LEAF,)
    out = []
    for k in range(n):
        for left in binary_trees(k):
            for right in binary_trees(n - 1 - k):
                out.append(PlanarTree((left, right)))
    return tuple(out)


@lru_cache(maxsize=None)
def _forests(leaves: int, min_parts: int) -> tuple[tuple[PlanarTree, ...], ...]:
    out = []
    if min_parts <= 1:
        out.extend((t,) for t in planar_trees_with_leaves(leaves))
    for first in range(1, leaves):
        for head in planar_trees_with_leaves(first):
            for tail in _forests(leaves - first, max(min_parts - 1, 1)):
                out.append((head,) + tail)
    return tuple(out)


@lru_cache(maxsize=None)
def planar_trees_with_leaves(leaves: int) -> tuple[PlanarTree, ...]:
    if leaves == 1:
        return (LEAF,)
    return tuple(PlanarTree(f) for f in _forests(leaves, 2))


def planar_trees(n: int) -> tuple[PlanarTree, ...]:
    """Planar trees with ``n + 1`` leaves."""
    return planar_trees_with_leaves(n + 1)


# ---------------------------------------------------------------------------
# the classical Tonks map, implemented on trees directly


def tau_classic(perm: Sequence[int]) -> PlanarTree:
    """Binary tree of a permutation: node ``i`` at level ``perm[i]``, levels counted top down.

    The root is the lowest node ``argmax perm``; the nodes left and right of it form the subtrees.
    """
    perm = check_permutation(perm)

    def build(lo, hi):
        if lo > hi:
            return LEAF
        root = max(range(lo, hi + 1), key=lambda i: perm[i - 1])
        return PlanarTree((build(lo, root - 1), build(root + 1, hi)))

    return build(1, len(perm))


def tonks_tree(blocks) -> PlanarTree:
    """Forget the levels of a leveled tree given as an ordered partition."""
    u = partition_to_function(check_partition(blocks))

    def build(lo, hi):
        if lo > hi:
            return LEAF
        top = max(u[lo - 1:hi])
        cuts = [i for i in range(lo, hi + 1) if u[i - 1] == top]
        kids = []
        start = lo
        for c in cuts:
            kids.append(build(start, c - 1))
            start = c + 1
        kids.append(build(start, hi))
        return PlanarTree(tuple(kids))

    return build(1, len(u))


# ---------------------------------------------------------------------------
# text forms


def parse_permutation(text: str) -> Permutation:
    text = text.strip().strip("()")
    if "," in text or " " in text.strip():
        items = [int(x) for x in re.split(r"[,\s]+", text.strip()) if x]
    else:
        items = [int(c) for c in text]
    return check_permutation(items)


def format_permutation(perm: Permutation) -> str:
    if len(perm) < 10:
        return "".join(map(str, perm))
    return ",".join(map(str, perm))


def parse_partition(text: str) -> OrderedPartition:
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise GraphAssocError(f"cannot parse ordered partition {text!r}")
    blocks = re.findall(r"\{([^{}]*)\}", body)
    return check_partition([{int(x) for x in b.replace(" ", "").split(",") if x} for b in blocks])


def format_partition(blocks: OrderedPartition) -> str:
    return "(" + ",".join("{" + ",".join(map(str, sorted(b))) + "}" for b in blocks) + ")"
