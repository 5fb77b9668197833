"""Independent products and coproducts on permutations, ordered partitions and binary trees.

None of these use tubings; they exist to cross-check the tubing template.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from ..bijections import (
    LEAF,
    PlanarTree,
    check_permutation,
    function_to_partition,
    partition_to_function,
    perm_inverse,
)
from .lincombo import LinCombo, TensorCombo
from .shuffles import shuffles


def standardize(word: Sequence[int]) -> tuple[int, ...]:
    order = sorted(range(len(word)), key=lambda i: word[i])
    out = [0] * len(word)
    for rank, i in enumerate(order, 1):
        out[i] = rank
    return tuple(out)


def ssym_product(u: Sequence[int], v: Sequence[int]) -> LinCombo:
    """``sum over shuffles iota of (u x v) . iota^{-1}``, on permutations."""
    u, v = check_permutation(u), check_permutation(v)
    p, q = len(u), len(v)
    uv = u + tuple(x + p for x in v)
    out = []
    for s in shuffles(p, q):
        inv = perm_inverse(s.as_permutation())
        out.append(tuple(uv[inv[j] - 1] for j in range(p + q)))
    return LinCombo.from_counts(out)


def ssym_coproduct(u: Sequence[int]) -> TensorCombo:
    """``sum_i std(u(1..i)) (x) std(u(i+1..n))``; the empty word stands for the unit."""
    u = check_permutation(u)
    return TensorCombo.from_counts(
        (standardize(u[:i]), standardize(u[i:])) for i in range(len(u) + 1)
    )


def tssym_product(blocks_u, blocks_v) -> LinCombo:
    """Ordered-partition product: ``(u x v)(i) = u(i)`` for ``i <= p`` and ``v(i-p) + k``
    otherwise, composed with the inverse of every shuffle."""
    u, v = partition_to_function(blocks_u), partition_to_function(blocks_v)
    p, q, k = len(u), len(v), len(blocks_u)
    uv = u + tuple(x + k for x in v)
    out = []
    for s in shuffles(p, q):
        inv = perm_inverse(s.as_permutation())
        out.append(function_to_partition([uv[inv[j] - 1] for j in range(p + q)]))
    return LinCombo.from_counts(out)


# ---------------------------------------------------------------------------
# binary trees


def split_tree(t: PlanarTree, x: int) -> tuple[PlanarTree, PlanarTree]:
    """Cut a binary tree along the path from its root down to leaf ``x``."""
    if t.is_leaf:
        return LEAF, LEAF
    left, right = t.children
    nl = left.leaf_count
    if x < nl:
        a, b = split_tree(left, x)
        return a, PlanarTree((b, right))
    a, b = split_tree(right, x - nl)
    return PlanarTree((left, a)), b


def multi_split(t: PlanarTree, cuts: Sequence[int]) -> list[PlanarTree]:
    """Split at weakly increasing leaves ``cuts`` into ``len(cuts) + 1`` trees."""
    pieces = []
    offset = 0
    rest = t
    for x in cuts:
        a, rest = split_tree(rest, x - offset)
        pieces.append(a)
        offset = x
    pieces.append(rest)
    return pieces


def graft(pieces: Sequence[PlanarTree], base: PlanarTree) -> PlanarTree:
    """Replace the leaves of ``base``, left to right, by ``pieces``."""
    it = iter(pieces)

    def walk(t):
        if t.is_leaf:
            return next(it)
        return PlanarTree(tuple(walk(c) for c in t.children))

    return walk(base)


def ysym_product(u: PlanarTree, v: PlanarTree) -> LinCombo:
    """Split ``u`` into as many pieces as ``v`` has leaves and graft them onto ``v``."""
    p, q = u.internal_count, v.internal_count
    out = []
    for cuts in itertools.combinations_with_replacement(range(p + 1), q):
        out.append(graft(multi_split(u, cuts), v))
    return LinCombo.from_counts(out)


def ysym_coproduct(u: PlanarTree) -> TensorCombo:
    """``sum_i`` of the two halves of ``u`` split at leaf ``i``; a bare leaf is the unit."""
    return TensorCombo.from_counts(split_tree(u, i) for i in range(u.leaf_count))
