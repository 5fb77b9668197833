"""Closed form for products of vertices of simplices."""

from __future__ import annotations

from math import comb

from ..graph_core import GraphAssocError, GraphFamily, Tubing, build_graph
from .lincombo import LinCombo


def simplex_vertex(j: int, n: int) -> Tubing:
    """``e_j^n``: every singleton of ``[n]`` except ``{j}`` is a tube."""
    if not 1 <= j <= n:
        raise GraphAssocError(f"need 1 <= j <= n, got j={j}, n={n}")
    g = build_graph(GraphFamily.EDGELESS, n)
    return Tubing(g, tuple(1 << (i - 1) for i in range(1, n + 1) if i != j))


def simplex_formula(p: int, l: int, q: int) -> LinCombo:
    """``e_j^p * e_l^q = sum_i C(i-1, l-1) C(p+q-i, q-l) e_i^{p+q}`` (the same for every ``j``)."""
    if p < 1 or not 1 <= l <= q:
        raise GraphAssocError(f"need p >= 1 and 1 <= l <= q, got p={p}, l={l}, q={q}")
    n = p + q
    return LinCombo(
        (simplex_vertex(i, n), comb(i - 1, l - 1) * comb(n - i, q - l)) for i in range(l, p + l + 1)
    )
