"""Cellular projections between graph associahedra, the component map and face inclusions."""

from __future__ import annotations

import enum
from typing import Iterable, Sequence

from .graph_core import (
    GraphAssocError,
    GraphFamily,
    GraphMismatch,
    SimpleGraph,
    Tubing,
    _compatible,
    build_graph,
    compress,
    expand,
    nodes_of,
    popcount,
    proper_tubes,
    reconnected_complement,
    validate_tubing,
)


class ProjectionError(GraphAssocError):
    pass


class PartsNotFarApart(ProjectionError):
    pass


class FactorGraphMismatch(ProjectionError):
    pass


class OuterGraphMismatch(ProjectionError):
    pass


def _edge(e) -> tuple[int, int]:
    a, b = e
    return (min(a, b), max(a, b))


def theta_edges(g: SimpleGraph, edges: Iterable, t: Tubing) -> Tubing:
    """Delete ``edges`` from ``g``; every tube of ``t`` is replaced by its connected pieces.

    The universal tube stays universal.
    """
    if t.graph != g:
        raise GraphMismatch("tubing is not on the source graph")
    h = g.without_edges([_edge(e) for e in edges])
    pieces = set()
    for tube in t.tubes:
        pieces.update(h.components(tube))
    return Tubing(h, tuple(pieces))


def theta_edge(g: SimpleGraph, e, t: Tubing) -> Tubing:
    return theta_edges(g, [e], t)


def theta_sequence(g: SimpleGraph, edges: Sequence, t: Tubing) -> Tubing:
    """Apply single-edge projections one at a time in the given order."""
    for e in edges:
        t = theta_edge(g, e, t)
        g = t.graph
    return t


class NamedProjection(enum.Enum):
    TONKS_P = "tonks-p"
    TONKS_C = "tonks-c"
    TONKS_W = "tonks-w"
    TONKS_DELTA = "tonks-delta"


_ENDPOINTS = {
    NamedProjection.TONKS_P: (GraphFamily.COMPLETE, GraphFamily.PATH),
    NamedProjection.TONKS_C: (GraphFamily.COMPLETE, GraphFamily.CYCLE),
    NamedProjection.TONKS_W: (GraphFamily.CYCLE, GraphFamily.PATH),
}


def named_edge_set(tag: NamedProjection, g: SimpleGraph) -> frozenset:
    """Edges deleted by a named projection whose source is ``g``."""
    tag = NamedProjection(tag)
    if tag is NamedProjection.TONKS_DELTA:
        return g.edges
    src, dst = _ENDPOINTS[tag]
    if g != build_graph(src, g.n):
        raise GraphMismatch(f"{tag.value} expects a {src.value} graph")
    return build_graph(src, g.n).edges - build_graph(dst, g.n).edges


def project(tag: NamedProjection, t: Tubing) -> Tubing:
    return theta_edges(t.graph, named_edge_set(tag, t.graph), t)


def tonks_p(t: Tubing) -> Tubing:
    return project(NamedProjection.TONKS_P, t)


def tonks_c(t: Tubing) -> Tubing:
    return project(NamedProjection.TONKS_C, t)


def tonks_w(t: Tubing) -> Tubing:
    return project(NamedProjection.TONKS_W, t)


def tonks_delta(t: Tubing) -> Tubing:
    return project(NamedProjection.TONKS_DELTA, t)


def eta(g: SimpleGraph, t: Tubing) -> list[Tubing]:
    """Split a tubing of a disconnected graph into one tubing per component.

    A tube equal to a whole component becomes that factor's universal tube.
    """
    if t.graph != g:
        raise GraphMismatch("tubing is not on the given graph")
    comps = g.components()
    if len(comps) < 2:
        raise ProjectionError("eta needs a disconnected graph")
    out = []
    for comp in comps:
        sub = g.induced(comp)
        tubes = [compress(x, comp) for x in t.tubes if x & comp == x and x != comp]
        out.append(Tubing(sub, tuple(tubes)))
    return out


def rho_hat(
    g: SimpleGraph,
    parts: Sequence,
    factor_tubings: Sequence[Tubing],
    outer: Tubing,
) -> Tubing:
    """Include ``K G(t_1) x ... x K G(t_k) x K G*(t_1 u ... u t_k)`` as a face of ``K G``.

    ``parts`` are pairwise far-apart proper tubes (masks or node sets). Factor tubings live on the
    induced subgraphs and ``outer`` on the reconnected complement, all relabeled
    order-preservingly. Each outer tube absorbs every part it is adjacent to.
    """
    masks = [p if isinstance(p, int) else sum(1 << (i - 1) for i in set(p)) for p in parts]
    if not masks:
        raise ProjectionError("rho_hat needs at least one part")
    if len(factor_tubings) != len(masks):
        raise ProjectionError("one factor tubing per part is required")
    for m in masks:
        if m == 0 or m == g.full or not g.is_connected_set(m):
            raise PartsNotFarApart(f"part {nodes_of(m)} is not a proper tube")
    union = 0
    for i, a in enumerate(masks):
        for b in masks[i + 1:]:
            if a & b or g.neighbors(a) & b:
                raise PartsNotFarApart(f"parts {nodes_of(a)} and {nodes_of(b)} are not far apart")
        union |= a
    for m, ft in zip(masks, factor_tubings):
        if ft.graph != g.induced(m):
            raise FactorGraphMismatch(f"factor tubing for part {nodes_of(m)} is on the wrong graph")
    comp_graph, _ = reconnected_complement(g, union)
    if outer.graph != comp_graph:
        raise OuterGraphMismatch("outer tubing is not on the reconnected complement")

    rest = g.full & ~union
    tubes = set(masks)
    for m, ft in zip(masks, factor_tubings):
        tubes.update(expand(x, m) for x in ft.tubes)
    for s in outer.tubes:
        grown = expand(s, rest)
        changed = True
        while changed:
            changed = False
            nb = g.neighbors(grown)
            for m in masks:
                if nb & m and not grown & m:
                    grown |= m
                    changed = True
        tubes.add(grown)
    return validate_tubing(g, tubes)


def max_preimage(g: SimpleGraph, e, t: Tubing) -> Tubing:
    """A largest face of ``K G`` projecting onto ``t`` under deletion of ``e``.

    Starts from the tubes of ``t`` and repeatedly merges the outermost tube containing one end of
    ``e`` but not the other with its counterpart at the other end. That pair is the only one
    with no tube containing exactly one of them, so the result is deterministic.
    """
    a, b = _edge(e)
    if not g.has_edge(a, b):
        raise GraphAssocError(f"edge {a}-{b} is not in the graph")
    h = g.without_edges([(a, b)])
    if t.graph != h:
        raise GraphMismatch("tubing is not on the graph with the edge deleted")
    bit_a, bit_b = 1 << (a - 1), 1 << (b - 1)
    tubes = set(t.tubes)
    while True:
        side_a = [x for x in tubes if x & bit_a and not x & bit_b]
        side_b = [x for x in tubes if x & bit_b and not x & bit_a]
        if not side_a or not side_b:
            break
        ta = max(side_a, key=popcount)
        tb = max(side_b, key=popcount)
        tubes -= {ta, tb}
        merged = ta | tb
        if merged != g.full:
            tubes.add(merged)
    return Tubing(g, tuple(tubes))


def max_preimage_edges(g: SimpleGraph, edges: Iterable, t: Tubing) -> Tubing:
    """Lift ``t`` from ``g - edges`` back to ``g`` one edge at a time."""
    edges = sorted({_edge(e) for e in edges})
    h = g.without_edges(edges)
    if t.graph != h:
        raise GraphMismatch("tubing is not on the graph with the edges deleted")
    for e in edges:
        h = h.with_edges([e])
        t = max_preimage(h, e, t)
    return t


def complete_to_vertex(t: Tubing) -> Tubing:
    """Greedily add canonical tubes until ``t`` is a vertex below it."""
    g = t.graph
    tubes = list(t.tubes)
    comps = g.components()
    for c in proper_tubes(g):
        if len(tubes) == g.n - 1:
            break
        if c in tubes or not all(_compatible(g, c, x) for x in tubes):
            continue
        if len(comps) > 1 and all(x in tubes or x == c for x in comps):
            continue
        tubes.append(c)
    return Tubing(g, tuple(tubes))


def lift_named(tag: NamedProjection, t: Tubing, vertex: bool = False) -> Tubing:
    """A preimage of ``t`` under a named projection (a vertex preimage when ``vertex``)."""
    tag = NamedProjection(tag)
    if tag is NamedProjection.TONKS_DELTA:
        src = GraphFamily.COMPLETE
    else:
        src = _ENDPOINTS[tag][0]
    g = build_graph(src, t.n)
    pre = max_preimage_edges(g, named_edge_set(tag, g), t)
    return complete_to_vertex(pre) if vertex else pre


__all__ = [
    "NamedProjection",
    "ProjectionError",
    "PartsNotFarApart",
    "FactorGraphMismatch",
    "OuterGraphMismatch",
    "theta_edge",
    "theta_edges",
    "theta_sequence",
    "named_edge_set",
    "project",
    "tonks_p",
    "tonks_c",
    "tonks_w",
    "tonks_delta",
    "eta",
    "rho_hat",
    "max_preimage",
    "max_preimage_edges",
    "complete_to_vertex",
    "lift_named",
]
