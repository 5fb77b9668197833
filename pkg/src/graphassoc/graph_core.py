"""Simple graphs, tubes and tubings.

Node sets are stored as int bitmasks: bit ``i - 1`` stands for node ``i``.
A :class:`Tubing` keeps only its proper tubes; the universal tube is implicit.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

MAX_NODES = 64


class GraphAssocError(ValueError):
    """Base class for domain errors raised by this package."""


class TubingError(GraphAssocError):
    pass


class NotATube(TubingError):
    def __init__(self, nodes):
        self.nodes = tuple(sorted(nodes))
        super().__init__(f"not a tube: {{{','.join(map(str, self.nodes))}}}")


class Incompatible(TubingError):
    def __init__(self, t1, t2):
        self.tubes = (tuple(sorted(t1)), tuple(sorted(t2)))
        a, b = (",".join(map(str, t)) for t in self.tubes)
        super().__init__(f"incompatible tubes: {{{a}}} and {{{b}}}")


class AllComponentsPresent(TubingError):
    def __init__(self):
        super().__init__("tubing contains every connected component of a disconnected graph")


class GraphMismatch(GraphAssocError):
    pass


# ---------------------------------------------------------------------------
# bitmask helpers


def mask_of(nodes: Iterable[int]) -> int:
    m = 0
    for i in nodes:
        m |= 1 << (i - 1)
    return m


def nodes_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def low_node(mask: int) -> int:
    return (mask & -mask).bit_length()


@lru_cache(maxsize=None)
def tube_key(mask: int) -> tuple:
    """Canonical sort key: minimum node, then size, then the sorted node list."""
    nodes = nodes_of(mask)
    return (nodes[0] if nodes else 0, len(nodes), nodes)


def compress(mask: int, support: int) -> int:
    """Relabel ``mask`` (a subset of ``support``) order-preservingly onto 1..|support|."""
    out = 0
    bit = 1
    pos = 1
    while support:
        if support & 1:
            if mask & pos:
                out |= bit
            bit <<= 1
        support >>= 1
        pos <<= 1
    return out


def expand(mask: int, support: int) -> int:
    """Inverse of :func:`compress`."""
    out = 0
    pos = 1
    while support and mask:
        if support & 1:
            if mask & 1:
                out |= pos
            mask >>= 1
        support >>= 1
        pos <<= 1
    return out


def format_nodes(mask: int) -> str:
    return "{" + ",".join(map(str, nodes_of(mask))) + "}"


# ---------------------------------------------------------------------------
# graphs


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on nodes ``1..n``."""

    n: int
    edges: frozenset = frozenset()
    _adj: tuple = field(default=(), init=False, repr=False, compare=False, hash=False)
    _components: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise GraphAssocError(f"bad node count {self.n!r}")
        if self.n > MAX_NODES:
            raise GraphAssocError(f"at most {MAX_NODES} nodes are supported")
        norm = set()
        for e in self.edges:
            a, b = e
            if a == b:
                raise GraphAssocError(f"self-loop at node {a}")
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise GraphAssocError(f"edge {a}-{b} outside 1..{self.n}")
            norm.add((min(a, b), max(a, b)))
        object.__setattr__(self, "edges", frozenset(norm))
        adj = [0] * (self.n + 1)
        for a, b in norm:
            adj[a] |= 1 << (b - 1)
            adj[b] |= 1 << (a - 1)
        object.__setattr__(self, "_adj", tuple(adj))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def neighbors(self, mask: int) -> int:
        """Union of the neighbourhoods of the nodes in ``mask``."""
        out = 0
        adj = self._adj
        i = 1
        while mask:
            if mask & 1:
                out |= adj[i]
            mask >>= 1
            i += 1
        return out

    def components(self, mask: int | None = None) -> tuple[int, ...]:
        """Connected components of the induced subgraph on ``mask``, ordered by minimum node."""
        if mask is None:
            mask = self.full
        cached = self._components.get(mask)
        if cached is not None:
            return cached
        comps = []
        rest = mask
        adj = self._adj
        while rest:
            seed = rest & -rest
            comp = seed
            frontier = seed
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                new = adj[low.bit_length()] & mask & ~comp
                comp |= new
                frontier |= new
            comps.append(comp)
            rest &= ~comp
        out = tuple(comps)
        self._components[mask] = out
        return out

    def is_connected_set(self, mask: int) -> bool:
        return mask != 0 and len(self.components(mask)) == 1

    @property
    def is_connected(self) -> bool:
        return self.n == 0 or len(self.components()) == 1

    def without_edges(self, edges: Iterable) -> "SimpleGraph":
        drop = {(min(a, b), max(a, b)) for a, b in edges}
        missing = drop - self.edges
        if missing:
            a, b = sorted(missing)[0]
            raise GraphAssocError(f"edge {a}-{b} is not in the graph")
        return SimpleGraph(self.n, self.edges - drop)

    def with_edges(self, edges: Iterable) -> "SimpleGraph":
        return SimpleGraph(self.n, self.edges | {(min(a, b), max(a, b)) for a, b in edges})

    def induced(self, mask: int) -> "SimpleGraph":
        """Induced subgraph on ``mask``, relabeled order-preservingly to 1..|mask|."""
        nodes = nodes_of(mask)
        pos = {v: i + 1 for i, v in enumerate(nodes)}
        return SimpleGraph(
            len(nodes), frozenset((pos[a], pos[b]) for a, b in self.edges if a in pos and b in pos)
        )

    def __str__(self):
        edges = ",".join(f"{a}-{b}" for a, b in sorted(self.edges))
        return f"n={self.n};edges=({edges})"


class GraphFamily(enum.Enum):
    COMPLETE = "complete"
    CYCLE = "cycle"
    PATH = "path"
    EDGELESS = "edgeless"


@lru_cache(maxsize=None)
def build_graph(family: GraphFamily, n: int) -> SimpleGraph:
    """Family graph on ``n`` nodes; cycles use the edge ``{n, 1}`` and coincide with complete graphs for n <= 2."""
    family = GraphFamily(family)
    if n < 1:
        raise GraphAssocError("a family graph needs at least one node")
    if family is GraphFamily.COMPLETE:
        edges = itertools.combinations(range(1, n + 1), 2)
    elif family is GraphFamily.PATH:
        edges = ((i, i + 1) for i in range(1, n))
    elif family is GraphFamily.CYCLE:
        edges = [(i, i + 1) for i in range(1, n)]
        if n >= 3:
            edges.append((1, n))
    else:
        edges = ()
    return SimpleGraph(n, frozenset(edges))


def family_of(g: SimpleGraph) -> GraphFamily | None:
    """The family whose ``n``-node member equals ``g`` (path before cycle before complete)."""
    if g.n == 0:
        return None
    for fam in (GraphFamily.EDGELESS, GraphFamily.PATH, GraphFamily.CYCLE, GraphFamily.COMPLETE):
        if build_graph(fam, g.n) == g:
            return fam
    return None


# ---------------------------------------------------------------------------
# tubes


def _as_mask(g: SimpleGraph, s) -> int:
    if isinstance(s, int):
        if s < 0 or s >> g.n:
            raise NotATube(nodes_of(s))
        return s
    nodes = set(s)
    if any(not isinstance(i, int) or not 1 <= i <= g.n for i in nodes):
        raise NotATube(nodes)
    return mask_of(nodes)


def is_tube(g: SimpleGraph, s) -> bool:
    """True iff ``s`` is a nonempty node set inducing a connected subgraph."""
    try:
        mask = _as_mask(g, s)
    except NotATube:
        return False
    return g.is_connected_set(mask)


def _compatible(g: SimpleGraph, a: int, b: int) -> bool:
    meet = a & b
    if meet:
        return meet == a or meet == b
    return not (g.neighbors(a) & b)


def tubes_compatible(g: SimpleGraph, t1, t2) -> bool:
    """Nested, or disjoint with a disconnected union."""
    a, b = _as_mask(g, t1), _as_mask(g, t2)
    for m in (a, b):
        if not g.is_connected_set(m):
            raise NotATube(nodes_of(m))
    return _compatible(g, a, b)


def connected_sets(g: SimpleGraph) -> list[int]:
    """Every tube of ``g`` (including the full node set when connected), canonically ordered."""
    seen: set[int] = set()
    layer = {1 << (i - 1) for i in range(1, g.n + 1)}
    while layer:
        seen |= layer
        nxt = set()
        for m in layer:
            nb = g.neighbors(m) & ~m
            while nb:
                low = nb & -nb
                nb ^= low
                grown = m | low
                if grown not in seen:
                    nxt.add(grown)
        layer = nxt
    return sorted(seen, key=tube_key)


@lru_cache(maxsize=None)
def proper_tubes(g: SimpleGraph) -> tuple[int, ...]:
    full = g.full
    return tuple(m for m in connected_sets(g) if m != full)


# ---------------------------------------------------------------------------
# tubings


@dataclass(frozen=True)
class Tubing:
    """A face of the graph associahedron: the proper tubes of a tubing, canonically ordered.

    The constructor canonicalizes but does not validate; use :func:`validate_tubing`
    for untrusted input.
    """

    graph: SimpleGraph
    tubes: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "tubes", tuple(sorted(set(self.tubes), key=tube_key)))

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def rank(self) -> int:
        return len(self.tubes)

    @property
    def dim(self) -> int:
        return self.graph.n - 1 - len(self.tubes)

    @property
    def is_vertex(self) -> bool:
        return len(self.tubes) == self.graph.n - 1

    def tube_sets(self) -> list[frozenset]:
        return [frozenset(nodes_of(t)) for t in self.tubes]

    def sort_key(self) -> tuple:
        return tuple(tube_key(t) for t in self.tubes)

    def __str__(self):
        return f"n={self.graph.n};" + "".join(format_nodes(t) for t in self.tubes)


def _check_masks(g: SimpleGraph, masks) -> None:
    for m in masks:
        if not g.is_connected_set(m):
            raise NotATube(nodes_of(m))
    ordered = sorted(masks, key=tube_key)
    for a, b in itertools.combinations(ordered, 2):
        if not _compatible(g, a, b):
            raise Incompatible(nodes_of(a), nodes_of(b))
    comps = g.components()
    if len(comps) > 1 and all(c in masks for c in comps):
        raise AllComponentsPresent()


def validate_tubing(g: SimpleGraph, tubes: Iterable) -> Tubing:
    """Check a collection of node sets and return the canonical :class:`Tubing`.

    The universal tube may be listed; it is dropped.
    """
    masks = {_as_mask(g, s) for s in tubes}
    if 0 in masks:
        raise NotATube(())
    masks.discard(g.full)
    _check_masks(g, masks)
    return Tubing(g, tuple(masks))


def is_valid_tubing(t: Tubing) -> bool:
    if t.graph.full in t.tubes or 0 in t.tubes:
        return False
    try:
        _check_masks(t.graph, set(t.tubes))
    except TubingError:
        return False
    return True


@lru_cache(maxsize=None)
def _search_tables(g: SimpleGraph):
    cands = proper_tubes(g)
    m = len(cands)
    compat = [0] * m
    for i in range(m):
        bits = 0
        for j in range(i + 1, m):
            if _compatible(g, cands[i], cands[j]):
                bits |= 1 << j
        compat[i] = bits
    comps = g.components()
    comp_bits = 0
    if len(comps) > 1:
        index = {c: i for i, c in enumerate(cands)}
        for c in comps:
            comp_bits |= 1 << index[c]
    return cands, tuple(compat), comp_bits, len(comps)


def _resolve_rank(g: SimpleGraph, rank_filter) -> int | None:
    if rank_filter is None or rank_filter == "all":
        return None
    if rank_filter == "vertices":
        return max(g.n - 1, 0)
    if isinstance(rank_filter, int) and rank_filter >= 0:
        return rank_filter
    raise GraphAssocError(f"bad rank filter {rank_filter!r}")


def iter_tubing_masks(g: SimpleGraph, rank_filter=None) -> Iterator[tuple[int, ...]]:
    """Depth-first enumeration of tubings as canonical mask tuples, in canonical order."""
    rank = _resolve_rank(g, rank_filter)
    cands, compat, comp_bits, ncomp = _search_tables(g)
    full_allowed = (1 << len(cands)) - 1

    def rec(chosen, allowed, comps_in):
        if rank is None or len(chosen) == rank:
            yield tuple(cands[i] for i in chosen)
            if rank is not None:
                return
        while allowed:
            low = allowed & -allowed
            allowed ^= low
            j = low.bit_length() - 1
            c = comps_in + 1 if comp_bits & low else comps_in
            if ncomp > 1 and c == ncomp:
                continue
            chosen.append(j)
            yield from rec(chosen, compat[j] & allowed, c)
            chosen.pop()

    yield from rec([], full_allowed, 0)


def count_tubings(g: SimpleGraph, rank_filter=None) -> int:
    rank = _resolve_rank(g, rank_filter)
    cands, compat, comp_bits, ncomp = _search_tables(g)

    def rec(depth, allowed, comps_in):
        total = 1 if rank is None or depth == rank else 0
        if rank is not None and depth == rank:
            return total
        while allowed:
            low = allowed & -allowed
            allowed ^= low
            j = low.bit_length() - 1
            c = comps_in + 1 if comp_bits & low else comps_in
            if ncomp > 1 and c == ncomp:
                continue
            total += rec(depth + 1, compat[j] & allowed, c)
        return total

    return rec(0, (1 << len(cands)) - 1, 0)


@lru_cache(maxsize=256)
def _enumerate_cached(g: SimpleGraph, rank) -> tuple[Tubing, ...]:
    return tuple(Tubing(g, ms) for ms in iter_tubing_masks(g, rank))


def enumerate_tubings(g: SimpleGraph, rank_filter=None) -> list[Tubing]:
    """All tubings of ``g`` (optionally of one rank, or ``"vertices"``) in canonical order."""
    return list(_enumerate_cached(g, _resolve_rank(g, rank_filter)))


def f_vector(g: SimpleGraph) -> list[int]:
    counts = [0] * g.n
    for ms in iter_tubing_masks(g):
        counts[g.n - 1 - len(ms)] += 1
    return counts


def brute_force_tubings(g: SimpleGraph) -> set[frozenset]:
    """Oracle: tubings found by testing every small set of tubes against the definitions.

    Uses plain set-based connectivity, independent of the bitmask machinery.
    Practical for n <= 5.
    """
    nodes = range(1, g.n + 1)
    adj = {v: set() for v in nodes}
    for a, b in g.edges:
        adj[a].add(b)
        adj[b].add(a)

    def connected(s):
        s = set(s)
        if not s:
            return False
        start = next(iter(s))
        seen, stack = {start}, [start]
        while stack:
            v = stack.pop()
            for w in adj[v] & s:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen == s

    tubes = [
        frozenset(c)
        for k in range(1, g.n)
        for c in itertools.combinations(nodes, k)
        if connected(c)
    ]

    def compatible(a, b):
        return a <= b or b <= a or not connected(a | b)

    comps = set()
    rest = set(nodes)
    while rest:
        v = rest.pop()
        comp, stack = {v}, [v]
        while stack:
            x = stack.pop()
            for w in adj[x] - comp:
                comp.add(w)
                stack.append(w)
        rest -= comp
        comps.add(frozenset(comp))

    found = set()
    for k in range(0, g.n + 1):
        for combo in itertools.combinations(tubes, k):
            if not all(compatible(a, b) for a, b in itertools.combinations(combo, 2)):
                continue
            if len(comps) > 1 and comps <= set(combo):
                continue
            found.add(frozenset(combo))
    return found


def reconnected_complement(g: SimpleGraph, t) -> tuple[SimpleGraph, dict[int, int]]:
    """Graph on ``V - t`` with ``a-b`` whenever ``{a, b}`` plus some subset of ``t`` is connected.

    Returns the graph relabeled order-preservingly to ``1..n-|t|`` and the map old node -> new node.
    """
    mask = _as_mask(g, t)
    if mask == 0 or mask == g.full:
        raise GraphAssocError("reconnected complement needs a nonempty strict subset of the nodes")
    rest = nodes_of(g.full & ~mask)
    relabel = {v: i + 1 for i, v in enumerate(rest)}
    reach = []
    for comp in g.components(mask):
        reach.append(g.neighbors(comp) & ~mask)
    edges = set()
    for a, b in itertools.combinations(rest, 2):
        if g.has_edge(a, b):
            edges.add((relabel[a], relabel[b]))
            continue
        pair = (1 << (a - 1)) | (1 << (b - 1))
        if any(r & pair == pair for r in reach):
            edges.add((relabel[a], relabel[b]))
    return SimpleGraph(len(rest), frozenset(edges)), relabel


def face_leq(a: Tubing, b: Tubing) -> bool:
    """``a`` is a face of ``b``: ``a`` has every tube of ``b`` (and possibly more)."""
    if a.graph != b.graph:
        raise GraphMismatch("tubings live on different graphs")
    return set(b.tubes) <= set(a.tubes)


# ---------------------------------------------------------------------------
# text grammar

_TUBING_RE = re.compile(r"^\s*n\s*=\s*(\d+)\s*;\s*((?:\{[^{}]*\}\s*)*)$")
_EDGES_RE = re.compile(r"^\s*n\s*=\s*(\d+)\s*;\s*edges\s*=\s*\(([^()]*)\)\s*$")
_FAMILY_RE = re.compile(r"^\s*family\s*:\s*(\w+)\s*,\s*n\s*:\s*(\d+)\s*$")


def parse_tubing_text(text: str) -> tuple[int, list[frozenset]]:
    """Parse ``n=<int>;{a,b}{c}`` into the node count and the listed node sets."""
    m = _TUBING_RE.match(text)
    if not m:
        raise GraphAssocError(f"cannot parse tubing {text!r}; expected n=<int>;{{a,b,..}}{{c,..}}")
    n = int(m.group(1))
    sets = []
    for body in re.findall(r"\{([^{}]*)\}", m.group(2)):
        items = [x for x in body.replace(" ", "").split(",") if x]
        if not items or not all(x.isdigit() for x in items):
            raise GraphAssocError(f"bad tube {{{body}}} in {text!r}")
        sets.append(frozenset(int(x) for x in items))
    return n, sets


def parse_tubing(text: str, g: SimpleGraph) -> Tubing:
    n, sets = parse_tubing_text(text)
    if n != g.n:
        raise GraphMismatch(f"tubing is on {n} nodes but the graph has {g.n}")
    return validate_tubing(g, sets)


def parse_graph(text: str) -> SimpleGraph:
    """``family:<name>,n:<int>`` or ``n=<int>;edges=(1-2,2-3,...)``."""
    m = _FAMILY_RE.match(text)
    if m:
        try:
            fam = GraphFamily(m.group(1).lower())
        except ValueError:
            raise GraphAssocError(f"unknown graph family {m.group(1)!r}") from None
        return build_graph(fam, int(m.group(2)))
    m = _EDGES_RE.match(text)
    if m:
        edges = []
        for item in m.group(2).replace(" ", "").split(","):
            if not item:
                continue
            a, _, b = item.partition("-")
            if not (a.isdigit() and b.isdigit()):
                raise GraphAssocError(f"bad edge {item!r} in {text!r}")
            edges.append((int(a), int(b)))
        return SimpleGraph(int(m.group(1)), frozenset(edges))
    raise GraphAssocError(
        f"cannot parse graph {text!r}; expected family:<name>,n:<int> or n=<int>;edges=(1-2,...)"
    )
