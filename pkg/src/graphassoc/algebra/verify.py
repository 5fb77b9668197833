"""Exhaustive and seeded checks of the algebraic and projection identities.

``verify(property, bounds, seed)`` returns a :class:`Report`; it never raises on a failed
identity, it records the first counterexample instead.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass, field
from math import comb, factorial
from typing import Callable, Iterator

from .. import bijections as bij
from ..graph_core import (
    GraphFamily,
    SimpleGraph,
    build_graph,
    count_tubings,
    enumerate_tubings,
    f_vector,
    reconnected_complement,
)
from ..projections import (
    max_preimage,
    rho_hat,
    theta_edges,
    theta_sequence,
    tonks_c,
    tonks_p,
    tonks_w,
)
from . import oracles
from .formula import simplex_formula, simplex_vertex
from .homs import Hom, Pair, fiber, hom_endpoints, hom_map, module_action
from .structures import (
    COPRODUCT_ALGEBRAS,
    DSYM,
    SSYM,
    TDSYM,
    TSSYM,
    UNIT,
    YSYM,
    AlgebraId,
    NullFace,
    basis,
    coproduct,
    get_algebra,
    iterated_coproduct,
    product,
    tensor_product,
)


@dataclass
class Report:
    property: str
    passed: bool = True
    checked: int = 0
    counterexample: str | None = None
    notes: list[str] = field(default_factory=list)

    def fail(self, text: str) -> None:
        if self.passed:
            self.passed = False
            self.counterexample = text

    def __str__(self):
        head = f"{self.property}: {'pass' if self.passed else 'FAIL'} ({self.checked} checks)"
        if self.counterexample:
            head += f"\n  counterexample: {self.counterexample}"
        return head


@dataclass(frozen=True)
class Bounds:
    """``n``: exhaustive degree bound; ``limit``: number of seeded samples above it."""

    n: int = 5
    limit: int = 0


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    for cuts in itertools.combinations(range(1, total), parts - 1):
        yield tuple(b - a for a, b in zip((0,) + cuts, cuts + (total,)))


def _pairs(alg: AlgebraId, n: int, with_unit: bool = False):
    lo = 0 if with_unit else 1
    for p in range(lo, n + 1):
        for q in range(lo, n + 1 - p):
            for u in basis(alg, p):
                for v in basis(alg, q):
                    yield u, v


# ---------------------------------------------------------------------------
# algebra properties


def check_assoc(alg, bounds: Bounds, seed: int = 0) -> Report:
    alg = get_algebra(alg)
    rep = Report(f"assoc({alg})")

    def one(a, b, c):
        rep.checked += 1
        left = product(alg, product(alg, a, b), c)
        right = product(alg, a, product(alg, b, c))
        if left != right:
            rep.fail(f"({a})({b})({c})")

    for total in range(3, bounds.n + 1):
        for p, q, r in _compositions(total, 3):
            for a in basis(alg, p):
                for b in basis(alg, q):
                    for c in basis(alg, r):
                        one(a, b, c)
                        if not rep.passed:
                            return rep
    rng = random.Random(seed)
    for _ in range(bounds.limit):
        total = rng.choice((bounds.n + 1, bounds.n + 2))
        p, q, r = rng.choice(list(_compositions(total, 3)))
        one(*(rng.choice(basis(alg, k)) for k in (p, q, r)))
        if not rep.passed:
            break
    return rep


def check_hom(which, bounds: Bounds, faces: bool = False) -> Report:
    which = Hom(which)
    src, dst = hom_endpoints(which, faces)
    rep = Report(f"hom({which.value}{', faces' if faces else ''})")
    for u, v in _pairs(src, bounds.n):
        rep.checked += 1
        left = hom_map(which, product(src, u, v), faces)
        right = product(dst, hom_map(which, u, faces), hom_map(which, v, faces))
        if left != right:
            rep.fail(f"u={u}, v={v}")
            return rep
    if not (faces and which is Hom.THETA_DELTA_HAT):
        for u in basis(src, bounds.n) if bounds.n else ():
            rep.checked += 1
            if hom_map(which, product(src, u, UNIT), faces) != product(dst, hom_map(which, u, faces), UNIT):
                rep.fail(f"unit law at u={u}")
                return rep
    for n in range(1, bounds.n + 1):
        for b in basis(dst, n):
            if isinstance(b, NullFace):
                continue
            rep.checked += 1
            if not fiber(which, b, faces):
                rep.fail(f"{b} has no preimage")
                return rep
    return rep


def check_bialgebra(bounds: Bounds) -> Report:
    rep = Report("bialgebra(tdsym)")
    alg = TDSYM
    for u, v in _pairs(alg, bounds.n, with_unit=True):
        rep.checked += 1
        left = coproduct(alg, product(alg, u, v))
        right = tensor_product(alg, coproduct(alg, u), coproduct(alg, v))
        if left != right:
            rep.fail(f"u={u}, v={v}")
            return rep
    return rep


def check_coassoc(alg, bounds: Bounds) -> Report:
    alg = get_algebra(alg)
    rep = Report(f"coassoc({alg})")
    for n in range(bounds.n + 1):
        for b in basis(alg, n):
            rep.checked += 1
            if iterated_coproduct(alg, b, "left") != iterated_coproduct(alg, b, "right"):
                rep.fail(str(b))
                return rep
    return rep


def check_null_right_factor(bounds: Bounds) -> Report:
    """In the null algebra a product only depends on the degree of its left factor."""
    rep = Report("null-right-factor(tdsym)")
    for p in range(1, bounds.n):
        for q in range(1, bounds.n + 1 - p):
            for v in basis(TDSYM, q):
                seen = None
                for u in basis(TDSYM, p):
                    rep.checked += 1
                    out = product(TDSYM, u, v)
                    if seen is None:
                        seen = out
                    elif out != seen:
                        rep.fail(f"u={u}, v={v}")
                        return rep
    return rep


def check_formula(bounds: Bounds) -> Report:
    rep = Report("formula-vs-template")
    for p in range(1, bounds.n + 1):
        for q in range(1, bounds.n + 1):
            for l in range(1, q + 1):
                want = simplex_formula(p, l, q)
                if want.coefficient_sum() != comb(p + q, p):
                    rep.fail(f"coefficient sum at p={p}, l={l}, q={q}")
                    return rep
                for j in range(1, p + 1):
                    rep.checked += 1
                    got = product(DSYM, simplex_vertex(j, p), simplex_vertex(l, q))
                    if got != want:
                        rep.fail(f"e_{j}^{p} * e_{l}^{q}")
                        return rep
    return rep


def _path_tubing(t):
    return UNIT if t.is_leaf else bij.tree_to_tubing(t)


def check_oracles(bounds: Bounds) -> Report:
    """Template products against the permutation, partition and tree oracles."""
    rep = Report("oracles")
    n = bounds.n
    perm_tub = lambda s: UNIT if not s else bij.perm_to_tubing(s)  # noqa: E731
    for p in range(1, n + 1):
        for q in range(1, n + 1 - p):
            for u in bij.permutations(p):
                for v in bij.permutations(q):
                    rep.checked += 1
                    want = oracles.ssym_product(u, v).map_keys(perm_tub)
                    if product(SSYM, perm_tub(u), perm_tub(v)) != want:
                        rep.fail(f"ssym u={u}, v={v}")
                        return rep
            for u in bij.binary_trees(p):
                for v in bij.binary_trees(q):
                    rep.checked += 1
                    want = oracles.ysym_product(u, v).map_keys(_path_tubing)
                    if product(YSYM, _path_tubing(u), _path_tubing(v)) != want:
                        rep.fail(f"ysym u={u}, v={v}")
                        return rep
    for p in range(1, n):
        for q in range(1, n - p):
            for u in bij.ordered_partitions(p):
                for v in bij.ordered_partitions(q):
                    rep.checked += 1
                    want = oracles.tssym_product(u, v).map_keys(bij.partition_to_tubing)
                    got = product(TSSYM, bij.partition_to_tubing(u), bij.partition_to_tubing(v))
                    if got != want:
                        rep.fail(f"tssym u={bij.format_partition(u)}, v={bij.format_partition(v)}")
                        return rep
    for k in range(1, n + 1):
        for u in bij.permutations(k):
            rep.checked += 1
            want = oracles.ssym_coproduct(u).map_keys(lambda kv: (perm_tub(kv[0]), perm_tub(kv[1])))
            if coproduct(SSYM, bij.perm_to_tubing(u)) != want:
                rep.fail(f"ssym coproduct u={u}")
                return rep
        for t in bij.binary_trees(k):
            rep.checked += 1
            want = oracles.ysym_coproduct(t).map_keys(lambda kv: (_path_tubing(kv[0]), _path_tubing(kv[1])))
            if coproduct(YSYM, bij.tree_to_tubing(t)) != want:
                rep.fail(f"ysym coproduct u={t}")
                return rep
    return rep


def check_module(bounds: Bounds) -> Report:
    """Actions do not depend on the chosen lift and agree with the projected product."""
    rep = Report("module-consistency")
    for pair in Pair:
        which = Hom.THETA_C_HAT if pair is Pair.SSYM_ON_WSYM else Hom.THETA_W_HAT
        src, dst = hom_endpoints(which)
        for p in range(1, bounds.n + 1):
            for q in range(1, bounds.n + 1 - p):
                for a in basis(src, p):
                    for b in basis(dst, q):
                        lifts = fiber(which, b)
                        for side in ("left", "right"):
                            first = None
                            for y in lifts:
                                rep.checked += 1
                                out = module_action(side, pair, a, b, lift=lambda _x, y=y: y)
                                if first is None:
                                    first = out
                                    default = module_action(side, pair, a, b)
                                    if out != default:
                                        rep.fail(f"{pair.value} {side}: default lift of {b} differs")
                                        return rep
                                elif out != first:
                                    rep.fail(f"{pair.value} {side}: a={a}, lifts of {b} disagree at {y}")
                                    return rep
                            if lifts:
                                img = hom_map(which, a)
                                direct = product(dst, img, b) if side == "left" else product(dst, b, img)
                                if first != direct:
                                    rep.fail(f"action of {a} on {b} differs from the projected product")
                                    return rep
    return rep


# ---------------------------------------------------------------------------
# projection and counting properties


def random_graph(rng: random.Random, n: int, density: float = 0.5) -> SimpleGraph:
    edges = [e for e in itertools.combinations(range(1, n + 1), 2) if rng.random() < density]
    return SimpleGraph(n, edges)


def check_theta_commute(bounds: Bounds, seed: int = 0, orders: int = 10) -> Report:
    rep = Report("theta-commute")
    rng = random.Random(seed)
    cases = bounds.limit or 200
    for _ in range(cases):
        n = rng.randint(2, max(2, bounds.n))
        g = random_graph(rng, n, rng.uniform(0.3, 1.0))
        if not g.edges:
            g = g.with_edges([(1, 2)])
        tubings = enumerate_tubings(g)
        t = rng.choice(tubings)
        pool = sorted(g.edges)
        es = rng.sample(pool, rng.randint(1, len(pool)))
        want = theta_edges(g, es, t)
        for _ in range(orders):
            rep.checked += 1
            order = rng.sample(es, len(es))
            if theta_sequence(g, order, t) != want:
                rep.fail(f"g={g}, t={t}, order={order}")
                return rep
    return rep


def check_tonks_factorization(bounds: Bounds) -> Report:
    rep = Report("tonks-factorization")
    for n in range(1, bounds.n + 1):
        for s in bij.permutations(n):
            rep.checked += 1
            got = bij.tubing_to_tree(tonks_p(bij.perm_to_tubing(s)))
            if got != bij.tau_classic(s):
                rep.fail(f"sigma={bij.format_permutation(s)}")
                return rep
        for part in bij.ordered_partitions(n):
            rep.checked += 1
            if bij.tubing_to_tree(tonks_p(bij.partition_to_tubing(part))) != bij.tonks_tree(part):
                rep.fail(f"partition={bij.format_partition(part)}")
                return rep
        for t in enumerate_tubings(build_graph(GraphFamily.COMPLETE, n)):
            rep.checked += 1
            if tonks_w(tonks_c(t)) != tonks_p(t):
                rep.fail(f"theta_w(theta_c({t})) != theta_p")
                return rep
    return rep


def check_max_preimage(bounds: Bounds) -> Report:
    rep = Report("max-preimage")
    for family in GraphFamily:
        for n in range(2, bounds.n + 1):
            g = build_graph(family, n)
            for e in sorted(g.edges):
                h = g.without_edges([e])
                for t in enumerate_tubings(h):
                    rep.checked += 1
                    pre = max_preimage(g, e, t)
                    if theta_edges(g, [e], pre) != t:
                        rep.fail(f"g={g}, e={e}, t={t}")
                        return rep
    return rep


def check_rho_hat(g: SimpleGraph) -> Report:
    """Every facet tube: images are distinct valid tubings containing it with additive rank."""
    rep = Report(f"rho-hat({g})")
    for t in sorted(enumerate_tubings(g, 1), key=lambda x: x.tubes):
        tube = t.tubes[0]
        fac = g.induced(tube)
        comp, _ = reconnected_complement(g, tube)
        seen = set()
        for inner in enumerate_tubings(fac):
            for outer in enumerate_tubings(comp):
                rep.checked += 1
                img = rho_hat(g, [tube], [inner], outer)
                if tube not in img.tubes or img.rank != 1 + inner.rank + outer.rank or img in seen:
                    rep.fail(f"tube={t}, inner={inner}, outer={outer}")
                    return rep
                seen.add(img)
    return rep


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def check_counting(bounds: Bounds) -> Report:
    rep = Report("counting")
    expect: list[tuple[str, Callable[[], int], int]] = []
    for n in range(1, bounds.n + 1):
        expect += [
            (f"complete {n} vertices", lambda n=n: count_tubings(build_graph(GraphFamily.COMPLETE, n), n - 1), factorial(n)),
            (f"cycle {n} vertices", lambda n=n: count_tubings(build_graph(GraphFamily.CYCLE, n), n - 1), comb(2 * (n - 1), n - 1)),
            (f"path {n} vertices", lambda n=n: count_tubings(build_graph(GraphFamily.PATH, n), n - 1), catalan(n)),
            (f"edgeless {n} vertices", lambda n=n: count_tubings(build_graph(GraphFamily.EDGELESS, n), n - 1), n),
            (f"edgeless {n} tubings", lambda n=n: count_tubings(build_graph(GraphFamily.EDGELESS, n)), 2**n - 1),
        ]
        if n >= 3:
            expect.append((f"cycle {n} facets", lambda n=n: f_vector(build_graph(GraphFamily.CYCLE, n))[n - 2], n * (n - 1)))
    for label, fn, want in expect:
        rep.checked += 1
        got = fn()
        if got != want:
            rep.fail(f"{label}: got {got}, expected {want}")
            return rep
    return rep


# ---------------------------------------------------------------------------
# dispatch

PROPERTIES = (
    "assoc(<alg>)",
    "hom(<map>)",
    "hom(<map>,faces)",
    "bialgebra",
    "coassoc(<alg>)",
    "null-right-factor",
    "theta-commute",
    "tonks-factorization",
    "max-preimage",
    "rho-hat",
    "formula-vs-template",
    "oracles",
    "module-consistency",
    "counting",
)


class UnknownProperty(ValueError):
    pass


def verify(prop: str, bounds: Bounds | None = None, seed: int = 0) -> Report:
    bounds = bounds or Bounds()
    m = re.fullmatch(r"([a-z-]+)(?:[(:]([^)]*)\)?)?", prop.strip().lower())
    if not m:
        raise UnknownProperty(prop)
    name, arg = m.group(1), (m.group(2) or "").strip()
    if name == "assoc":
        return check_assoc(arg or "wsym", bounds, seed)
    if name == "hom":
        parts = [x.strip() for x in arg.split(",") if x.strip()] or ["theta_c_hat"]
        return check_hom(parts[0].replace("-", "_"), bounds, faces="faces" in parts[1:])
    if name == "bialgebra":
        return check_bialgebra(bounds)
    if name == "coassoc":
        algs = [get_algebra(arg)] if arg else list(COPRODUCT_ALGEBRAS)
        reps = [check_coassoc(a, bounds) for a in algs]
        return _merge("coassoc", reps)
    if name == "null-right-factor":
        return check_null_right_factor(bounds)
    if name == "theta-commute":
        return check_theta_commute(bounds, seed)
    if name == "tonks-factorization":
        return check_tonks_factorization(bounds)
    if name == "max-preimage":
        return check_max_preimage(bounds)
    if name == "rho-hat":
        fam = GraphFamily(arg) if arg else GraphFamily.CYCLE
        return check_rho_hat(build_graph(fam, bounds.n))
    if name == "formula-vs-template":
        return check_formula(bounds)
    if name == "oracles":
        return check_oracles(bounds)
    if name == "module-consistency":
        return check_module(bounds)
    if name == "counting":
        return check_counting(bounds)
    raise UnknownProperty(prop)


def _merge(label: str, reps: list[Report]) -> Report:
    out = Report(label)
    for r in reps:
        out.checked += r.checked
        if not r.passed:
            out.fail(f"{r.property}: {r.counterexample}")
    return out


__all__ = ["Report", "Bounds", "PROPERTIES", "UnknownProperty", "verify", "random_graph", "catalan"]
