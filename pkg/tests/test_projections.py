import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphassoc import bijections as bij
from graphassoc.graph_core import (
    GraphAssocError,
    GraphFamily,
    GraphMismatch,
    SimpleGraph,
    Tubing,
    build_graph,
    enumerate_tubings,
    face_leq,
    mask_of,
    parse_tubing,
    reconnected_complement,
    validate_tubing,
)
from graphassoc.projections import (
    FactorGraphMismatch,
    NamedProjection,
    OuterGraphMismatch,
    PartsNotFarApart,
    ProjectionError,
    eta,
    lift_named,
    max_preimage,
    max_preimage_edges,
    named_edge_set,
    project,
    rho_hat,
    theta_edge,
    theta_edges,
    theta_sequence,
    tonks_c,
    tonks_delta,
    tonks_p,
    tonks_w,
)

C, Y, W, D = GraphFamily.COMPLETE, GraphFamily.PATH, GraphFamily.CYCLE, GraphFamily.EDGELESS


def brute_theta(g, edges, t):
    """Two-case rule: keep a tube if it is still connected, else replace it by its pieces."""
    h = nx.Graph()
    h.add_nodes_from(range(1, g.n + 1))
    h.add_edges_from(set(g.edges) - {tuple(sorted(e)) for e in edges})
    out = set()
    for tube in t.tube_sets():
        for comp in nx.connected_components(h.subgraph(tube)):
            out.add(frozenset(comp))
    return out


@st.composite
def graph_tubing_edges(draw, max_n=6):
    n = draw(st.integers(2, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=1))
    g = SimpleGraph(n, edges)
    t = draw(st.sampled_from(enumerate_tubings(g)))
    es = draw(st.lists(st.sampled_from(sorted(g.edges)), unique=True))
    return g, t, es


class TestTheta:
    def test_complete3_chord(self):
        g = build_graph(C, 3)
        t = parse_tubing("n=3;{1}{1,3}", g)
        out = theta_edge(g, (1, 3), t)
        assert out.graph == build_graph(Y, 3)
        assert str(out) == "n=3;{1}{3}"
        assert set(out.tube_sets()) == brute_theta(g, [(1, 3)], t)

    def test_untouched_tubing(self):
        g = build_graph(C, 4)
        t = parse_tubing("n=4;{1}{1,2}{1,2,3}", g)
        assert theta_edge(g, (1, 4), t).tubes == t.tubes

    def test_empty_tubing(self):
        g = build_graph(W, 5)
        assert theta_edges(g, g.edges, Tubing(g, ())).rank == 0

    def test_no_edges_is_identity(self):
        g = build_graph(C, 4)
        for t in enumerate_tubings(g):
            assert theta_edges(g, [], t) == t

    def test_missing_edge(self):
        g = build_graph(Y, 3)
        with pytest.raises(GraphAssocError):
            theta_edge(g, (1, 3), Tubing(g, ()))

    def test_wrong_graph(self):
        with pytest.raises(GraphMismatch):
            theta_edge(build_graph(C, 3), (1, 2), Tubing(build_graph(Y, 3), ()))

    def test_permutation_1243_both_orders(self):
        g = build_graph(C, 4)
        t = bij.perm_to_tubing((1, 2, 4, 3))
        chords = sorted(named_edge_set(NamedProjection.TONKS_P, g))
        assert chords == [(1, 3), (1, 4), (2, 4)]
        forward = theta_sequence(g, chords, t)
        backward = theta_sequence(g, chords[::-1], t)
        assert forward == backward == tonks_p(t)
        assert set(forward.tube_sets()) == brute_theta(g, chords, t)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_tonks_delta_of_vertices(self, n):
        for s in bij.permutations(n):
            out = tonks_delta(bij.perm_to_tubing(s))
            missing = bij.perm_inverse(s)[n - 1]
            assert out.graph == build_graph(D, n)
            assert set(out.tube_sets()) == {frozenset([i]) for i in range(1, n + 1) if i != missing}

    @settings(max_examples=150, deadline=None)
    @given(graph_tubing_edges(), st.randoms(use_true_random=False))
    def test_order_independent(self, case, rnd):
        g, t, es = case
        want = theta_edges(g, es, t)
        assert set(want.tube_sets()) == brute_theta(g, es, t)
        for _ in range(5):
            order = rnd.sample(es, len(es))
            assert theta_sequence(g, order, t) == want

    @settings(max_examples=150, deadline=None)
    @given(graph_tubing_edges())
    def test_valid_and_rank_nondecreasing(self, case):
        g, t, es = case
        out = theta_edges(g, es, t)
        assert validate_tubing(out.graph, [set(s) for s in out.tube_sets()]) == out
        assert out.rank >= t.rank

    @settings(max_examples=100, deadline=None)
    @given(graph_tubing_edges(5))
    def test_nesting_preserved(self, case):
        g, t, es = case
        h = g.without_edges(es)
        for a in t.tubes:
            for b in t.tubes:
                if a & b == a:
                    for piece in h.components(a):
                        assert any(piece & q == piece for q in h.components(b))

    @pytest.mark.parametrize("family", [C, W, Y])
    @pytest.mark.parametrize("n", range(2, 6))
    def test_order_preserving(self, family, n):
        g = build_graph(family, n)
        es = sorted(g.edges)[::2]
        ts = enumerate_tubings(g)
        img = {t: theta_edges(g, es, t) for t in ts}
        for a in ts:
            for b in ts:
                if face_leq(a, b):
                    assert face_leq(img[a], img[b])

    @pytest.mark.parametrize("n", range(2, 6))
    def test_surjective(self, n):
        g = build_graph(C, n)
        for tag, dst in [(NamedProjection.TONKS_P, Y), (NamedProjection.TONKS_C, W), (NamedProjection.TONKS_DELTA, D)]:
            image = {project(tag, t) for t in enumerate_tubings(g)}
            assert image == set(enumerate_tubings(build_graph(dst, n)))


class TestNamedProjections:
    @pytest.mark.parametrize("n", range(1, 8))
    def test_tonks_p_edge_set(self, n):
        want = {(i, i + k) for i in range(1, n - 1) for k in range(2, n - i + 1)}
        assert named_edge_set(NamedProjection.TONKS_P, build_graph(C, n)) == want

    @pytest.mark.parametrize("n", range(3, 8))
    def test_tonks_w_deletes_closing_edge(self, n):
        assert named_edge_set(NamedProjection.TONKS_W, build_graph(W, n)) == {(1, n)}

    @pytest.mark.parametrize("n", range(1, 6))
    def test_w_after_c_is_p(self, n):
        for t in enumerate_tubings(build_graph(C, n)):
            assert tonks_w(tonks_c(t)) == tonks_p(t)

    def test_source_checked(self):
        with pytest.raises(GraphMismatch):
            tonks_w(Tubing(build_graph(C, 4), ()))

    def test_delta_accepts_any_graph(self):
        g = build_graph(Y, 4)
        assert tonks_delta(parse_tubing("n=4;{2,3}{3}", g)).graph == build_graph(D, 4)


class TestEta:
    def test_edgeless_singletons(self):
        g = build_graph(D, 3)
        parts = eta(g, parse_tubing("n=3;{1}{3}", g))
        assert [p.n for p in parts] == [1, 1, 1] and all(p.rank == 0 for p in parts)

    def test_edge_plus_isolated(self):
        g = SimpleGraph(3, [(1, 2)])
        a, b = eta(g, validate_tubing(g, [{1}]))
        assert a.graph == build_graph(Y, 2) and a.tube_sets() == [{1}]
        assert b.n == 1 and b.rank == 0

    def test_empty(self):
        g = SimpleGraph(4, [(1, 2), (3, 4)])
        assert all(p.rank == 0 for p in eta(g, Tubing(g, ())))

    def test_connected_rejected(self):
        g = build_graph(Y, 3)
        with pytest.raises(ProjectionError):
            eta(g, Tubing(g, ()))

    def test_relabels(self):
        g = SimpleGraph(5, [(1, 3), (2, 4), (4, 5)])
        a, b = eta(g, validate_tubing(g, [{3}, {4, 5}, {5}]))
        assert a.tube_sets() == [{2}] and b.tube_sets() == [{2, 3}, {3}]

    @pytest.mark.parametrize("n", range(2, 6))
    def test_surjective(self, n):
        g = build_graph(D, n)
        assert {tuple(eta(g, t)) for t in enumerate_tubings(g)} == {tuple(Tubing(build_graph(D, 1), ()) for _ in range(n))}
        g = SimpleGraph(n + 1, [(1, 2)] + ([(3, 4)] if n >= 4 else []))
        seen = {tuple(eta(g, t)) for t in enumerate_tubings(g)}
        factors = [enumerate_tubings(g.induced(c)) for c in g.components()]
        assert seen == set(itertools.product(*factors))


class TestRhoHat:
    @pytest.mark.parametrize("p,q", [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (3, 1), (2, 3)])
    def test_complete_one_part_is_ssym_term(self, p, q):
        from graphassoc.algebra.oracles import ssym_product
        from graphassoc.algebra.shuffles import shuffles

        n = p + q
        g = build_graph(C, n)
        for u in bij.permutations(p):
            for v in bij.permutations(q):
                got = []
                for s in shuffles(p, q):
                    got.append(rho_hat(g, [s.image], [bij.perm_to_tubing(u)], bij.perm_to_tubing(v)))
                oracle = ssym_product(u, v)
                assert {bij.tubing_to_perm(x) for x in got} == set(oracle)
                assert len(set(got)) == len(got) == len(oracle)

    def test_bare_parts(self):
        g = build_graph(Y, 6)
        parts = [mask_of({1, 2}), mask_of({4})]
        factors = [Tubing(g.induced(m), ()) for m in parts]
        comp, _ = reconnected_complement(g, parts[0] | parts[1])
        out = rho_hat(g, parts, factors, Tubing(comp, ()))
        assert set(out.tube_sets()) == {frozenset({1, 2}), frozenset({4})}

    def test_cycle6_arc(self):
        g = build_graph(W, 6)
        arc = mask_of({2, 3, 4, 5})
        fac = g.induced(arc)
        comp, _ = reconnected_complement(g, arc)
        assert fac == build_graph(Y, 4) and comp == build_graph(C, 2)
        seen = set()
        for inner in enumerate_tubings(fac):
            for outer in enumerate_tubings(comp):
                img = rho_hat(g, [arc], [inner], outer)
                assert arc in img.tubes
                assert img.rank == 1 + inner.rank + outer.rank
                seen.add(img)
        assert len(seen) == len(enumerate_tubings(fac)) * len(enumerate_tubings(comp))

    def test_adjacency_expansion(self):
        g = build_graph(Y, 5)
        part = mask_of({3})
        comp, _ = reconnected_complement(g, part)
        outer = parse_tubing("n=4;{2,3}", comp)
        out = rho_hat(g, [part], [Tubing(g.induced(part), ())], outer)
        assert set(out.tube_sets()) == {frozenset({3}), frozenset({2, 3, 4})}

    def test_parts_not_far_apart(self):
        g = build_graph(Y, 4)
        with pytest.raises(PartsNotFarApart):
            rho_hat(g, [{1}, {2}], [Tubing(build_graph(Y, 1), ())] * 2, Tubing(build_graph(Y, 2), ()))

    def test_factor_graph_mismatch(self):
        g = build_graph(Y, 4)
        with pytest.raises(FactorGraphMismatch):
            rho_hat(g, [{1, 2}], [Tubing(build_graph(D, 2), ())], Tubing(build_graph(Y, 2), ()))

    def test_outer_graph_mismatch(self):
        g = build_graph(Y, 4)
        with pytest.raises(OuterGraphMismatch):
            rho_hat(g, [{1, 2}], [Tubing(build_graph(Y, 2), ())], Tubing(build_graph(D, 2), ()))

    def test_two_parts_in_cycle(self):
        g = build_graph(W, 7)
        parts = [mask_of({1, 2}), mask_of({4, 5})]
        comp, _ = reconnected_complement(g, parts[0] | parts[1])
        seen = set()
        for a in enumerate_tubings(g.induced(parts[0])):
            for b in enumerate_tubings(g.induced(parts[1])):
                for outer in enumerate_tubings(comp):
                    img = rho_hat(g, parts, [a, b], outer)
                    assert img.rank == 2 + a.rank + b.rank + outer.rank
                    seen.add(img)
        assert len(seen) == 3 * 3 * len(enumerate_tubings(comp))


class TestMaxPreimage:
    def test_already_valid(self):
        g = build_graph(C, 3)
        t = parse_tubing("n=3;{1}{1,2}", build_graph(Y, 3))
        out = max_preimage(g, (1, 3), t)
        assert out.graph == g and set(out.tube_sets()) == set(t.tube_sets())

    def test_merges_ends(self):
        g = build_graph(C, 3)
        t = parse_tubing("n=3;{1}{3}", build_graph(Y, 3))
        out = max_preimage(g, (1, 3), t)
        assert theta_edge(g, (1, 3), out) == t
        assert frozenset({1, 3}) in out.tube_sets()

    @pytest.mark.parametrize("family", list(GraphFamily))
    @pytest.mark.parametrize("n", range(2, 6))
    def test_projects_back(self, family, n):
        g = build_graph(family, n)
        for e in sorted(g.edges):
            for t in enumerate_tubings(g.without_edges([e])):
                assert theta_edge(g, e, max_preimage(g, e, t)) == t

    def test_cycle4_from_complete4(self):
        g = build_graph(C, 4)
        es = named_edge_set(NamedProjection.TONKS_C, g)
        for t in enumerate_tubings(build_graph(W, 4)):
            assert theta_edges(g, es, max_preimage_edges(g, es, t)) == t

    @pytest.mark.parametrize("tag", list(NamedProjection))
    @pytest.mark.parametrize("n", range(1, 6))
    def test_vertex_lifts(self, tag, n):
        dst = {NamedProjection.TONKS_P: Y, NamedProjection.TONKS_C: W,
               NamedProjection.TONKS_W: Y, NamedProjection.TONKS_DELTA: D}[tag]
        for t in enumerate_tubings(build_graph(dst, n), "vertices"):
            up = lift_named(tag, t, vertex=True)
            assert up.is_vertex and project(tag, up) == t

