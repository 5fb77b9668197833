"""Acceptance criteria, one test per criterion; the summary prints one line each."""

import time
from math import comb, factorial

from graphassoc import bijections as bij
from graphassoc.algebra import (
    COPRODUCT_ALGEBRAS,
    DSYM,
    SSYM,
    UNIT,
    WSYM,
    Bounds,
    Hom,
    LinCombo,
    TensorCombo,
    basis,
    coproduct,
    product,
    simplex_vertex,
    verify,
)
from graphassoc.graph_core import GraphFamily, build_graph, count_tubings, f_vector


def _check(prop, bounds, seed=0):
    rep = verify(prop, bounds, seed)
    print(rep)
    assert rep.passed, rep.counterexample
    return rep


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def test_ac1_counting():
    """vertex, face and facet counts of the four families, exact, under 30 s"""
    start = time.perf_counter()
    for n in range(1, 7):
        assert count_tubings(build_graph(GraphFamily.COMPLETE, n), n - 1) == factorial(n)
    assert [count_tubings(build_graph(GraphFamily.CYCLE, n), n - 1) for n in range(2, 6)] == [2, 6, 20, 70]
    for n in range(1, 8):
        assert count_tubings(build_graph(GraphFamily.CYCLE, n), n - 1) == comb(2 * (n - 1), n - 1)
        assert count_tubings(build_graph(GraphFamily.PATH, n), n - 1) == catalan(n)
        assert count_tubings(build_graph(GraphFamily.EDGELESS, n), n - 1) == n
        assert count_tubings(build_graph(GraphFamily.EDGELESS, n)) == 2**n - 1
    for n in range(3, 7):
        assert f_vector(build_graph(GraphFamily.CYCLE, n))[n - 2] == n * (n - 1)
    assert time.perf_counter() - start < 30


def test_ac2_worked_examples():
    """simplex 3,4,3 product, five-term permutation coproduct, cyclohedron (2,3) sum of 10"""
    e = simplex_vertex
    assert product(DSYM, e(2, 2), e(2, 3)) == LinCombo([(e(2, 5), 3), (e(3, 5), 4), (e(4, 5), 3)])
    p = bij.perm_to_tubing
    want = TensorCombo(
        (k, 1)
        for k in [
            (UNIT, p((1, 3, 4, 2))),
            (p((1,)), p((2, 3, 1))),
            (p((1, 2)), p((2, 1))),
            (p((1, 2, 3)), p((1,))),
            (p((1, 3, 4, 2)), UNIT),
        ]
    )
    assert coproduct(SSYM, p((1, 3, 4, 2))) == want
    for u in basis(WSYM, 2):
        for v in basis(WSYM, 3):
            assert product(WSYM, u, v).coefficient_sum() == 10


def test_ac3_oracle_equivalence():
    """template products equal the permutation, tree, partition and closed-formula oracles"""
    _check("oracles", Bounds(n=6))
    _check("formula-vs-template", Bounds(n=6))


def test_ac4_homomorphisms():
    """projection maps commute with products and are onto"""
    for which in Hom:
        _check(f"hom({which.value})", Bounds(n=6))
        _check(f"hom({which.value},faces)", Bounds(n=5))


def test_ac5_associativity():
    """cyclohedra and simplex algebras, with and without faces, exhaustive to 6 plus 1000 samples at 7-8"""
    for alg in ("wsym", "dsym", "twsym", "tdsym"):
        rep = _check(f"assoc({alg})", Bounds(n=6, limit=1000), seed=2024)
        assert rep.checked >= 1000


def test_ac6_bialgebra():
    """null simplex algebra is a one-sided bialgebra; every coproduct is coassociative"""
    _check("bialgebra", Bounds(n=6))
    for alg in COPRODUCT_ALGEBRAS:
        _check(f"coassoc({alg.name})", Bounds(n=6))


def test_ac7_projection_laws():
    """edge-deletion order independence, Tonks factorization, maximal preimages"""
    rep = _check("theta-commute", Bounds(n=6, limit=200), seed=11)
    assert rep.checked == 2000
    _check("tonks-factorization", Bounds(n=5))
    _check("max-preimage", Bounds(n=5))


def test_ac8_rho_hat_embedding():
    """facet inclusions of the 6-cyclohedron are injective with additive rank"""
    _check("rho-hat(cycle)", Bounds(n=6))
