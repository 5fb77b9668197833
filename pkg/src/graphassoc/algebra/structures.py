"""Graded algebras on faces of graph associahedra: basis, products and coproducts.

All eight algebras share one product template. For a shuffle ``iota`` of ``[p+q]``:

* every tube of ``u`` (universal tube included) is carried to ``iota(t)`` and split into its
  connected components in the ``(p+q)``-node family graph;
* every proper tube ``s`` of ``v`` is carried to ``iota_hat(s)`` and absorbs each component of
  ``iota([p])`` it is adjacent to.

Complete graphs give SSym, paths YSym, cycles WSym and edgeless graphs DeltaSym; the ``faces``
variants allow every tubing instead of only vertices. Faces of edgeless graphs also carry the
null face, which is what right multiplication by the unit produces there.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

from ..graph_core import (
    GraphAssocError,
    GraphFamily,
    SimpleGraph,
    Tubing,
    _check_masks,
    build_graph,
    compress,
    enumerate_tubings,
    parse_tubing,
    popcount,
)
from .lincombo import LinCombo, TensorCombo
from .shuffles import Shuffle, map_mask, shuffles


class AlgebraMismatch(GraphAssocError):
    pass


class _Unit:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNIT"

    def __str__(self):
        return "1"

    def __reduce__(self):
        return (_Unit, ())


UNIT = _Unit()


@dataclass(frozen=True)
class NullFace:
    """The adjoined null face of the ``n``-node simplex."""

    n: int

    def __str__(self):
        return f"null({self.n})"


BasisElement = Union[_Unit, Tubing, NullFace]


@dataclass(frozen=True)
class AlgebraId:
    family: GraphFamily
    faces: bool = False

    @property
    def null(self) -> bool:
        return self.faces and self.family is GraphFamily.EDGELESS

    @property
    def name(self) -> str:
        base = _BASE_NAMES[self.family]
        return ("t" + base) if self.faces else base

    def graph(self, n: int) -> SimpleGraph:
        return build_graph(self.family, n)

    def __str__(self):
        return self.name


_BASE_NAMES = {
    GraphFamily.COMPLETE: "ssym",
    GraphFamily.PATH: "ysym",
    GraphFamily.CYCLE: "wsym",
    GraphFamily.EDGELESS: "dsym",
}

SSYM = AlgebraId(GraphFamily.COMPLETE)
YSYM = AlgebraId(GraphFamily.PATH)
WSYM = AlgebraId(GraphFamily.CYCLE)
DSYM = AlgebraId(GraphFamily.EDGELESS)
TSSYM = AlgebraId(GraphFamily.COMPLETE, True)
TYSYM = AlgebraId(GraphFamily.PATH, True)
TWSYM = AlgebraId(GraphFamily.CYCLE, True)
TDSYM = AlgebraId(GraphFamily.EDGELESS, True)

ALGEBRAS = {a.name: a for a in (SSYM, YSYM, WSYM, DSYM, TSSYM, TYSYM, TWSYM, TDSYM)}
ALGEBRAS.update({"tilde-" + a.name: AlgebraId(a.family, True) for a in (SSYM, YSYM, WSYM, DSYM)})
ALGEBRAS.update({"deltasym": DSYM, "tdeltasym": TDSYM, "tilde-deltasym": TDSYM})

COPRODUCT_ALGEBRAS = (SSYM, YSYM, TSSYM, TYSYM, TDSYM)


def get_algebra(name) -> AlgebraId:
    if isinstance(name, AlgebraId):
        return name
    try:
        return ALGEBRAS[name.lower()]
    except KeyError:
        raise AlgebraMismatch(f"unknown algebra {name!r}; choose from {sorted(ALGEBRAS)}") from None


def degree(b: BasisElement) -> int:
    if b is UNIT:
        return 0
    return b.n


def basis_key(b: BasisElement) -> tuple:
    if b is UNIT:
        return (0, 0, ())
    if isinstance(b, NullFace):
        return (b.n, 1, ())
    return (b.n, 0, b.sort_key())


def format_basis(b: BasisElement) -> str:
    return str(b)


def check_element(alg: AlgebraId, b) -> None:
    if b is UNIT:
        return
    if isinstance(b, NullFace):
        if not alg.null or b.n < 1:
            raise AlgebraMismatch(f"{b} is not a basis element of {alg}")
        return
    if not isinstance(b, Tubing):
        raise AlgebraMismatch(f"{b!r} is not a basis element")
    if b.graph != alg.graph(b.n):
        raise AlgebraMismatch(f"{b} is not a tubing of the {alg.family.value} graph")
    if not alg.faces and not b.is_vertex:
        raise AlgebraMismatch(f"{alg} only has vertices; {b} has rank {b.rank}")


@lru_cache(maxsize=None)
def basis(alg: AlgebraId, n: int) -> tuple:
    """Basis of the degree-``n`` component, canonically ordered."""
    if n == 0:
        return (UNIT,)
    items = tuple(enumerate_tubings(alg.graph(n), "all" if alg.faces else "vertices"))
    if alg.null:
        items += (NullFace(n),)
    return items


def element(alg: AlgebraId, b) -> LinCombo:
    check_element(alg, b)
    return LinCombo.basis(b)


def _as_combo(alg: AlgebraId, a) -> LinCombo:
    if isinstance(a, LinCombo):
        return a
    check_element(alg, a)
    return LinCombo.basis(a)


def product_term(alg: AlgebraId, u: BasisElement, v: BasisElement, s: Shuffle) -> BasisElement:
    """The single term of ``F_u * F_v`` indexed by the shuffle ``s``."""
    p, q = degree(u), degree(v)
    if p == 0 or q == 0:
        raise AlgebraMismatch("product_term needs two elements of positive degree")
    if (s.p, s.q) != (p, q):
        raise AlgebraMismatch(f"shuffle is ({s.p},{s.q}) but operands have degrees ({p},{q})")
    check_element(alg, u)
    check_element(alg, v)
    return _term(alg, u, v, s)


def _tubes_for_template(b, k: int) -> tuple[int, ...]:
    if isinstance(b, NullFace):
        return tuple(1 << i for i in range(k))
    return b.tubes


def _term(alg: AlgebraId, u, v, s: Shuffle):
    p, q = s.p, s.q
    n = p + q
    g = alg.graph(n)
    iota, hat = s.iota, s.iota_hat
    tubes = set()
    for t in _tubes_for_template(u, p) + ((1 << p) - 1,):
        tubes.update(g.components(map_mask(t, iota)))
    parts = g.components(s.image)
    for t in _tubes_for_template(v, q):
        grown = map_mask(t, hat)
        nb = g.neighbors(grown)
        for part in parts:
            if nb & part:
                grown |= part
        tubes.add(grown)
    tubes.discard(g.full)
    if alg.null:
        covered = 0
        for t in tubes:
            if t & (t - 1) == 0:
                covered |= t
        if covered == g.full:
            return NullFace(n)
    try:
        _check_masks(g, tubes)
    except GraphAssocError as exc:
        raise AssertionError(f"product term is not a tubing ({exc}); u={u}, v={v}, image={s.iota}") from None
    out = Tubing(g, tuple(tubes))
    if not alg.faces and not out.is_vertex:
        raise AssertionError(f"product of vertices is not a vertex: u={u}, v={v}, image={s.iota}")
    return out


@lru_cache(maxsize=200_000)
def _mul_basis(alg: AlgebraId, x, y) -> LinCombo:
    if x is UNIT:
        return LinCombo.basis(y)
    if y is UNIT:
        if alg.null:
            return LinCombo.basis(NullFace(degree(x)))
        return LinCombo.basis(x)
    return LinCombo.from_counts(_term(alg, x, y, s) for s in shuffles(degree(x), degree(y)))


def product(alg: AlgebraId, a, b) -> LinCombo:
    """Bilinear product; ``a`` and ``b`` may be basis elements or :class:`LinCombo` values."""
    alg = get_algebra(alg)
    a, b = _as_combo(alg, a), _as_combo(alg, b)
    for x in list(a) + list(b):
        check_element(alg, x)
    acc: dict = {}
    for x, cx in a.items():
        for y, cy in b.items():
            c = cx * cy
            for w, cw in _mul_basis(alg, x, y).items():
                acc[w] = acc.get(w, 0) + c * cw
    return LinCombo(acc)


def multiply_many(alg: AlgebraId, *factors) -> LinCombo:
    """Left-to-right product of several factors."""
    out = _as_combo(alg, factors[0])
    for f in factors[1:]:
        out = product(alg, out, f)
    return out


# ---------------------------------------------------------------------------
# coproducts by restriction


def restrict(alg: AlgebraId, b, lo: int, hi: int):
    """Restrict a basis element to the nodes ``lo..hi``, relabeled to ``1..hi-lo+1``."""
    size = hi - lo + 1
    if size <= 0:
        return UNIT
    if isinstance(b, NullFace):
        return NullFace(size)
    g = b.graph
    part = ((1 << size) - 1) << (lo - 1)
    pieces = set()
    for t in b.tubes:
        meet = t & part
        if meet:
            pieces.update(g.components(meet))
    if alg.null:
        covered = 0
        for t in pieces:
            covered |= t
        if covered == part:
            return NullFace(size)
    pieces.discard(part)
    sub = alg.graph(size)
    return Tubing(sub, tuple(compress(t, part) for t in pieces))


def coproduct(alg: AlgebraId, b) -> TensorCombo:
    """``sum_i b|[1..i] (x) b|[i+1..n]``."""
    alg = get_algebra(alg)
    if alg not in COPRODUCT_ALGEBRAS:
        raise AlgebraMismatch(f"no coproduct is defined on {alg}")
    if isinstance(b, LinCombo):
        acc: dict = {}
        for x, c in b.items():
            for k, v in coproduct(alg, x).items():
                acc[k] = acc.get(k, 0) + c * v
        return TensorCombo(acc)
    check_element(alg, b)
    n = degree(b)
    if n == 0:
        return TensorCombo.basis((UNIT, UNIT))
    return TensorCombo.from_counts(
        (restrict(alg, b, 1, i), restrict(alg, b, i + 1, n)) for i in range(n + 1)
    )


def tensor_product(alg: AlgebraId, x: TensorCombo, y: TensorCombo) -> TensorCombo:
    """Product in ``A (x) A``: ``(a (x) b)(c (x) d) = ac (x) bd``."""
    acc: dict = {}
    for (a, b), c1 in x.items():
        for (c, d), c2 in y.items():
            left = _mul_basis(alg, a, c)
            right = _mul_basis(alg, b, d)
            for l, cl in left.items():
                for r, cr in right.items():
                    acc[(l, r)] = acc.get((l, r), 0) + c1 * c2 * cl * cr
    return TensorCombo(acc)


def iterated_coproduct(alg: AlgebraId, b, side: str) -> LinCombo:
    """``(D (x) id) D`` for ``side="left"`` or ``(id (x) D) D`` for ``side="right"``, keyed by triples."""
    acc: dict = {}
    for (l, r), c in coproduct(alg, b).items():
        if side == "left":
            for (a, m), c2 in coproduct(alg, l).items():
                acc[(a, m, r)] = acc.get((a, m, r), 0) + c * c2
        else:
            for (m, z), c2 in coproduct(alg, r).items():
                acc[(l, m, z)] = acc.get((l, m, z), 0) + c * c2
    return LinCombo(acc)


# ---------------------------------------------------------------------------
# text forms


def parse_element(alg: AlgebraId, text: str) -> BasisElement:
    """Parse ``1``, ``null(n)``, a tubing ``n=..;{..}``, or (by algebra) a permutation,
    ordered partition or bracketed tree."""
    from .. import bijections

    alg = get_algebra(alg)
    s = text.strip()
    if s == "1":
        return UNIT
    m = re.fullmatch(r"null\((\d+)\)", s)
    if m:
        b = NullFace(int(m.group(1)))
    elif s.startswith("n="):
        from ..graph_core import parse_tubing_text

        n, _ = parse_tubing_text(s)
        b = parse_tubing(s, alg.graph(n))
    elif alg.family is GraphFamily.COMPLETE and "{" in s:
        b = bijections.partition_to_tubing(bijections.parse_partition(s))
    elif alg.family is GraphFamily.COMPLETE and re.fullmatch(r"\(?[\d,\s]+\)?", s):
        b = bijections.perm_to_tubing(bijections.parse_permutation(s))
    elif alg.family is GraphFamily.PATH and set(s) <= set("() "):
        b = bijections.tree_to_tubing(bijections.parse_tree(s))
    else:
        raise GraphAssocError(f"cannot read {text!r} as a basis element of {alg}")
    check_element(alg, b)
    return b


def format_combo(combo: LinCombo) -> list[str]:
    lines = []
    if isinstance(combo, TensorCombo):
        for (l, r), c in sorted(combo.items(), key=lambda kv: (basis_key(kv[0][0]), basis_key(kv[0][1]))):
            lines.append(f"{c} * {l} (x) {r}")
    else:
        for b, c in combo.sorted_items(basis_key):
            lines.append(f"{c} * {b}")
    return lines


def combo_to_json(alg: AlgebraId, combo: LinCombo) -> dict:
    def coeff(c):
        return c if isinstance(c, int) else str(c)

    degrees = set()
    terms = []
    if isinstance(combo, TensorCombo):
        for (l, r), c in sorted(combo.items(), key=lambda kv: (basis_key(kv[0][0]), basis_key(kv[0][1]))):
            degrees.add(degree(l) + degree(r))
            terms.append({"coeff": coeff(c), "basis": [str(l), str(r)]})
    else:
        for b, c in combo.sorted_items(basis_key):
            degrees.add(degree(b))
            terms.append({"coeff": coeff(c), "basis": str(b)})
    deg = degrees.pop() if len(degrees) == 1 else None
    return {"algebra": alg.name, "degree": deg, "terms": terms}


def combo_from_json(payload: dict) -> tuple[AlgebraId, LinCombo]:
    alg = get_algebra(payload["algebra"])
    items = []
    tensor = False
    for term in payload["terms"]:
        basis_text = term["basis"]
        if isinstance(basis_text, list):
            tensor = True
            key = tuple(parse_element(alg, x) for x in basis_text)
        else:
            key = parse_element(alg, basis_text)
        items.append((key, term["coeff"]))
    return alg, (TensorCombo(items) if tensor else LinCombo(items))


def all_elements(alg: AlgebraId, degrees: Iterable[int]):
    for n in degrees:
        yield from basis(alg, n)
