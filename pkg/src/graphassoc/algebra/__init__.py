"""Graded algebras on faces of graph associahedra."""

from .formula import simplex_formula, simplex_vertex
from .homs import Hom, Pair, default_lift, fiber, hom_endpoints, hom_map, module_action
from .lincombo import LinCombo, TensorCombo
from .shuffles import Shuffle, map_mask, shuffles
from .structures import (
    ALGEBRAS,
    COPRODUCT_ALGEBRAS,
    DSYM,
    SSYM,
    TDSYM,
    TSSYM,
    TWSYM,
    TYSYM,
    UNIT,
    WSYM,
    YSYM,
    AlgebraId,
    AlgebraMismatch,
    NullFace,
    basis,
    basis_key,
    check_element,
    combo_from_json,
    combo_to_json,
    coproduct,
    degree,
    element,
    format_basis,
    format_combo,
    get_algebra,
    iterated_coproduct,
    multiply_many,
    parse_element,
    product,
    product_term,
    restrict,
    tensor_product,
)
from .verify import PROPERTIES, Bounds, Report, verify

__all__ = [name for name in dir() if not name.startswith("_")]
