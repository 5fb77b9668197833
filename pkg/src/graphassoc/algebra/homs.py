"""Algebra maps induced by the named projections, and the module actions they define."""

from __future__ import annotations

import enum
from functools import lru_cache

from ..projections import NamedProjection, lift_named, project
from .lincombo import LinCombo
from .structures import (
    DSYM,
    SSYM,
    UNIT,
    WSYM,
    YSYM,
    AlgebraId,
    AlgebraMismatch,
    _as_combo,
    basis,
    check_element,
    product,
)


class Hom(enum.Enum):
    THETA_C_HAT = "theta_c_hat"
    THETA_W_HAT = "theta_w_hat"
    THETA_DELTA_HAT = "theta_delta_hat"
    TAU_HAT = "tau_hat"


_HOMS = {
    Hom.THETA_C_HAT: (SSYM, WSYM, (NamedProjection.TONKS_C,)),
    Hom.THETA_W_HAT: (WSYM, YSYM, (NamedProjection.TONKS_W,)),
    Hom.THETA_DELTA_HAT: (SSYM, DSYM, (NamedProjection.TONKS_DELTA,)),
    Hom.TAU_HAT: (SSYM, YSYM, (NamedProjection.TONKS_P,)),
}


def _faces(alg: AlgebraId) -> AlgebraId:
    return AlgebraId(alg.family, True)


def hom_endpoints(which, faces: bool = False) -> tuple[AlgebraId, AlgebraId]:
    src, dst, _ = _HOMS[Hom(which)]
    if faces:
        return _faces(src), _faces(dst)
    return src, dst


def _map_basis(which: Hom, b):
    if b is UNIT:
        return UNIT
    for tag in _HOMS[which][2]:
        b = project(tag, b)
    return b


def hom_map(which, a, faces: bool = False) -> LinCombo:
    """Linear extension of a named projection, ``F_u -> F_{Theta(u)}``."""
    which = Hom(which)
    src, _ = hom_endpoints(which, faces)
    a = _as_combo(src, a)
    for b in a:
        check_element(src, b)
    return a.map_keys(lambda b: _map_basis(which, b))


@lru_cache(maxsize=None)
def fiber(which, b, faces: bool = False) -> tuple:
    """Every source basis element mapped onto ``b``."""
    which = Hom(which)
    src, dst = hom_endpoints(which, faces)
    check_element(dst, b)
    n = 0 if b is UNIT else b.n
    return tuple(x for x in basis(src, n) if _map_basis(which, x) == b)


class Pair(enum.Enum):
    SSYM_ON_WSYM = "ssym-wsym"
    WSYM_ON_YSYM = "wsym-ysym"


_PAIRS = {
    Pair.SSYM_ON_WSYM: Hom.THETA_C_HAT,
    Pair.WSYM_ON_YSYM: Hom.THETA_W_HAT,
}


def default_lift(pair, b):
    """A vertex preimage of ``b`` under the projection of ``pair``."""
    which = _PAIRS[Pair(pair)]
    if b is UNIT:
        return UNIT
    return lift_named(_HOMS[which][2][0], b, vertex=True)


def module_action(side: str, pair, a, b, lift=None) -> LinCombo:
    """Act by ``a`` on a projected element ``b`` (``side`` says where ``a`` sits).

    ``b`` is lifted termwise (by ``lift`` if given, else :func:`default_lift`), multiplied
    upstairs and projected back down.
    """
    pair = Pair(pair)
    which = _PAIRS[pair]
    src, dst = hom_endpoints(which)
    a = _as_combo(src, a)
    b = _as_combo(dst, b)
    for x in b:
        check_element(dst, x)
    lifter = lift or (lambda x: default_lift(pair, x))
    up = LinCombo({})
    for x, c in b.items():
        y = lifter(x)
        if _map_basis(which, y) != x:
            raise AlgebraMismatch(f"{y} is not a preimage of {x}")
        up = up + LinCombo.basis(y, c)
    if side == "left":
        prod = product(src, a, up)
    elif side == "right":
        prod = product(src, up, a)
    else:
        raise AlgebraMismatch("side must be 'left' or 'right'")
    return hom_map(which, prod)


__all__ = [
    "Hom",
    "Pair",
    "hom_endpoints",
    "hom_map",
    "fiber",
    "default_lift",
    "module_action",
]
