"""Finite formal sums with exact coefficients."""

from __future__ import annotations

from collections.abc import Mapping
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable


class LinCombo(Mapping):
    """Immutable sparse vector ``basis element -> coefficient``; zero coefficients are never stored."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, c in items:
            if c:
                c = acc.get(key, 0) + c
                if c:
                    acc[key] = c
                else:
                    acc.pop(key, None)
        self._terms = acc
        self._hash = None

    @classmethod
    def basis(cls, key, coeff=1):
        return cls(((key, coeff),))

    @classmethod
    def from_counts(cls, keys: Iterable):
        acc: dict = {}
        for k in keys:
            acc[k] = acc.get(k, 0) + 1
        out = cls.__new__(cls)
        out._terms = acc
        out._hash = None
        return out

    def __getitem__(self, key):
        return self._terms.get(key, 0)

    def __contains__(self, key):
        return key in self._terms

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, LinCombo):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if not isinstance(other, LinCombo):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            v = acc.get(k, 0) + c
            if v:
                acc[k] = v
            else:
                acc.pop(k, None)
        return type(self)(acc)

    def __neg__(self):
        return type(self)({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LinCombo):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        if not isinstance(c, (int, Fraction, Rational)):
            raise TypeError("scalars must be exact (int or Fraction)")
        return type(self)({k: c * v for k, v in self._terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def map_keys(self, fn: Callable):
        """Linear extension of ``fn`` on basis elements (images may collide and add up)."""
        acc: dict = {}
        for k, c in self._terms.items():
            img = fn(k)
            acc[img] = acc.get(img, 0) + c
        return type(self)(acc)

    def coefficient_sum(self):
        return sum(self._terms.values())

    def sorted_items(self, key: Callable | None = None):
        return sorted(self._terms.items(), key=(lambda kv: key(kv[0])) if key else None)

    def __repr__(self):
        if not self._terms:
            return f"{type(self).__name__}(0)"
        body = " + ".join(f"{c}*{k}" for k, c in self._terms.items())
        return f"{type(self).__name__}({body})"


class TensorCombo(LinCombo):
    """A :class:`LinCombo` keyed by pairs ``(left, right)``."""

    __slots__ = ()
