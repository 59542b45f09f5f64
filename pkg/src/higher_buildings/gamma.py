"""Value group arithmetic and ideal classes of a rank <= 2 local field.

The value group is Z**dim with the lexicographic order in which the last
(outer) coordinate dominates.  For dim = 2 the coordinates are written
``(inner, outer)`` and the two uniformizers t1, t2 have values (1, 0) and
(0, 1).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Union

__all__ = [
    "FieldConfig",
    "GammaElement",
    "IdealKind",
    "IdealClass",
    "as_gamma",
    "gamma_cmp",
    "principal",
    "partial",
    "full",
    "monomial_member",
    "ideal_includes",
    "ideal_translate",
    "oclosure",
    "grade",
]


@dataclass(frozen=True)
class FieldConfig:
    """Rank of the field and the names used for its uniformizers."""

    dim: int
    params: tuple = ("t1", "t2")

    def __post_init__(self):
        if self.dim not in (0, 1, 2):
            raise ValueError(f"unsupported field dimension {self.dim}")


@dataclass(frozen=True)
class GammaElement:
    """An element of Z**dim, ordered with the last coordinate dominant."""

    coords: tuple

    @property
    def dim(self):
        return len(self.coords)

    @property
    def outer(self):
        return self.coords[-1] if self.coords else 0

    @property
    def inner(self):
        return self.coords[0] if len(self.coords) == 2 else 0

    def key(self):
        return tuple(reversed(self.coords))

    def __add__(self, other):
        if type(other) is not GammaElement:
            other = as_gamma(other, self.dim)
        return GammaElement(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if type(other) is not GammaElement:
            other = as_gamma(other, self.dim)
        return GammaElement(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return GammaElement(tuple(-a for a in self.coords))

    def scale(self, k):
        return GammaElement(tuple(k * a for a in self.coords))

    def __lt__(self, other):
        if type(other) is not GammaElement:
            other = as_gamma(other, self.dim)
        return self.coords[::-1] < other.coords[::-1]

    def __le__(self, other):
        if type(other) is not GammaElement:
            other = as_gamma(other, self.dim)
        return self.coords[::-1] <= other.coords[::-1]

    def __gt__(self, other):
        if type(other) is not GammaElement:
            other = as_gamma(other, self.dim)
        return self.coords[::-1] > other.coords[::-1]

    def __ge__(self, other):
        if type(other) is not GammaElement:
            other = as_gamma(other, self.dim)
        return self.coords[::-1] >= other.coords[::-1]

    def is_zero(self):
        return not any(self.coords)

    def __str__(self):
        if len(self.coords) == 1:
            return str(self.coords[0])
        return "(" + ",".join(str(c) for c in self.coords) + ")"

    __repr__ = __str__


def as_gamma(value, dim=None) -> GammaElement:
    """Coerce an int, tuple or GammaElement into a GammaElement."""
    if type(value) is GammaElement:
        if dim is None or len(value.coords) == dim:
            return value
        g = value
    elif isinstance(value, GammaElement):
        g = value
    elif isinstance(value, int):
        g = GammaElement((value,))
    else:
        g = GammaElement(tuple(int(v) for v in value))
    if dim is not None and g.dim != dim:
        raise ValueError(f"expected a value of dimension {dim}, got {g}")
    return g


def zero(dim):
    return GammaElement((0,) * dim)


def gamma_cmp(a, b) -> int:
    a, b = as_gamma(a), as_gamma(b)
    if a.dim != b.dim:
        raise ValueError("comparing values of different dimension")
    ka, kb = a.key(), b.key()
    return (ka > kb) - (ka < kb)


class IdealKind(enum.IntEnum):
    PRINCIPAL = 0
    PARTIAL = 1
    FULL = 2


@dataclass(frozen=True)
class IdealClass:
    """A fractional ideal of the ring of integers, up to units.

    Three kinds occur.  ``PRINCIPAL`` is generated by the monomial of value
    ``gamma``.  ``PARTIAL`` (dim 2 only) is the ideal of all monomials whose
    outer exponent is at least ``level``.  ``FULL`` is the whole field.
    """

    kind: IdealKind
    dim: int
    gamma: Union[GammaElement, None] = None
    level: Union[int, None] = None

    def __post_init__(self):
        if self.kind == IdealKind.PRINCIPAL:
            if self.gamma is None or self.gamma.dim != self.dim or self.dim == 0:
                raise ValueError("principal ideal needs a value of matching dimension")
        elif self.kind == IdealKind.PARTIAL:
            if self.dim != 2:
                raise ValueError("partially infinite ideals need a 2-dimensional field")
            if self.level is None:
                raise ValueError("partially infinite ideal needs a level")

    @property
    def is_full(self):
        return self.kind == IdealKind.FULL

    @property
    def is_principal(self):
        return self.kind == IdealKind.PRINCIPAL

    @property
    def is_partial(self):
        return self.kind == IdealKind.PARTIAL

    def outer_level(self):
        """Smallest outer exponent occurring in the ideal (None for FULL)."""
        if self.is_principal:
            return self.gamma.outer
        if self.is_partial:
            return self.level
        return None

    def sort_key(self):
        if self.is_principal:
            return (0,) + self.gamma.key()
        if self.is_partial:
            return (1, self.level)
        return (2,)

    def __str__(self):
        if self.is_principal:
            return f"P{self.gamma}"
        if self.is_partial:
            return f"Q({self.level})"
        return "Full"

    __repr__ = __str__


def principal(*coords) -> IdealClass:
    if len(coords) == 1 and not isinstance(coords[0], int):
        g = as_gamma(coords[0])
    else:
        g = GammaElement(tuple(coords))
    return IdealClass(IdealKind.PRINCIPAL, g.dim, gamma=g)


def partial(level) -> IdealClass:
    return IdealClass(IdealKind.PARTIAL, 2, level=int(level))


def full(dim) -> IdealClass:
    return IdealClass(IdealKind.FULL, dim)


def monomial_member(ideal: IdealClass, monomial) -> bool:
    """Does the monomial with the given exponent vector lie in the ideal?"""
    g = as_gamma(monomial, ideal.dim)
    if ideal.is_full:
        return True
    if ideal.is_partial:
        return g.outer >= ideal.level
    return g >= ideal.gamma


def ideal_includes(big: IdealClass, small: IdealClass) -> bool:
    """Return True when ``big`` contains ``small``."""
    if big.dim != small.dim:
        raise ValueError("ideals over fields of different dimension")
    if big.is_full:
        return True
    if small.is_full:
        return False
    if big.is_principal:
        if small.is_principal:
            return small.gamma >= big.gamma
        # a partial ideal sits inside P(a) only if it starts strictly above a's level
        return small.level > big.gamma.outer
    if small.is_principal:
        return small.gamma.outer >= big.level
    return small.level >= big.level


def ideal_translate(ideal: IdealClass, gamma) -> IdealClass:
    """Multiply the ideal by the monomial of value ``gamma``."""
    g = as_gamma(gamma, ideal.dim)
    if ideal.is_principal:
        return IdealClass(IdealKind.PRINCIPAL, ideal.dim, gamma=ideal.gamma + g)
    if ideal.is_partial:
        return IdealClass(IdealKind.PARTIAL, 2, level=ideal.level + g.outer)
    return ideal


def oclosure(ideal: IdealClass) -> IdealClass:
    """Image under the residue projection to the rank-one field.

    An ideal of the two-dimensional ring is sent to the ideal of the
    residue-level valuation ring generated by its outer levels.
    """
    if ideal.dim != 2:
        raise ValueError("closure is only defined for 2-dimensional fields")
    if ideal.is_full:
        return full(1)
    return principal(ideal.outer_level())


def grade(ideal: IdealClass) -> int:
    """Grade used by vertex type codes: 2 / 1 / 0 in dim 2, 1 / 0 in dim 1."""
    if ideal.is_full:
        return 0
    if ideal.is_partial:
        return 1
    return 2 if ideal.dim == 2 else 1


def iter_gammas(dim, lo, hi) -> Iterable[GammaElement]:
    """All values with every coordinate in [lo, hi]."""
    from itertools import product

    for c in product(range(lo, hi + 1), repeat=dim):
        yield GammaElement(c)
