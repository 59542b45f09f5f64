"""Diagonal lattice classes: normalization, types, projection and limits."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .gamma import (
    GammaElement,
    IdealClass,
    as_gamma,
    full,
    grade,
    ideal_translate,
    oclosure,
    partial,
    principal,
)
from .grammar import format_components, parse_components

__all__ = [
    "LatticeClass",
    "TypeSignature",
    "CompactifiedVertex",
    "normalize",
    "parse_lattice",
    "vertex_type",
    "act_translate",
    "translate_components",
    "project_pi",
    "ray_limit",
    "compactify",
    "VERTEX_CODES",
    "SUPPORTED_CONFIGS",
]

SUPPORTED_CONFIGS = ((2, 1), (3, 1), (2, 2), (3, 2))

# admissible vertex type codes per (m, dim)
VERTEX_CODES = {
    (3, 2): ("222", "221", "211", "220", "200"),
    (2, 2): ("22", "21", "20"),
    (3, 1): ("111", "110", "100"),
    (2, 1): ("11", "10"),
}

STRATUM_ORDER = {"inner": 0, "inner-boundary": 1, "external": 2, "boundary": 2}


def _component_key(c: IdealClass):
    if c.is_principal:
        g = c.gamma.coords
        return (0, g[0], g[1]) if len(g) == 2 else (0, 0, g[0])
    if c.is_partial:
        return (1, 0, c.level)
    return (2, 0, 0)


class LatticeClass:
    """Homothety class of a diagonal lattice ``I_1 e_1 + ... + I_m e_m``.

    Instances are always normalized: the first principal component is
    moved to the unit ideal, or failing that the first partially infinite
    component is moved to level 0.  Build them with :func:`normalize` or
    :func:`parse_lattice`.
    """

    __slots__ = ("components", "dim", "key", "_hash")

    def __init__(self, components, dim):
        self.components = tuple(components)
        self.dim = dim
        self.key = tuple(_component_key(c) for c in self.components)
        self._hash = hash((dim, self.key))

    @property
    def m(self):
        return len(self.components)

    def __eq__(self, other):
        return isinstance(other, LatticeClass) and self.dim == other.dim and self.key == other.key

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return (self.dim, self.key) < (other.dim, other.key)

    def full_pattern(self):
        return tuple(c.is_full for c in self.components)

    def __str__(self):
        return format_components(self.components)

    def __repr__(self):
        return f"LatticeClass({self})"


@dataclass(frozen=True)
class TypeSignature:
    code: str
    stratum: Optional[str]
    is_vertex: bool
    label: str


@dataclass(frozen=True)
class CompactifiedVertex:
    """Image of a vertex in the coarse compactification.

    ``family_index`` keeps the exponent that was collapsed when the source
    was a boundary vertex with two principal components.
    """

    target: LatticeClass
    family_index: Optional[int] = None


def _check_config(m, dim):
    if (m, dim) not in SUPPORTED_CONFIGS:
        raise ValueError(f"unsupported configuration m={m}, dim={dim}")


def translate_components(components, tau):
    """Multiply component k by the monomial of value tau[k] (no normalization)."""
    if len(tau) != len(components):
        raise ValueError("translation length does not match the number of components")
    return tuple(ideal_translate(c, t) for c, t in zip(components, tau))


def normalize(components: Sequence[IdealClass], dim=None) -> LatticeClass:
    comps = tuple(components)
    if len(comps) not in (2, 3):
        raise ValueError(f"rank {len(comps)} is not supported (use 2 or 3)")
    if dim is None:
        dim = comps[0].dim
    if any(c.dim != dim for c in comps):
        raise ValueError("components over fields of different dimension")
    if dim == 0:
        raise ValueError("only the full ideal exists over a 0-dimensional field")
    for c in comps:
        if c.is_principal:
            shift = -c.gamma
            return LatticeClass((ideal_translate(x, shift) for x in comps), dim)
    for c in comps:
        if c.is_partial:
            shift = GammaElement((0, -c.level))
            return LatticeClass((ideal_translate(x, shift) for x in comps), dim)
    raise ValueError("a lattice with only full components is not admissible")


def parse_lattice(text: str, dim=None) -> LatticeClass:
    comps, dim = parse_components(text, dim)
    return normalize(comps, dim)


def vertex_type(L: LatticeClass) -> TypeSignature:
    _check_config(L.m, L.dim)
    code = "".join(str(g) for g in sorted((grade(c) for c in L.components), reverse=True))
    is_vertex = code in VERTEX_CODES[(L.m, L.dim)]
    stratum = None
    if is_vertex:
        top = "2" if L.dim == 2 else "1"
        if set(code) == {top}:
            stratum = "inner"
        elif L.dim == 1:
            stratum = "boundary"
        elif "0" in code:
            stratum = "external"
        else:
            stratum = "inner-boundary"
    label = code
    if L.dim == 1:
        label = {"111": "[1]", "110": "[0]a", "100": "[0]b", "11": "[1]", "10": "[0]"}[code]
    return TypeSignature(code, stratum, is_vertex, label)


def is_insertable(L: LatticeClass) -> bool:
    """All components partially infinite: allowed inside a chain, never a vertex."""
    return L.dim == 2 and all(c.is_partial for c in L.components)


def act_translate(L: LatticeClass, tau) -> LatticeClass:
    tau = [as_gamma(t, L.dim) for t in tau]
    return normalize(translate_components(L.components, tau), L.dim)


def project_pi(L: LatticeClass) -> LatticeClass:
    """Residue projection from the two-dimensional to the one-dimensional complex."""
    if L.dim != 2:
        raise ValueError("the projection is defined on classes over a 2-dimensional field")
    return normalize([oclosure(c) for c in L.components], 1)


def ray_limit(base, direction) -> LatticeClass:
    """Limit class of ``sum t^(base_k + s*direction_k) e_k`` as s grows.

    ``base`` entries are values or ``None`` for a full component; full
    components must carry a zero direction.  Components moving at the
    fastest rate stay principal; over a 2-dimensional field, components
    sharing the fastest outer rate become partially infinite and the rest
    become full.
    """
    if len(base) != len(direction):
        raise ValueError("base and direction have different lengths")
    dims = {as_gamma(d).dim for d in direction}
    if len(dims) != 1:
        raise ValueError("mixed dimensions in the direction")
    dim = dims.pop()
    dirs = [as_gamma(d, dim) for d in direction]
    bases = [None if b is None else as_gamma(b, dim) for b in base]
    live = [k for k, b in enumerate(bases) if b is not None]
    for k, b in enumerate(bases):
        if b is None and not dirs[k].is_zero():
            raise ValueError("a full component cannot move")
    if not live:
        raise ValueError("a lattice with only full components is not admissible")
    # the ray is trivial in the building when every live component moves alike
    if len({dirs[k] for k in live}) == 1:
        raise ValueError("direction is constant modulo the diagonal")
    top = max(dirs[k] for k in live)
    anchor = next(k for k in live if dirs[k] == top)
    out = []
    for k, b in enumerate(bases):
        if b is None:
            out.append(full(dim))
        elif dirs[k] == top:
            out.append(principal(b - bases[anchor]))
        elif dim == 2 and dirs[k].outer == top.outer:
            out.append(partial((b - bases[anchor]).outer))
        else:
            out.append(full(dim))
    return normalize(out, dim)


def compactify(L: LatticeClass) -> CompactifiedVertex:
    """Coarse compactification of the (m=3, dim=1) complex.

    Inner vertices and corners are fixed; each boundary family with two
    principal components collapses to its exponent-zero member.
    """
    if (L.m, L.dim) != (3, 1):
        raise ValueError("compactification is defined for m=3 over a 1-dimensional field")
    t = vertex_type(L)
    if not t.is_vertex:
        raise ValueError(f"{L} is not a vertex")
    if t.code != "110":
        return CompactifiedVertex(L)
    exps = [c.gamma.coords[0] for c in L.components if c.is_principal]
    collapsed = [full(1) if c.is_full else principal(0) for c in L.components]
    return CompactifiedVertex(normalize(collapsed, 1), family_index=exps[1] - exps[0])
