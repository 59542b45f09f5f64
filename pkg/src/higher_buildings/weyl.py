"""Affine Weyl group acting on diagonal lattice classes.

An element is a pair (sigma, e): a permutation of the m coordinates and
a translation in Gamma**m modulo the diagonal.  It acts on a class by
moving component k to position sigma(k) and then multiplying component
j by the monomial of value e[j].  This is the action of the monomial
matrix whose column k has one nonzero entry, in row sigma(k).
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .gamma import GammaElement, as_gamma
from .lattices import LatticeClass, normalize, translate_components

__all__ = [
    "WeylElement",
    "identity",
    "weyl_mul",
    "weyl_inverse",
    "weyl_power",
    "weyl_from_monomial",
    "translation",
    "simple_reflection",
    "affine_generator",
    "generators",
    "ball",
    "act",
    "weyl_order",
    "involution_fixed_point",
    "sum_zero_form",
    "embed_rank2",
    "parse_weyl",
]


def _permute(perm, values):
    out = [None] * len(values)
    for k, v in enumerate(values):
        out[perm[k]] = v
    return tuple(out)


@dataclass(frozen=True)
class WeylElement:
    perm: tuple
    trans: tuple
    dim: int

    @classmethod
    def make(cls, perm, trans, dim):
        perm = tuple(int(p) for p in perm)
        if sorted(perm) != list(range(len(perm))):
            raise ValueError(f"{perm} is not a permutation")
        if len(trans) != len(perm):
            raise ValueError("translation length does not match the permutation")
        trans = [as_gamma(t, dim) for t in trans]
        base = trans[0]
        return cls(perm, tuple(t - base for t in trans), dim)

    @property
    def m(self):
        return len(self.perm)

    def is_identity(self):
        return self.perm == tuple(range(self.m)) and all(t.is_zero() for t in self.trans)

    def is_translation(self):
        return self.perm == tuple(range(self.m))

    def __mul__(self, other):
        return weyl_mul(self, other)

    def __str__(self):
        return f"({self.perm}; {', '.join(str(t) for t in self.trans)})"


def identity(m, dim):
    return WeylElement.make(range(m), [(0,) * dim] * m, dim)


def weyl_mul(u: WeylElement, v: WeylElement) -> WeylElement:
    """Product with act(u * v, L) == act(u, act(v, L))."""
    if (u.m, u.dim) != (v.m, v.dim):
        raise ValueError("elements of different Weyl groups")
    perm = tuple(u.perm[v.perm[k]] for k in range(u.m))
    moved = _permute(u.perm, v.trans)
    return WeylElement.make(perm, [a + b for a, b in zip(u.trans, moved)], u.dim)


def weyl_inverse(w: WeylElement) -> WeylElement:
    inv = [0] * w.m
    for k, p in enumerate(w.perm):
        inv[p] = k
    return WeylElement.make(inv, [-t for t in _permute(inv, w.trans)], w.dim)


def weyl_power(w: WeylElement, k: int) -> WeylElement:
    out = identity(w.m, w.dim)
    base = w if k >= 0 else weyl_inverse(w)
    for _ in range(abs(k)):
        out = weyl_mul(out, base)
    return out


def weyl_from_monomial(perm, vals, dim=None) -> WeylElement:
    """Element of the monomial matrix with value vals[k] at (row perm[k], column k)."""
    vals = [as_gamma(v, dim) for v in vals]
    dim = vals[0].dim
    return WeylElement.make(perm, _permute(perm, vals), dim)


def translation(tau, dim=None) -> WeylElement:
    tau = [as_gamma(t, dim) for t in tau]
    return WeylElement.make(range(len(tau)), tau, tau[0].dim)


def simple_reflection(i, m, dim) -> WeylElement:
    """Transposition of coordinates i-1 and i (1-based i)."""
    if not 1 <= i < m:
        raise ValueError(f"s{i} does not exist for m = {m}")
    perm = list(range(m))
    perm[i - 1], perm[i] = i, i - 1
    return WeylElement.make(perm, [(0,) * dim] * m, dim)


def affine_generator(level, m, dim) -> WeylElement:
    """Swap the first and last coordinates with entries t^-1 and t.

    ``level`` picks the uniformizer: 1 for t1 (or t over a 1-dimensional
    field), 2 for t2.
    """
    if dim == 1 and level != 1:
        raise ValueError("a 1-dimensional field has a single uniformizer")
    if level not in (1, 2):
        raise ValueError("level must be 1 or 2")
    t = (1,) if dim == 1 else ((1, 0) if level == 1 else (0, 1))
    zero = (0,) * dim
    perm = list(range(m))
    perm[0], perm[-1] = m - 1, 0
    vals = [zero] * m
    vals[0] = tuple(-x for x in t)
    vals[-1] = t
    return weyl_from_monomial(perm, vals, dim)


def generators(m, dim):
    gens = {f"s{i}": simple_reflection(i, m, dim) for i in range(1, m)}
    gens["w1"] = affine_generator(1, m, dim)
    if dim == 2:
        gens["w2"] = affine_generator(2, m, dim)
    return gens


def ball(gens, radius):
    """All products of at most ``radius`` generators."""
    gens = list(gens.values()) if isinstance(gens, dict) else list(gens)
    start = identity(gens[0].m, gens[0].dim)
    seen = {start}
    frontier = [start]
    for _ in range(radius):
        nxt = []
        for w in frontier:
            for g in gens:
                u = weyl_mul(w, g)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return seen


def act(w: WeylElement, L: LatticeClass) -> LatticeClass:
    if (w.m, w.dim) != (L.m, L.dim):
        raise ValueError("element and class belong to different configurations")
    moved = _permute(w.perm, L.components)
    return normalize(translate_components(moved, w.trans), L.dim)


def _perm_order(perm):
    k, cur = 1, perm
    ident = tuple(range(len(perm)))
    while cur != ident:
        cur = tuple(perm[c] for c in cur)
        k += 1
    return k


def weyl_order(w: WeylElement):
    """Order of w, or math.inf when a power of w is a nontrivial translation."""
    cur = w
    for k in range(1, _perm_order(w.perm) + 1):
        if cur.is_identity():
            return k
        cur = weyl_mul(cur, w)
    return math.inf


def involution_fixed_point(w: WeylElement):
    """Centre i0 of w acting on the tree line x_i = <O + M^i>.

    w sends x_(i0 + i) to x_(i0 - i).  The centre is a half-integer when the
    translation part has odd length; None is returned for translations.
    """
    if (w.m, w.dim) != (2, 1):
        raise ValueError("fixed points are computed on the m=2 tree line")
    if w.is_translation():
        return None
    c = w.trans[1].coords[0] - w.trans[0].coords[0]
    return Fraction(c, 2) if c % 2 else c // 2


def sum_zero_form(w: WeylElement):
    """Translation representative with coordinate sum zero, or None."""
    total = [sum(t.coords[d] for t in w.trans) for d in range(w.dim)]
    if any(x % w.m for x in total):
        return None
    shift = GammaElement(tuple(-x // w.m for x in total))
    return tuple(t + shift for t in w.trans)


def embed_rank2(w: WeylElement, p: int, q: int) -> WeylElement:
    """Block embedding of a rank-2 element acting on coordinates p and q of rank 3."""
    if w.m != 2:
        raise ValueError("expected a rank-2 element")
    if p == q or not {p, q} <= {0, 1, 2}:
        raise ValueError("p and q must be distinct coordinates of rank 3")
    tau = sum_zero_form(w)
    if tau is None:
        raise ValueError("only sum-zero translations embed compatibly")
    slots = (p, q)
    perm = list(range(3))
    for k in range(2):
        perm[slots[k]] = slots[w.perm[k]]
    zero = GammaElement((0,) * w.dim)
    trans = [zero] * 3
    trans[p], trans[q] = tau
    return WeylElement.make(perm, trans, w.dim)


_T_RE = re.compile(r"^T\((.*)\)$")


def _parse_value(tok, dim):
    tok = tok.strip()
    if tok.startswith("("):
        return as_gamma([int(x) for x in tok.strip("()").split(",")], dim)
    if dim == 2 and int(tok) == 0:
        return as_gamma((0, 0))
    return as_gamma(int(tok), dim)


def parse_weyl(text: str, m: int, dim: int) -> WeylElement:
    """Parse a product such as ``s1*w1*T(0;(1,0);(0,-1))`` (left to right)."""
    gens = generators(m, dim)
    out = identity(m, dim)
    for tok in text.replace(" ", "").split("*"):
        if tok in ("", "e", "1"):
            continue
        if tok in gens:
            g = gens[tok]
        else:
            mt = _T_RE.match(tok)
            if not mt:
                raise ValueError(f"unknown Weyl group word {tok!r}")
            parts = mt.group(1).split(";")
            if len(parts) != m:
                raise ValueError(f"T(...) needs {m} entries")
            g = translation([_parse_value(p, dim) for p in parts], dim)
        out = weyl_mul(out, g)
    return out
