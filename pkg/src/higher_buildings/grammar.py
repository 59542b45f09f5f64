"""Text grammar for ideals, component lists and lattice classes.

Components (dim 2): ``P(i,j)``, ``Q(j)``, ``K`` or ``F`` for the full field,
and the shorthands ``O = P(0,0)``, ``M = P(1,0)``, ``Oc = Q(0)``,
``Mc = Q(1)``.  Components (dim 1): ``m^i``, ``O1 = m^0``, ``F``.
A lattice class or module is written ``<c1|c2|...>``.
"""
from __future__ import annotations

import re

from .gamma import IdealClass, full, partial, principal

_P_RE = re.compile(r"^P\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)$")
_Q_RE = re.compile(r"^Q\(\s*(-?\d+)\s*\)$")
_M_RE = re.compile(r"^m\^\(?\s*(-?\d+)\s*\)?$")

_SHORT_2 = {
    "O": principal(0, 0),
    "M": principal(1, 0),
    "Oc": partial(0),
    "Mc": partial(1),
}


def format_ideal(ideal: IdealClass) -> str:
    if ideal.is_full:
        return "K" if ideal.dim == 2 else "F"
    if ideal.is_partial:
        if ideal.level == 0:
            return "Oc"
        if ideal.level == 1:
            return "Mc"
        return f"Q({ideal.level})"
    if ideal.dim == 1:
        e = ideal.gamma.coords[0]
        return "O1" if e == 0 else f"m^{e}"
    i, j = ideal.gamma.coords
    if (i, j) == (0, 0):
        return "O"
    if (i, j) == (1, 0):
        return "M"
    return f"P({i},{j})"


def format_components(components) -> str:
    return "<" + "|".join(format_ideal(c) for c in components) + ">"


def _token_dim(tok):
    """Dimension forced by a token, or None for the full field."""
    if tok in ("K", "F"):
        return None
    if tok == "O1" or _M_RE.match(tok):
        return 1
    return 2


def parse_ideal(tok: str, dim: int) -> IdealClass:
    tok = tok.strip()
    if tok in ("K", "F"):
        return full(dim)
    if dim == 1:
        if tok == "O1":
            return principal(0)
        m = _M_RE.match(tok)
        if m:
            return principal(int(m.group(1)))
        raise ValueError(f"cannot parse component {tok!r} over a 1-dimensional field")
    if tok in _SHORT_2:
        return _SHORT_2[tok]
    m = _P_RE.match(tok)
    if m:
        return principal(int(m.group(1)), int(m.group(2)))
    m = _Q_RE.match(tok)
    if m:
        return partial(int(m.group(1)))
    raise ValueError(f"cannot parse component {tok!r} over a 2-dimensional field")


def split_components(text: str):
    text = text.strip()
    if not (text.startswith("<") and text.endswith(">")):
        raise ValueError(f"expected '<c1|c2|...>', got {text!r}")
    toks = [t.strip() for t in text[1:-1].split("|")]
    if any(not t for t in toks):
        raise ValueError(f"empty component in {text!r}")
    return toks


def parse_components(text: str, dim=None):
    """Parse ``<c1|...|cm>`` into a tuple of IdealClass; dim is inferred if omitted."""
    toks = split_components(text)
    forced = {d for d in (_token_dim(t) for t in toks) if d is not None}
    if len(forced) > 1:
        raise ValueError(f"components of mixed field dimension in {text!r}")
    if forced:
        inferred = forced.pop()
        if dim is not None and dim != inferred:
            raise ValueError(f"{text!r} is written over a {inferred}-dimensional field, not {dim}")
        dim = inferred
    if dim is None:
        raise ValueError(f"cannot infer the field dimension of {text!r}")
    return tuple(parse_ideal(t, dim) for t in toks), dim
