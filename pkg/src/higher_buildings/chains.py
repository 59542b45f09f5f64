"""Maximal chains of diagonal lattices and the simplices they span.

Two classes lie on a common chain exactly when the union of their
scaling orbits is totally ordered by inclusion.  :func:`compatible`
decides this in closed form: for a fixed pair of representatives the
values g with ``X >= g.Y`` form an up-set and those with ``g.Y >= X`` a
down-set, so the classes are compatible iff no value falls strictly
between the two thresholds.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from typing import Optional

from .gamma import (
    GammaElement,
    IdealClass,
    as_gamma,
    full,
    ideal_includes,
    ideal_translate,
    partial,
    principal,
)
from .grammar import format_components
from .lattices import (
    LatticeClass,
    is_insertable,
    normalize,
    translate_components,
    vertex_type,
)

__all__ = [
    "ChainType",
    "ChainSegment",
    "Simplex",
    "ClassificationError",
    "compatible",
    "adjacent",
    "modules_include",
    "maximal_chain_through",
    "maximal_chains_through",
    "classify_chain",
    "simplices_from_chain",
    "segment_from_classes",
    "enumerate_intermediate",
    "ideals_between",
    "neighbor_candidates",
    "neighbor_keys",
    "class_from_key",
    "normalize_key",
    "PATTERNS",
]

INF = math.inf


class ChainType(str, enum.Enum):
    P2_I = "P2-i"
    P2_II = "P2-ii"
    P2_III = "P2-iii"
    P2_IV = "P2-iv"
    P2_V = "P2-v"
    P1_I = "P1-i"
    P1_II = "P1-ii"
    P1_III = "P1-iii"
    D5_I = "D5-i"
    D5_II = "D5-ii"
    D5_III = "D5-iii"
    D3 = "D3"
    D4 = "D4"

    def __str__(self):
        return self.value


# (m, dim) and the sorted type codes of the vertices of one maximal simplex
PATTERNS = {
    ChainType.P2_I: ((3, 2), ("222", "222", "222")),
    ChainType.P2_II: ((3, 2), ("221", "221", "211")),
    ChainType.P2_III: ((3, 2), ("211", "211", "211")),
    ChainType.P2_IV: ((3, 2), ("220", "220")),
    ChainType.P2_V: ((3, 2), ("200",)),
    ChainType.P1_I: ((3, 1), ("111", "111", "111")),
    ChainType.P1_II: ((3, 1), ("110", "110")),
    ChainType.P1_III: ((3, 1), ("100",)),
    ChainType.D5_I: ((2, 2), ("22", "22")),
    ChainType.D5_II: ((2, 2), ("21", "21")),
    ChainType.D5_III: ((2, 2), ("20",)),
    ChainType.D3: ((2, 1), ("11", "11")),
    ChainType.D4: ((2, 1), ("10",)),
}

# a chain containing a class of the first code listed has the paired type
_PRECEDENCE = {
    (3, 2): [("222", ChainType.P2_I), ("221", ChainType.P2_II), ("211", ChainType.P2_III),
             ("220", ChainType.P2_IV), ("200", ChainType.P2_V)],
    (3, 1): [("111", ChainType.P1_I), ("110", ChainType.P1_II), ("100", ChainType.P1_III)],
    (2, 2): [("22", ChainType.D5_I), ("21", ChainType.D5_II), ("20", ChainType.D5_III)],
    (2, 1): [("11", ChainType.D3), ("10", ChainType.D4)],
}


class ClassificationError(ValueError):
    pass


# ---------------------------------------------------------------------------
# compatibility


def _thresholds_2(xk, yk):
    """Up / down thresholds for one component pair over a 2-dimensional field.

    Keys are (outer, inner); an infinite inner part marks a cut between
    outer levels.
    """
    xkind, xi, xo = xk
    ykind, yi, yo = yk
    if xkind == 2:
        up = (-INF, -INF)
    elif ykind == 2:
        up = (INF, INF)
    elif xkind == 0 and ykind == 0:
        up = (xo - yo, xi - yi)
    elif xkind == 1 and ykind == 0:
        up = (xo - yo, -INF)
    elif xkind == 0:
        up = (xo - yo + 1, -INF)
    else:
        up = (xo - yo, -INF)
    if ykind == 2:
        down = (INF, INF)
    elif xkind == 2:
        down = (-INF, -INF)
    elif xkind == 0 and ykind == 0:
        down = (xo - yo, xi - yi)
    elif xkind == 1 and ykind == 0:
        down = (xo - yo - 1, INF)
    elif xkind == 0:
        down = (xo - yo, INF)
    else:
        down = (xo - yo, INF)
    return up, down


def _gap_2(down, up):
    """Is there an integer point strictly between the two cuts?"""
    if down >= up:
        return False
    od, idn = down
    ou, iu = up
    if od == ou:
        return iu - idn >= 2
    if math.isfinite(od) and idn < INF:
        return True
    if math.isfinite(ou) and iu > -INF:
        return True
    return ou - od >= 2


def _key_compatible(xkey, ykey, dim):
    if dim == 2:
        ups, downs = zip(*(_thresholds_2(a, b) for a, b in zip(xkey, ykey)))
        return not _gap_2(min(downs), max(ups))
    up, down = -INF, INF
    for (xkind, _, xo), (ykind, _, yo) in zip(xkey, ykey):
        if xkind == 2:
            u = -INF
        elif ykind == 2:
            u = INF
        else:
            u = xo - yo
        if ykind == 2:
            d = INF
        elif xkind == 2:
            d = -INF
        else:
            d = xo - yo
        up, down = max(up, u), min(down, d)
    return not (up - down >= 2)


def compatible(X: LatticeClass, Y: LatticeClass) -> bool:
    """True when every scaling of Y is comparable with X under inclusion."""
    if X.dim != Y.dim or X.m != Y.m:
        raise ValueError("classes from different configurations")
    return _key_compatible(X.key, Y.key, X.dim)


def adjacent(X: LatticeClass, Y: LatticeClass) -> bool:
    """True iff some maximal chain contains both classes (reflexive on vertices)."""
    for L in (X, Y):
        if not vertex_type(L).is_vertex:
            raise ValueError(f"{L} is not a vertex class")
    return compatible(X, Y)


def modules_include(big, small) -> bool:
    return all(ideal_includes(a, b) for a, b in zip(big, small))


# ---------------------------------------------------------------------------
# intermediate modules


def _ideals_between_1(hi, lo, center, w):
    lo_e = lo.gamma.coords[0] if not lo.is_full else None
    hi_e = hi.gamma.coords[0] if not hi.is_full else None
    if lo_e is None:
        return [hi] if hi.is_full else []
    start = hi_e if hi_e is not None else lo_e - w
    out = [principal(e) for e in range(start, lo_e + 1)]
    if hi.is_full:
        out.append(hi)
    return out


def ideals_between(hi: IdealClass, lo: IdealClass, center=0, width=3):
    """Ideals I with hi >= I >= lo, truncated to a box of the given width.

    Inner coordinates are searched around hi's (or lo's) inner value, or
    around ``center`` when neither is principal.
    """
    if not ideal_includes(hi, lo):
        return []
    if hi.dim == 1:
        return _ideals_between_1(hi, lo, center, width)
    hlev, llev = hi.outer_level(), lo.outer_level()
    if hlev is None and llev is None:
        return [hi]
    if hlev is None:
        hlev = llev - width
    if llev is None:
        llev = hlev + width
    if hi.is_principal:
        c = hi.gamma.inner
    elif lo.is_principal:
        c = lo.gamma.inner
    else:
        c = center
    out = []
    for o in range(hlev, llev + 1):
        for i in range(c - width, c + width + 1):
            out.append(principal(i, o))
        out.append(partial(o))
    if hi.is_full:
        out.append(hi)
    return [I for I in out if ideal_includes(hi, I) and ideal_includes(I, lo)]


def enumerate_intermediate(hi, lo, window=3):
    """All modules X with hi >= X >= lo componentwise, within the window."""
    hi, lo = tuple(hi), tuple(lo)
    if len(hi) != len(lo):
        raise ValueError("modules of different rank")
    if not modules_include(hi, lo):
        raise ValueError(f"{format_components(hi)} does not contain {format_components(lo)}")
    center = next((c.gamma.inner for c in hi + lo if c.is_principal and c.dim == 2), 0)
    per = [ideals_between(a, b, center, window) for a, b in zip(hi, lo)]
    return [tuple(x) for x in itertools.product(*per)]


def _top_step(dim):
    return GammaElement((0, 1)) if dim == 2 else GammaElement((1,))


def _between_keys(comp, dim, center, width):
    """Component keys between a component and its scaling by the top uniformizer."""
    kind, i, o = comp
    if kind == 2:
        return [comp]
    if dim == 1:
        return [(0, 0, o), (0, 0, o + 1)]
    if kind == 0:
        out = [(0, i + s, o) for s in range(width + 1)]
        out += [(0, i - s, o + 1) for s in range(width + 1)]
        out.append((1, 0, o + 1))
        return out
    out = [(1, 0, o), (1, 0, o + 1)]
    out += [(0, center + d, o) for d in range(-width, width + 1)]
    return out


def normalize_key(key):
    """Key of the normalized class of a module given by component keys."""
    for kind, i, o in key:
        if kind == 0:
            return tuple((k, a - i, b - o) if k == 0 else ((k, 0, b - o) if k == 1 else c)
                         for c in key for k, a, b in [c])
    for kind, i, o in key:
        if kind == 1:
            return tuple((k, a, b - o) if k != 2 else c for c in key for k, a, b in [c])
    raise ValueError("a lattice with only full components is not admissible")


def neighbor_keys(L: LatticeClass, width=1):
    """Keys of classes with a representative between L and its top-uniformizer scaling.

    Every class compatible with L has such a representative, so up to the
    inner truncation this contains all neighbours of L.
    """
    center = next((i for kind, i, _ in L.key if kind == 0), 0)
    per = [_between_keys(c, L.dim, center, width) for c in L.key]
    out = set()
    for mod in itertools.product(*per):
        if all(c[0] == 2 for c in mod):
            continue
        out.add(normalize_key(mod))
    out.discard(L.key)
    return out


def class_from_key(key, dim):
    comps = []
    for kind, i, o in key:
        if kind == 0:
            comps.append(principal(i, o) if dim == 2 else principal(o))
        elif kind == 1:
            comps.append(partial(o))
        else:
            comps.append(full(dim))
    return LatticeClass(comps, dim)


def neighbor_candidates(L: LatticeClass, width=1):
    return {class_from_key(k, L.dim) for k in neighbor_keys(L, width)}


def compatible_keys(xkey, ykey, dim):
    return _key_compatible(xkey, ykey, dim)


# ---------------------------------------------------------------------------
# segments


@dataclass(frozen=True)
class ChainSegment:
    """One period of a maximal chain.

    ``reps`` is a strictly decreasing list of modules whose last entry is
    the first one scaled by ``period``.  ``markers`` tags each module as
    ``member`` (a vertex class) or ``inserted`` (an all-partial module
    that only separates blocks).  ``links`` tags each gap as ``step``
    (nothing fits in between) or ``limit`` (an infinite family of the
    chain accumulates there).
    """

    reps: tuple
    markers: tuple
    links: tuple
    period: GammaElement
    dim: int

    @property
    def m(self):
        return len(self.reps[0])

    def classes(self):
        seen = []
        for r in self.reps:
            c = normalize(r, self.dim)
            if c not in seen:
                seen.append(c)
        return seen

    def vertex_classes(self):
        out = []
        for r, mk in zip(self.reps, self.markers):
            if mk != "member":
                continue
            c = normalize(r, self.dim)
            if c not in out:
                out.append(c)
        return out

    def expand(self, inner_range=2):
        """Modules of one period with every member scaled by t1**k, |k| <= inner_range."""
        if self.dim == 1:
            return list(self.reps)
        t1 = GammaElement((1, 0))
        out = []
        for r, mk in zip(self.reps, self.markers):
            shifts = [0] if mk == "inserted" else range(-inner_range, inner_range + 1)
            for k in shifts:
                mod = translate_components(r, [t1.scale(k)] * self.m)
                if mod not in out:
                    out.append(mod)
        # keep only the part of the orbit that sits inside this period
        top, bottom = self.reps[0], self.reps[-1]
        out = [r for r in out if modules_include(top, r) and modules_include(r, bottom)]
        out.sort(key=_module_sort_key(out))
        return out

    def to_strings(self):
        return [format_components(r) for r in self.reps]

    def to_dict(self):
        return {
            "reps": self.to_strings(),
            "markers": list(self.markers),
            "links": list(self.links),
            "period": str(self.period),
        }


def _module_sort_key(mods):
    """Sort key that orders a totally ordered family of modules decreasingly."""
    # copy: list.sort empties the list while it runs
    mods = list(mods)

    def key(r):
        return -sum(1 for s in mods if modules_include(r, s))
    return key


def _seg(reps, markers, period, dim):
    links = []
    for a, b in zip(markers, markers[1:]):
        links.append("step" if a == b == "member" else "limit")
    return ChainSegment(tuple(tuple(r) for r in reps), tuple(markers), tuple(links),
                        as_gamma(period), dim)


def _shift(comps, positions, g):
    comps = list(comps)
    for k in positions:
        comps[k] = ideal_translate(comps[k], g)
    return tuple(comps)


def _step_chain(L, order, step, period):
    """L, then L with the listed components scaled one after another."""
    reps = [L.components]
    cur = L.components
    for k in order:
        cur = _shift(cur, [k], step)
        reps.append(cur)
    return _seg(reps, ["member"] * len(reps), period, L.dim)


def _to_partial(c: IdealClass, bump=0):
    return partial(c.outer_level() + bump)


def _block_chain(L, order, single_rep_blocks=False):
    """Chain whose blocks make one component principal at a time.

    The components listed in ``order[0]`` are principal in L (the first
    block); each later entry is a single component that becomes principal
    in its own block.
    """
    t1 = GammaElement((1, 0))
    first, *rest = order
    comps = list(L.components)
    top = [partial(c.outer_level()) for c in comps]
    reps, marks = [tuple(top)], ["inserted"]
    cur = L.components
    reps.append(cur)
    marks.append("member")
    for k in first:
        cur = _shift(cur, [k], t1)
        reps.append(cur)
        marks.append("member")
    mid = list(top)
    for k in first:
        mid[k] = partial(top[k].level + 1)
    reps.append(tuple(mid))
    marks.append("inserted")
    for k in rest:
        block = list(mid)
        block[k] = principal(0, mid[k].level)
        reps.append(tuple(block))
        marks.append("member")
        if not single_rep_blocks:
            reps.append(_shift(block, [k], t1))
            marks.append("member")
        mid[k] = partial(mid[k].level + 1)
        reps.append(tuple(mid))
        marks.append("inserted")
    return _seg(reps, marks, (0, 1), L.dim)


def maximal_chains_through(L: LatticeClass):
    """Every chain orientation that starts its period at L's block.

    Returns (ChainType, ChainSegment) pairs; the first one is canonical.
    """
    t = vertex_type(L)
    key = (L.m, L.dim)
    if not t.is_vertex:
        if is_insertable(L):
            lifted = list(L.components)
            lifted[0] = principal(0, lifted[0].level)
            out = []
            for tag, seg in maximal_chains_through(normalize(lifted, 2)):
                if normalize(seg.reps[0], 2) == L:
                    out.append((tag, seg))
            return out
        raise ValueError(f"{L} (type {t.code}) lies on no maximal chain")
    P = [k for k, c in enumerate(L.components) if c.is_principal]
    Qs = [k for k, c in enumerate(L.components) if c.is_partial]
    code = t.code
    t1, unit = GammaElement((1, 0)), GammaElement((1,))
    out = []
    if key == (3, 2):
        if code == "222":
            for order in itertools.permutations(range(3)):
                out.append((ChainType.P2_I, _step_chain(L, order, t1, t1)))
        elif code == "221":
            for a, b in (P, P[::-1]):
                out.append((ChainType.P2_II, _block_chain(L, [[a, b], Qs[0]])))
        elif code == "211":
            p = P[0]
            for q, r in (((p + 1) % 3, (p + 2) % 3), ((p + 2) % 3, (p + 1) % 3)):
                out.append((ChainType.P2_III, _block_chain(L, [[p], q, r], single_rep_blocks=True)))
        elif code == "220":
            for a, b in (P, P[::-1]):
                out.append((ChainType.P2_IV, _step_chain(L, [a, b], t1, t1)))
        else:
            out.append((ChainType.P2_V, _step_chain(L, P, t1, t1)))
    elif key == (3, 1):
        if code == "111":
            for order in itertools.permutations((2, 1, 0)):
                out.append((ChainType.P1_I, _step_chain(L, order, unit, unit)))
        elif code == "110":
            for a, b in (P, P[::-1]):
                out.append((ChainType.P1_II, _step_chain(L, [a, b], unit, unit)))
        else:
            out.append((ChainType.P1_III, _step_chain(L, P, unit, unit)))
    elif key == (2, 2):
        if code == "22":
            for a, b in ((0, 1), (1, 0)):
                out.append((ChainType.D5_I, _step_chain(L, [a, b], t1, t1)))
        elif code == "21":
            out.append((ChainType.D5_II, _block_chain(L, [P, Qs[0]])))
        else:
            out.append((ChainType.D5_III, _step_chain(L, P, t1, t1)))
    else:
        if code == "11":
            for a, b in ((0, 1), (1, 0)):
                out.append((ChainType.D3, _step_chain(L, [a, b], unit, unit)))
        else:
            out.append((ChainType.D4, _step_chain(L, P, unit, unit)))
    return out


def maximal_chain_through(L: LatticeClass):
    """The canonical maximal chain through L as (ChainType, ChainSegment)."""
    chains = maximal_chains_through(L)
    if not chains:
        raise ValueError(f"no maximal chain through {L}")
    return chains[0]


# ---------------------------------------------------------------------------
# classification


def classify_chain(seg: ChainSegment, require_maximal=False) -> ChainType:
    """Type of a chain segment, read off from the vertex types it contains."""
    reps = seg.reps
    if len(reps) < 2:
        raise ClassificationError("a segment needs at least two modules")
    for a, b in zip(reps, reps[1:]):
        if a == b or not modules_include(a, b):
            raise ClassificationError(f"{format_components(a)} does not strictly contain {format_components(b)}")
    dim, m = seg.dim, len(reps[0])
    scaled = translate_components(reps[0], [seg.period] * m)
    if tuple(reps[-1]) != tuple(scaled):
        raise ClassificationError("segment does not end at its first module scaled by the period")
    classes = seg.classes()
    codes = []
    for c in classes:
        t = vertex_type(c)
        if t.is_vertex:
            codes.append(t.code)
        elif not is_insertable(c):
            raise ClassificationError(f"{c} (type {t.code}) cannot occur in a maximal chain")
    if not codes:
        raise ClassificationError("segment contains no vertex class")
    for i, a in enumerate(classes):
        for b in classes[i + 1:]:
            if not compatible(a, b):
                raise ClassificationError(f"{a} and {b} do not lie on a common chain")
    tag = next(tg for code, tg in _PRECEDENCE[(m, dim)] if code in codes)
    allowed = set(PATTERNS[tag][1])
    if not set(codes) <= allowed:
        raise ClassificationError(f"vertex types {sorted(set(codes))} match no chain type")
    if require_maximal and len(seg.vertex_classes()) != len(PATTERNS[tag][1]):
        raise ClassificationError("segment does not span a maximal simplex")
    return tag


@dataclass(frozen=True)
class Simplex:
    vertices: frozenset
    tag: Optional[ChainType] = None

    @property
    def dim(self):
        return len(self.vertices) - 1


def simplices_from_chain(tag: ChainType, seg: ChainSegment):
    """The nondegenerate simplex spanned by the distinct vertex classes of a period."""
    got = classify_chain(seg)
    if got != tag:
        raise ValueError(f"segment has type {got}, not {tag}")
    verts = seg.vertex_classes()
    want = len(PATTERNS[tag][1])
    if len(verts) > want:
        raise ValueError("segment spans more vertices than its type allows")
    return [Simplex(frozenset(verts), tag)]


def _largest_rep_inside(big, Y: LatticeClass):
    """A representative of Y inside ``big``, as large as the candidate shifts allow."""
    best = None
    for g in _candidate_shifts(big, Y.components, Y.dim):
        mod = translate_components(Y.components, [g] * Y.m)
        if modules_include(big, mod) and (best is None or modules_include(mod, best)):
            best = mod
    return best


def _candidate_shifts(big, comps, dim):
    """Shifts near the thresholds where containment of one module in another changes."""
    out = set()
    for a, b in zip(big, comps):
        la, lb = a.outer_level(), b.outer_level()
        if la is None or lb is None:
            continue
        if dim == 1:
            for e in (-1, 0, 1):
                out.add(GammaElement((la - lb + e,)))
            continue
        ia = a.gamma.inner if a.is_principal else 0
        ib = b.gamma.inner if b.is_principal else 0
        for e in (-1, 0, 1):
            for o in (-1, 0, 1):
                out.add(GammaElement((ia - ib + e, la - lb + o)))
    return out


def segment_from_classes(classes) -> ChainSegment:
    """A chain segment through the given pairwise compatible classes.

    The first class provides the top module; the others are represented
    inside it, and the segment closes with the smallest uniformizer
    scaling of the top that lies below every representative.
    """
    classes = list(classes)
    if not classes:
        raise ValueError("no classes given")
    dim, m = classes[0].dim, classes[0].m
    head = classes[0].components
    reps = [head]
    for Y in classes[1:]:
        rep = _largest_rep_inside(head, Y)
        if rep is None:
            raise ValueError(f"{Y} has no representative inside {format_components(head)}")
        reps.append(rep)
    reps.sort(key=_module_sort_key(reps))
    steps = [GammaElement((1, 0)), GammaElement((0, 1))] if dim == 2 else [GammaElement((1,))]
    for step in steps:
        closing = translate_components(head, [step] * m)
        if all(r != closing and modules_include(r, closing) for r in reps):
            break
    else:
        raise ValueError("classes do not fit inside one period")
    reps.append(closing)
    markers = ["member" if vertex_type(normalize(r, dim)).is_vertex else "inserted" for r in reps]
    return _seg(reps, markers, step, dim)
