"""Finite windows of the diagonal apartment as simplicial sets."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .chains import ChainType, compatible, compatible_keys, neighbor_candidates, neighbor_keys, _PRECEDENCE
from .gamma import GammaElement, principal
from .lattices import (
    STRATUM_ORDER,
    LatticeClass,
    normalize,
    project_pi,
    ray_limit,
    vertex_type,
    _check_config,
)

__all__ = [
    "ApartmentSpec",
    "SimplicialSetWindow",
    "ConvergenceAnnotation",
    "ProjectionRecord",
    "LineItem",
    "build_apartment",
    "window_inclusion",
    "link",
    "project_window",
    "pgl2_lines",
    "annotate_boundary",
    "chain_type_of",
    "unit_directions",
]


@dataclass(frozen=True)
class ApartmentSpec:
    m: int
    dim: int
    bound: int
    include_inner_boundary: bool = True
    include_boundary: bool = True

    def __post_init__(self):
        _check_config(self.m, self.dim)
        if self.bound < 0:
            raise ValueError("window bound must be non-negative")


@dataclass(frozen=True)
class ConvergenceAnnotation:
    source: int
    direction: tuple
    target: LatticeClass
    target_index: Optional[int]


@dataclass(frozen=True)
class ProjectionRecord:
    simplex: tuple
    tag: Optional[ChainType]
    image: frozenset
    behaviour: str


@dataclass
class SimplicialSetWindow:
    """Vertices and nondegenerate simplices of an apartment window.

    Simplices are sorted tuples of vertex indices.  Degenerate simplices
    are produced on demand by :meth:`degeneracy` and never stored.
    """

    spec: ApartmentSpec
    vertices: tuple
    simplices: dict
    tags: dict = field(default_factory=dict)
    annotations: list = field(default_factory=list)

    def __post_init__(self):
        self.index = {v: i for i, v in enumerate(self.vertices)}
        self._simplex_set = {s for ss in self.simplices.values() for s in ss}

    @property
    def dimension(self):
        return max(k for k, ss in self.simplices.items() if ss) if self.vertices else -1

    def stratum(self, i):
        return vertex_type(self.vertices[i]).stratum

    def code(self, i):
        return vertex_type(self.vertices[i]).code

    def vertex_index(self, L):
        return self.index.get(L)

    def __contains__(self, L):
        return L in self.index

    def is_simplex(self, verts):
        return tuple(sorted(set(verts))) in self._simplex_set

    def of_dim(self, k):
        return self.simplices.get(k, [])

    def face(self, simplex, i):
        if len(simplex) < 2:
            raise ValueError("a vertex has no faces")
        return simplex[:i] + simplex[i + 1:]

    def degeneracy(self, simplex, i):
        return simplex[: i + 1] + simplex[i:]

    def edges_of(self, i):
        return [e for e in self.of_dim(1) if i in e]

    def neighbours(self, i):
        return sorted({j for e in self.edges_of(i) for j in e if j != i})

    def counts(self):
        return {k: len(v) for k, v in sorted(self.simplices.items())}


def chain_type_of(classes) -> Optional[ChainType]:
    """Chain type of the maximal chains through a simplex, from its vertex types."""
    classes = list(classes)
    codes = {vertex_type(c).code for c in classes}
    key = (classes[0].m, classes[0].dim)
    return next((tag for code, tag in _PRECEDENCE[key] if code in codes), None)


def unit_directions(m, dim):
    """Directions of the rays used for boundary strata, grouped by stratum."""
    zero = (0,) * dim
    if dim == 1:
        steps = {"boundary": [(1,), (-1,)]}
    else:
        steps = {"inner-boundary": [(1, 0), (-1, 0)], "external": [(0, 1), (0, -1)]}
    out = {}
    for stratum, ss in steps.items():
        out[stratum] = []
        for s in ss:
            for k in range(m):
                out[stratum].append(tuple(GammaElement(s if j == k else zero) for j in range(m)))
    return out


def _inner_vertices(m, dim, N):
    boxes = list(itertools.product(range(-N, N + 1), repeat=dim))
    zero = (0,) * dim
    for rest in itertools.product(boxes, repeat=m - 1):
        base = (GammaElement(zero),) + tuple(GammaElement(g) for g in rest)
        yield base, normalize([principal(g) for g in base], dim)


def build_apartment(spec: ApartmentSpec) -> SimplicialSetWindow:
    """Window of the apartment: inner vertices in a box plus their ray limits.

    Edges join compatible vertex classes; higher simplices are the cliques
    of that graph (chains are totally ordered, so this is a flag complex).
    """
    m, dim, N = spec.m, spec.dim, spec.bound
    inner = list(_inner_vertices(m, dim, N))
    verts = {L for _, L in inner}
    dirs = unit_directions(m, dim)
    wanted = []
    if dim == 1 and spec.include_boundary:
        wanted = ["boundary"]
    if dim == 2:
        if spec.include_inner_boundary:
            wanted.append("inner-boundary")
        if spec.include_boundary:
            wanted.append("external")
    limits = {}
    for stratum, ds in dirs.items():
        for base, _ in inner:
            for d in ds:
                limits[base, d] = ray_limit(base, d)
    for stratum in wanted:
        for base, _ in inner:
            for d in dirs[stratum]:
                verts.add(limits[base, d])
    ordered = sorted(verts, key=lambda L: (STRATUM_ORDER[vertex_type(L).stratum], str(L)))
    index = {L.key: i for i, L in enumerate(ordered)}
    adj = {i: set() for i in range(len(ordered))}
    for i, L in enumerate(ordered):
        for key in neighbor_keys(L, width=1):
            j = index.get(key)
            if j is not None and j not in adj[i] and compatible_keys(L.key, key, dim):
                adj[i].add(j)
                adj[j].add(i)
    simplices = {0: [(i,) for i in range(len(ordered))]}
    edges = sorted((i, j) for i in adj for j in adj[i] if i < j)
    simplices[1] = edges
    tris = []
    for i, j in edges:
        for k in adj[i] & adj[j]:
            if k > j:
                tris.append((i, j, k))
    simplices[2] = sorted(tris)
    tags = {}
    for k in (1, 2):
        for s in simplices[k]:
            tags[s] = chain_type_of(ordered[i] for i in s)
    for s in simplices[0]:
        tags[s] = chain_type_of([ordered[s[0]]])
    w = SimplicialSetWindow(spec, tuple(ordered), simplices, tags)
    w.annotations = annotate_boundary(w, inner, limits)
    return w


def annotate_boundary(w: SimplicialSetWindow, inner=None, limits=None):
    """Rays from inner vertices along unit directions and the classes they reach."""
    spec = w.spec
    if inner is None:
        inner = list(_inner_vertices(spec.m, spec.dim, spec.bound))
    limits = limits or {}
    out = []
    for stratum, ds in unit_directions(spec.m, spec.dim).items():
        for base, L in inner:
            src = w.index[L]
            for d in ds:
                target = limits.get((base, d)) or ray_limit(base, d)
                out.append(ConvergenceAnnotation(
                    src, tuple(g.coords for g in d), target, w.index.get(target)))
    return out


def window_inclusion(small: SimplicialSetWindow, big: SimplicialSetWindow):
    """Vertex map of the inclusion of windows; raises if it is not simplicial."""
    vmap = {}
    for i, L in enumerate(small.vertices):
        j = big.vertex_index(L)
        if j is None:
            raise ValueError(f"{L} is missing from the larger window")
        if big.stratum(j) != small.stratum(i):
            raise ValueError(f"{L} changes stratum")
        vmap[i] = j
    for k, ss in small.simplices.items():
        for s in ss:
            if not big.is_simplex([vmap[i] for i in s]):
                raise ValueError(f"simplex {s} is not preserved")
    return vmap


def link(w: SimplicialSetWindow, v) -> SimplicialSetWindow:
    """Link of an inner vertex whose star lies inside the window."""
    i = v if isinstance(v, int) else w.vertex_index(v)
    if i is None:
        raise ValueError(f"{v} is not a vertex of the window")
    L = w.vertices[i]
    if vertex_type(L).stratum != "inner":
        raise ValueError(f"{L} is not an inner vertex")
    for Y in neighbor_candidates(L, width=1):
        if vertex_type(Y).is_vertex and compatible(L, Y) and Y not in w:
            raise ValueError(f"the star of {L} leaves the window (missing {Y})")
    nbrs = w.neighbours(i)
    new = {j: n for n, j in enumerate(nbrs)}
    simplices = {0: [(n,) for n in range(len(nbrs))], 1: []}
    for s in w.of_dim(2):
        if i in s:
            a, b = (new[j] for j in s if j != i)
            simplices[1].append(tuple(sorted((a, b))))
    simplices[1].sort()
    return SimplicialSetWindow(w.spec, tuple(w.vertices[j] for j in nbrs), simplices)


def _behaviour(src_dim, img_dim):
    if img_dim == 0:
        return "point"
    if img_dim == src_dim:
        return "isomorphic"
    return "edge" if img_dim == 1 else "collapsed"


def project_window(w: SimplicialSetWindow):
    """Apply the residue projection to every simplex of a 2-dimensional window.

    Returns the image window (over the 1-dimensional field) and one record
    per simplex describing how it collapses.
    """
    if w.spec.dim != 2:
        raise ValueError("projection needs a window over a 2-dimensional field")
    images = [project_pi(L) for L in w.vertices]
    img_verts = sorted(set(images), key=lambda L: (STRATUM_ORDER[vertex_type(L).stratum], str(L)))
    index = {L: i for i, L in enumerate(img_verts)}
    img_simplices = {0: [(i,) for i in range(len(img_verts))], 1: set(), 2: set()}
    records = []
    for k in (0, 1, 2):
        for s in w.of_dim(k):
            img = frozenset(images[i] for i in s)
            t = tuple(sorted(index[L] for L in img))
            if len(t) > 1:
                img_simplices[len(t) - 1].add(t)
            records.append(ProjectionRecord(s, w.tags.get(s), img, _behaviour(k, len(t) - 1)))
    img_simplices[1] = sorted(img_simplices[1])
    img_simplices[2] = sorted(img_simplices[2])
    spec = ApartmentSpec(w.spec.m, 1, w.spec.bound)
    return SimplicialSetWindow(spec, tuple(img_verts), img_simplices), records


@dataclass(frozen=True)
class LineItem:
    role: str
    lattice: LatticeClass
    index: Optional[int]


def _base_of(L):
    return [None if c.is_full else c.gamma for c in L.components]


def pgl2_lines(w: SimplicialSetWindow, v):
    """The three lines through an inner vertex, one per way to move components.

    Over a 1-dimensional field a line is a copy of the tree apartment with
    its two boundary ends.  Over a 2-dimensional field each outer level n
    contributes a block of inner vertices, entered from the limit class
    z_n and left towards y_n; the ends are x_0 and x_infinity.
    """
    i = v if isinstance(v, int) else w.vertex_index(v)
    L = w.vertices[i]
    if vertex_type(L).stratum != "inner":
        raise ValueError(f"{L} is not an inner vertex")
    m, dim, N = w.spec.m, w.spec.dim, w.spec.bound
    base = _base_of(L)
    zero = GammaElement((0,) * dim)
    movers = [(k,) for k in range(1, m)] + ([tuple(range(1, m))] if m == 3 else [])
    lines = []
    for S in movers:
        def moved(g):
            return [b + g if k in S else b for k, b in enumerate(base)]

        def item(role, cls):
            return LineItem(role, cls, w.vertex_index(cls))

        def direction(g):
            return [g if k in S else zero for k in range(m)]

        items = [item("end", ray_limit(base, direction(GammaElement((-1,) if dim == 1 else (0, -1)))))]
        if dim == 1:
            for t in range(-2 * N, 2 * N + 1):
                cls = normalize([principal(b) for b in moved(GammaElement((t,)))], 1)
                if cls in w:
                    items.append(item("inner", cls))
        else:
            t1 = GammaElement((1, 0))
            for n in range(-2 * N, 2 * N + 1):
                block_base = moved(GammaElement((0, n)))
                members = []
                for t in range(-2 * N, 2 * N + 1):
                    cls = normalize([principal(b + GammaElement((t, 0))) if k in S else principal(b)
                                     for k, b in enumerate(block_base)], 2)
                    if cls in w:
                        members.append(item("inner", cls))
                if not members:
                    continue
                items.append(item("block-start", ray_limit(block_base, direction(-t1))))
                items.extend(members)
                items.append(item("block-end", ray_limit(block_base, direction(t1))))
        items.append(item("end", ray_limit(base, direction(GammaElement((1,) if dim == 1 else (0, 1))))))
        lines.append((S, items))
    return lines
