"""Spherical buildings over a finite residue field F_q.

Points of P^(m-1)(F_q) are stored by their canonical representative,
whose first nonzero coordinate is 1.  For m = 3 planes are stored by a
normal covector, so a point lies on a plane when their dot product
vanishes mod q.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .lattices import LatticeClass, vertex_type

__all__ = [
    "SphericalComplex",
    "check_prime",
    "canonical",
    "enum_points",
    "flag_complex",
    "spherical_apartment",
    "apply_matrix",
    "random_invertible",
    "link_residue",
]

MAX_Q = 13


def check_prime(q):
    if not isinstance(q, (int, np.integer)) or q < 2 or q > MAX_Q:
        raise ValueError(f"q must be a prime not exceeding {MAX_Q}, got {q}")
    if any(q % d == 0 for d in range(2, int(q ** 0.5) + 1)):
        raise ValueError(f"q = {q} is not prime")
    return int(q)


def canonical(vec, q):
    """Scale a nonzero vector so that its first nonzero coordinate is 1."""
    vec = [int(x) % q for x in vec]
    lead = next((x for x in vec if x), None)
    if lead is None:
        raise ValueError("the zero vector spans no point")
    inv = pow(lead, -1, q)
    return tuple(x * inv % q for x in vec)


def enum_points(m, q):
    """Canonical representatives of P^(m-1)(F_q) in lexicographic order."""
    q = check_prime(q)
    pts = []
    for v in itertools.product(range(q), repeat=m):
        if any(v) and canonical(v, q) == v:
            pts.append(v)
    return pts


@dataclass
class SphericalComplex:
    """Vertices tagged ('point', v) or ('plane', v), with incidence edges."""

    q: int
    m: int
    vertices: list
    edges: list

    def counts(self):
        return len(self.vertices), len(self.edges)


def _incident(point, plane, q):
    return sum(a * b for a, b in zip(point, plane)) % q == 0


def flag_complex(q) -> SphericalComplex:
    """Incidence graph of points and lines of the projective plane over F_q."""
    q = check_prime(q)
    pts = enum_points(3, q)
    verts = [("point", p) for p in pts] + [("plane", h) for h in pts]
    edges = [(("point", p), ("plane", h)) for p in pts for h in pts if _incident(p, h, q)]
    return SphericalComplex(q, 3, verts, edges)


def _cross(a, b, q):
    return canonical((a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]), q)


def spherical_apartment(basis, q) -> SphericalComplex:
    """Apartment attached to a frame: coordinate points and the planes they span."""
    q = check_prime(q)
    basis = [tuple(int(x) % q for x in b) for b in basis]
    m = len(basis)
    if round(np.linalg.det(np.array(basis, dtype=float))) % q == 0:
        raise ValueError("basis vectors are dependent mod q")
    pts = [canonical(b, q) for b in basis]
    if m == 2:
        return SphericalComplex(q, 2, [("point", p) for p in pts], [])
    if m != 3:
        raise ValueError("apartments are provided for m = 2 and m = 3")
    planes = [_cross(basis[i], basis[j], q) for i, j in ((0, 1), (0, 2), (1, 2))]
    verts = [("point", p) for p in pts] + [("plane", h) for h in planes]
    edges = [(("point", p), ("plane", h)) for p in pts for h in planes if _incident(p, h, q)]
    return SphericalComplex(q, 3, verts, edges)


def apply_matrix(g, vertex, q):
    """Image of a point (g v) or a plane (normal covector times g^-1)."""
    kind, v = vertex
    g = np.asarray(g, dtype=np.int64) % q
    if kind == "point":
        return ("point", canonical(g @ np.array(v), q))
    # the adjugate is det * inverse, and scalars do not matter projectively
    adj = np.round(np.linalg.inv(g) * np.linalg.det(g)).astype(np.int64) % q
    return ("plane", canonical(np.array(v) @ adj, q))


def random_invertible(m, q, rng):
    while True:
        g = rng.integers(0, q, size=(m, m))
        if round(np.linalg.det(g.astype(float))) % q:
            return g


def link_residue(L: LatticeClass, q) -> SphericalComplex:
    """Spherical building over F_q that models the link of an inner vertex."""
    t = vertex_type(L)
    if t.stratum != "inner":
        raise ValueError(f"{L} is not an inner vertex")
    if L.m == 2:
        q = check_prime(q)
        return SphericalComplex(q, 2, [("point", p) for p in enum_points(2, q)], [])
    return flag_complex(q)
