"""Independent oracles shared by the test modules.

Everything here works with raw exponent data and numpy grids of
monomials, never with the inclusion or limit logic of the package.
"""
import functools
import itertools

import numpy as np

from higher_buildings.complex import ApartmentSpec, build_apartment

CONFIGS = [(2, 1), (3, 1), (2, 2), (3, 2)]


@functools.lru_cache(maxsize=None)
def window(m, dim, N):
    return build_apartment(ApartmentSpec(m, dim, N))


# ---------------------------------------------------------------------------
# monomial grids


def box(B, dim):
    """Exponent grid [-B, B]**dim as (inner, outer) arrays (outer only in dim 1)."""
    r = np.arange(-B, B + 1)
    if dim == 1:
        return (None, r)
    inner, outer = np.meshgrid(r, r, indexing="xy")
    return (inner, outer)


def members(ideal, B, shift=None):
    """Boolean grid of the monomials t^g, g in the box, lying in the ideal.

    ``shift`` multiplies the ideal by t^shift first.  Membership of t^g in
    the principal ideal (t^a) is g - a >= 0 with the outer exponent read
    first; a partially infinite ideal of level j holds every g with outer
    exponent at least j.
    """
    dim = ideal.dim
    inner, outer = box(B, dim)
    shape = outer.shape
    s = (0,) * dim if shift is None else tuple(shift)
    if ideal.is_full:
        return np.ones(shape, dtype=bool)
    if ideal.is_partial:
        return outer >= ideal.level + s[-1]
    a = tuple(x + y for x, y in zip(ideal.gamma.coords, s))
    if dim == 1:
        return outer >= a[0]
    return (outer > a[1]) | ((outer == a[1]) & (inner >= a[0]))


def module_contains(big, small, B, shift_big=None, shift_small=None):
    return all(
        np.all(members(b, B, shift_big) | ~members(s, B, shift_small))
        for b, s in zip(big, small)
    )


def compatible_oracle(X, Y, W=6, B=12):
    """Scan scalings t^g, g in [-W, W]**dim, of Y against X on a monomial box."""
    for g in itertools.product(range(-W, W + 1), repeat=X.dim):
        if not (module_contains(X.components, Y.components, B, shift_small=g)
                or module_contains(Y.components, X.components, B, shift_big=g)):
            return False
    return True


# ---------------------------------------------------------------------------
# ray limits


def _identify(union, dim, B):
    """Read each boolean monomial grid back as (kind, inner, outer) keys.

    union has shape (C, m, R) in dim 1 and (C, m, R, R) in dim 2, with the
    outer exponent along the first grid axis.
    """
    if dim == 1:
        union = union[..., None]
    rows_all = union.all(axis=-1)
    rows_any = union.any(axis=-1)
    # an ideal is an up-set: once a row is (partly) filled, all later rows are full
    assert np.all(np.diff(rows_any.astype(int), axis=-1) >= 0)
    assert np.all(np.diff(rows_all.astype(int), axis=-1) >= 0)
    mixed = rows_any & ~rows_all
    assert np.all(mixed.sum(axis=-1) <= 1)
    is_full = rows_all.all(axis=-1)
    has_mixed = mixed.any(axis=-1)
    first_full_row = np.argmax(rows_all, axis=-1)
    mixed_row = np.argmax(mixed, axis=-1)
    row = np.take_along_axis(union, mixed_row[..., None, None], axis=-2)[..., 0, :]
    first_col = np.argmax(row, axis=-1)
    kind = np.where(is_full, 2, np.where(has_mixed, 0, 1))
    if dim == 1:
        # a single column: every row is either full or empty
        inner = np.zeros_like(kind)
        outer_ = np.where(kind == 2, 0, first_full_row - B)
        kind = np.where(kind == 1, 0, kind)
    else:
        inner = np.where(kind == 0, first_col - B, 0)
        outer_ = np.where(kind == 0, mixed_row - B, np.where(kind == 1, first_full_row - B, 0))
    return np.stack([kind, inner, outer_], axis=-1)


def _normalize_key(key):
    for kind, i, o in key:
        if kind == 0:
            return tuple((k, a - i, b - o) if k == 0 else (k, 0, b - o) if k == 1 else (2, 0, 0)
                         for k, a, b in key)
    for kind, i, o in key:
        if kind == 1:
            return tuple((k, 0, b - o) if k == 1 else (2, 0, 0) for k, a, b in key)
    raise AssertionError("all components full")


def ray_limit_oracle(bases, directions, dim, B=8, T=24, tail=4, chunk=20000):
    """Limit keys of the rays sum t^(b_k + s d_k) e_k for a batch of rays.

    bases, directions: integer arrays of shape (C, m, dim).  For each s in
    the last ``tail`` steps up to T the module is rescaled by the component
    with the fastest growing exponent, which makes the rescaled modules an
    ascending family; the union of their monomial sets on the box is read
    back as ideals and normalized.
    """
    bases = np.asarray(bases)
    directions = np.asarray(directions)
    out = []
    for lo in range(0, len(bases), chunk):
        keys = _ray_chunk(bases[lo:lo + chunk], directions[lo:lo + chunk], dim, B, T, tail)
        out.extend(_normalize_key(tuple(map(tuple, k))) for k in keys.tolist())
    return out


def _ray_chunk(bases, directions, dim, B, T, tail):
    C = len(bases)
    inner, outer = box(B, dim)
    rate = directions[..., 1] * 100 + directions[..., 0] if dim == 2 else directions[..., 0]
    anchor = np.argmax(rate, axis=1)
    union = None
    for s in range(T - tail + 1, T + 1):
        E = bases + s * directions
        V = E - E[np.arange(C), anchor][:, None, :]
        if dim == 1:
            mem = outer[None, None, :] >= V[..., 0][..., None]
        else:
            vo = V[..., 1][..., None, None]
            vi = V[..., 0][..., None, None]
            mem = (outer > vo) | ((outer == vo) & (inner >= vi))
        if union is not None:
            assert np.all(mem | ~union), "rescaled modules must ascend"
        union = mem if union is None else union | mem
    return _identify(union, dim, B)


# ---------------------------------------------------------------------------
# chain templates


# one period of each chain type in its displayed orientation; entries marked
# with a trailing * are the separating all-partial modules
TEMPLATES = {
    "P2-i": "<O|O|O> <M|O|O> <M|M|O> <M|M|M>",
    "P2-ii": "<Oc|Oc|Oc>* <O|O|Oc> <M|O|Oc> <M|M|Oc> <Mc|Mc|Oc>* <Mc|Mc|O> <Mc|Mc|M> <Mc|Mc|Mc>*",
    "P2-iii": "<Oc|Oc|Oc>* <O|Oc|Oc> <M|Oc|Oc> <Mc|Oc|Oc>* <Mc|O|Oc> <Mc|Mc|Oc>* <Mc|Mc|O> <Mc|Mc|Mc>*",
    "P2-iv": "<O|O|K> <M|O|K> <M|M|K>",
    "P2-v": "<O|K|K> <M|K|K>",
    "P1-i": "<O1|O1|O1> <O1|O1|m^1> <O1|m^1|m^1> <m^1|m^1|m^1>",
    "P1-ii": "<O1|O1|F> <m^1|O1|F> <m^1|m^1|F>",
    "P1-iii": "<O1|F|F> <m^1|F|F>",
    "D5-i": "<O|O> <M|O> <M|M>",
    "D5-ii": "<Oc|Oc>* <O|Oc> <M|Oc> <Mc|Oc>* <Mc|O> <Mc|M> <Mc|Mc>*",
    "D5-iii": "<O|K> <M|K>",
    "D3": "<O1|O1> <m^1|O1> <m^1|m^1>",
    "D4": "<O1|F> <m^1|F>",
}


def template(tag, dim):
    from higher_buildings.grammar import parse_components

    reps, marks = [], []
    for tok in TEMPLATES[tag].split():
        marks.append("inserted" if tok.endswith("*") else "member")
        reps.append(tuple(parse_components(tok.rstrip("*"), dim)[0]))
    return reps, marks


def _offset(a, b):
    """Monomial exponent t with t*a == b for one component pair, or None."""
    if a.kind != b.kind:
        return None
    if a.is_full:
        return "any"
    if a.is_partial:
        return ("outer", b.level - a.level)
    return tuple(y - x for x, y in zip(a.gamma.coords, b.gamma.coords))


def matches_template(seg, tag):
    """Is the segment the displayed period up to a permutation and a diagonal translation?"""
    reps, marks = template(tag, seg.dim)
    if len(reps) != len(seg.reps) or list(marks) != list(seg.markers):
        return False
    m = len(reps[0])
    for perm in itertools.permutations(range(m)):
        ok = True
        for k in range(m):
            offsets = {_offset(r[perm[k]], s[k]) for r, s in zip(reps, seg.reps)}
            offsets.discard("any")
            if None in offsets:
                ok = False
                break
            exact = {o for o in offsets if o[0] != "outer"}
            if len(exact) > 1:
                ok = False
                break
            outers = {o[1] for o in offsets if o[0] == "outer"}
            outers |= {o[-1] for o in exact}
            if len(outers) > 1:
                ok = False
                break
        if ok:
            return True
    return False


def saturated(seg, window=3, reach=8):
    """No module between consecutive members can be added to the chain.

    Every intermediate module found by the enumeration must either be a
    module of the chain already or fail to be comparable with some module
    of the chain.  The chain is closed under scalars, so all t1-scalings of
    its members within ``reach`` are chain modules; a smaller reach can only
    report spurious failures, never hide one.
    """
    from higher_buildings.chains import enumerate_intermediate, modules_include
    from higher_buildings.gamma import GammaElement
    from higher_buildings.lattices import translate_components

    chain = {tuple(r) for r in seg.reps}
    if seg.dim == 2:
        for r, mk in zip(seg.reps, seg.markers):
            if mk == "member":
                for k in range(-reach, reach + 1):
                    chain.add(tuple(translate_components(r, [GammaElement((k, 0))] * seg.m)))
    for a, b in zip(seg.reps, seg.reps[1:]):
        for X in enumerate_intermediate(a, b, window):
            if X in chain:
                continue
            if all(modules_include(X, Y) or modules_include(Y, X) for Y in chain):
                return False
    return True
