"""JSON, DOT and SVG renderings of apartment windows."""
from __future__ import annotations

import json
import math
from importlib import resources

from .complex import SimplicialSetWindow
from .lattices import vertex_type

__all__ = ["window_to_dict", "to_json", "to_dot", "to_svg", "load_schema", "positions"]

STRATUM_COLOURS = {
    "inner": "#1f77b4",
    "inner-boundary": "#2ca02c",
    "external": "#d62728",
    "boundary": "#d62728",
}


def load_schema():
    text = resources.files("higher_buildings").joinpath("schema/window.schema.json").read_text()
    return json.loads(text)


def window_to_dict(w: SimplicialSetWindow):
    verts = []
    for i, L in enumerate(w.vertices):
        t = vertex_type(L)
        verts.append({"id": i, "lattice": str(L), "stratum": t.stratum, "type": t.code})
    simplices = []
    for k in sorted(w.simplices):
        if k == 0:
            continue
        for s in w.simplices[k]:
            tag = w.tags.get(s)
            simplices.append({"vertices": list(s), "dim": k, "chain_type": str(tag) if tag else None})
    conv = [
        {"source": a.source, "direction": [list(d) for d in a.direction],
         "target": str(a.target), "target_id": a.target_index}
        for a in w.annotations
    ]
    return {
        "m": w.spec.m,
        "dim": w.spec.dim,
        "bound": w.spec.bound,
        "vertices": verts,
        "simplices": simplices,
        "convergence": conv,
    }


def to_json(w: SimplicialSetWindow, indent=None) -> str:
    return json.dumps(window_to_dict(w), indent=indent, sort_keys=True)


def to_dot(w: SimplicialSetWindow) -> str:
    lines = ["graph apartment {", "  node [shape=circle, style=filled, fontsize=8];"]
    for i, L in enumerate(w.vertices):
        colour = STRATUM_COLOURS[w.stratum(i)]
        lines.append(f'  v{i} [label="{L}", fillcolor="{colour}"];')
    for a, b in w.of_dim(1):
        lines.append(f"  v{a} -- v{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# plane coordinates of the triangular lattice: i along u, j along v
_U = (1.0, 0.0)
_V = (-0.5, math.sqrt(3) / 2)


def _plane(i, j, scale=1.0):
    return (scale * (i * _U[0] + j * _V[0]), scale * (i * _U[1] + j * _V[1]))


def _inner_position(L, dim):
    comps = L.components
    if dim == 1:
        exps = [c.gamma.coords[0] for c in comps]
        if len(exps) == 3:
            return _plane(exps[1] - exps[0], exps[2] - exps[0])
        return (float(exps[1] - exps[0]), 0.0)
    outer = [c.gamma.outer for c in comps]
    inner = [c.gamma.inner for c in comps]
    if len(comps) == 3:
        big = _plane(outer[1] - outer[0], outer[2] - outer[0], scale=6.0)
        small = _plane(inner[1] - inner[0], inner[2] - inner[0], scale=0.9)
    else:
        big = (6.0 * (outer[1] - outer[0]), 0.0)
        small = (0.9 * (inner[1] - inner[0]), 0.0)
    return (big[0] + small[0], big[1] + small[1])


def positions(w: SimplicialSetWindow):
    """Deterministic plane layout: inner vertices on the lattice, limits pushed outward."""
    pos = {}
    for i, L in enumerate(w.vertices):
        if w.stratum(i) == "inner":
            pos[i] = _inner_position(L, w.spec.dim)
    sources = {}
    for a in w.annotations:
        if a.target_index is not None and a.target_index not in pos:
            sources.setdefault(a.target_index, []).append(a)
    for j, anns in sorted(sources.items()):
        cx = sum(pos[a.source][0] for a in anns) / len(anns)
        cy = sum(pos[a.source][1] for a in anns) / len(anns)
        dx = dy = 0.0
        for a in anns[:1]:
            for k, d in enumerate(a.direction):
                step = d[-1] if w.spec.dim == 1 or d[-1] else 0.35 * d[0]
                if w.spec.m == 3:
                    base = [(-_U[0] - _V[0], -_U[1] - _V[1]), _U, _V][k]
                else:
                    base = [(-1.0, 0.0), (1.0, 0.0)][k]
                dx += step * base[0]
                dy += step * base[1]
        reach = 3.0 + (2.0 if w.spec.dim == 1 else 6.0) * w.spec.bound
        pos[j] = (cx + reach * dx, cy + reach * dy)
    for i in range(len(w.vertices)):
        pos.setdefault(i, (0.0, -3.0 - i))
    return pos


def to_svg(w: SimplicialSetWindow, size=720) -> str:
    pos = positions(w)
    xs = [p[0] for p in pos.values()]
    ys = [p[1] for p in pos.values()]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0, 1.0)
    pad = 20

    def tr(p):
        return (pad + (p[0] - x0) / span * (size - 2 * pad), size - pad - (p[1] - y0) / span * (size - 2 * pad))

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">']
    out.append('<g class="convergence" stroke="#999" stroke-dasharray="2,3" fill="none">')
    for a in w.annotations:
        if a.target_index is None:
            continue
        (ax, ay), (bx, by) = tr(pos[a.source]), tr(pos[a.target_index])
        out.append(f'<line x1="{ax:.2f}" y1="{ay:.2f}" x2="{bx:.2f}" y2="{by:.2f}"/>')
    out.append("</g>")
    out.append('<g class="edges" stroke="#333" stroke-width="1">')
    for a, b in w.of_dim(1):
        (ax, ay), (bx, by) = tr(pos[a]), tr(pos[b])
        out.append(f'<line x1="{ax:.2f}" y1="{ay:.2f}" x2="{bx:.2f}" y2="{by:.2f}"/>')
    out.append("</g>")
    out.append('<g class="nodes">')
    for i, L in enumerate(w.vertices):
        x, y = tr(pos[i])
        colour = STRATUM_COLOURS[w.stratum(i)]
        out.append(f'<circle class="node" cx="{x:.2f}" cy="{y:.2f}" r="3" fill="{colour}"><title>{L}</title></circle>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
