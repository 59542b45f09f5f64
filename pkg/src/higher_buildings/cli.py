"""Command line interface: ``higher-buildings <command> ...``."""
from __future__ import annotations

import argparse
import json
import math
import sys

from .chains import adjacent, maximal_chain_through
from .complex import ApartmentSpec, build_apartment, link
from .export import to_dot, to_json, to_svg
from .gamma import as_gamma
from .lattices import compactify, parse_lattice, project_pi, ray_limit, vertex_type
from .spherical import flag_complex, link_residue
from .weyl import act, parse_weyl, weyl_order


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _window_output(w, fmt):
    if fmt == "json":
        return to_json(w, indent=2)
    if fmt == "dot":
        return to_dot(w)
    if fmt == "svg":
        return to_svg(w)
    lines = [f"m={w.spec.m} dim={w.spec.dim} N={w.spec.bound}"]
    lines.append("simplices " + " ".join(f"{k}:{n}" for k, n in w.counts().items()))
    for i, L in enumerate(w.vertices):
        lines.append(f"{i} {L} {w.stratum(i)}")
    return "\n".join(lines)


def _classify_text(L):
    t = vertex_type(L)
    if not t.is_vertex:
        return f"type={t.code} stratum=none chain=none"
    tag, _ = maximal_chain_through(L)
    return f"type={t.code} stratum={t.stratum} chain={tag}"


def _parse_vector(text, dim):
    out = []
    for tok in text.split(";"):
        tok = tok.strip()
        if tok in ("K", "F"):
            out.append(None)
        elif tok.startswith("("):
            out.append(as_gamma([int(x) for x in tok.strip("()").split(",")], dim))
        elif dim == 2 and int(tok) == 0:
            out.append(as_gamma((0, 0)))
        else:
            out.append(as_gamma(int(tok), dim))
    return out


def cmd_apartment(a):
    w = build_apartment(ApartmentSpec(a.m, a.dim, a.N))
    return _window_output(w, a.format)


def cmd_classify(a):
    L = parse_lattice(a.lattice, a.dim)
    if a.format == "json":
        t = vertex_type(L)
        tag = str(maximal_chain_through(L)[0]) if t.is_vertex else None
        return json.dumps({"lattice": str(L), "type": t.code, "stratum": t.stratum, "chain": tag})
    return _classify_text(L)


def cmd_chain(a):
    L = parse_lattice(a.lattice, a.dim)
    tag, seg = maximal_chain_through(L)
    if a.format == "json":
        d = seg.to_dict()
        d["type"] = str(tag)
        return json.dumps(d, indent=2)
    marks = ["*" if mk == "inserted" else "" for mk in seg.markers]
    body = " > ".join(s + mk for s, mk in zip(seg.to_strings(), marks))
    return f"{tag}: {body}  (period {seg.period})"


def cmd_adjacent(a):
    X = parse_lattice(a.first, a.dim)
    Y = parse_lattice(a.second, X.dim)
    return "true" if adjacent(X, Y) else "false"


def cmd_act(a):
    L = parse_lattice(a.lattice, a.dim)
    w = parse_weyl(a.word, L.m, L.dim)
    return str(act(w, L))


def cmd_link(a):
    L = parse_lattice(a.lattice, a.dim)
    if a.q is not None:
        res = link_residue(L, a.q)
        nv, ne = res.counts()
        return f"vertices={nv} edges={ne}"
    w = build_apartment(ApartmentSpec(L.m, L.dim, a.N))
    lk = link(w, L)
    if a.format == "text":
        lines = [f"vertices={len(lk.vertices)} edges={len(lk.of_dim(1))}"]
        lines += [str(v) for v in lk.vertices]
        return "\n".join(lines)
    return _window_output(lk, a.format)


def cmd_project(a):
    return str(project_pi(parse_lattice(a.lattice, 2)))


def cmd_limit(a):
    base = _parse_vector(a.base, a.dim)
    direction = _parse_vector(a.direction, a.dim)
    return str(ray_limit(base, direction))


def cmd_compactify(a):
    cv = compactify(parse_lattice(a.lattice, 1))
    if cv.family_index is None:
        return str(cv.target)
    return f"{cv.target} family={cv.family_index}"


def cmd_residue(a):
    if a.m == 2:
        L = parse_lattice("<O1|O1>", 1)
        nv, ne = link_residue(L, a.q).counts()
    else:
        nv, ne = flag_complex(a.q).counts()
    return f"vertices={nv} edges={ne}"


def cmd_weyl_order(a):
    order = weyl_order(parse_weyl(a.word, a.m, a.dim))
    return "inf" if order == math.inf else str(order)


def build_parser():
    p = argparse.ArgumentParser(prog="higher-buildings", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, *args, m=False, dim=False, N=False, q=False):
        sp = sub.add_parser(name)
        for arg in args:
            sp.add_argument(arg)
        if m:
            sp.add_argument("--m", type=int, default=3, choices=(2, 3))
        sp.add_argument("--dim", type=int, default=None if not dim else 2, choices=(1, 2))
        if N:
            sp.add_argument("--N", type=int, default=2)
        if q:
            sp.add_argument("--q", type=int, default=None)
        sp.add_argument("--format", default="text", choices=("text", "json", "dot", "svg"))
        sp.add_argument("--out", default=None)
        sp.set_defaults(func=func)
        return sp

    add("apartment", cmd_apartment, m=True, dim=True, N=True)
    add("classify", cmd_classify, "lattice")
    add("chain", cmd_chain, "lattice")
    add("adjacent", cmd_adjacent, "first", "second")
    add("act", cmd_act, "word", "lattice")
    add("link", cmd_link, "lattice", N=True, q=True)
    add("project", cmd_project, "lattice")
    sp = add("limit", cmd_limit, dim=True)
    sp.add_argument("--base", required=True, help="e.g. '0;(1,0);K'")
    sp.add_argument("--direction", required=True, help="e.g. '0;0;(-1,0)'")
    add("compactify", cmd_compactify, "lattice")
    sp = add("residue", cmd_residue, m=True)
    sp.add_argument("--q", type=int, required=True)
    add("weyl-order", cmd_weyl_order, "word", m=True, dim=True)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        text = args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(text, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
