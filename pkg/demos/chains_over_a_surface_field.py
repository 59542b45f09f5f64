# Maximal chains of lattices over a two-dimensional local field, and what
# the residue projection does to the simplices they span.
# Run: python3 demos/chains_over_a_surface_field.py
from collections import Counter

from higher_buildings import (
    ApartmentSpec,
    build_apartment,
    maximal_chains_through,
    parse_lattice,
    project_pi,
    project_window,
    vertex_type,
)
from higher_buildings.grammar import format_components

# one vertex of each type and the chains through it (* = separating module)
for text in ("<O|O|O>", "<O|O|Oc>", "<O|Oc|Oc>", "<O|O|K>", "<O|K|K>"):
    L = parse_lattice(text)
    t = vertex_type(L)
    chains = maximal_chains_through(L)
    tag, seg = chains[0]
    marks = ["*" if mk == "inserted" else "" for mk in seg.markers]
    print(f"{text:12} type {t.code} ({t.stratum}), {len(chains)} orientation(s), chain {tag}")
    print("   " + " > ".join(s + mk for s, mk in zip(seg.to_strings(), marks)), " period", seg.period)

# inside a chain through <O|Oc> the modules between Oc+Oc and Mc+Oc
# form an infinite descending family P(i,0)+Oc
_, seg = maximal_chains_through(parse_lattice("<O|Oc>"))[0]
print("\nrank 2 chain through <O|Oc>, members scaled by t1^k for |k| <= 2:")
print("   " + " > ".join(format_components(r) for r in seg.expand(inner_range=2)))

# the window and its projection to the apartment over the residue field
w = build_apartment(ApartmentSpec(3, 2, 2))
print("\nrank 3 window over the surface field:", w.counts())
img, records = project_window(w)
tri = Counter((str(r.tag), r.behaviour) for r in records if len(r.simplex) == 3)
for (tag, beh), n in sorted(tri.items()):
    print(f"  {n:5d} triangles of type {tag} -> {beh}")
print("image window:", img.counts())

for text in ("<O|O|O>", "<M|O|O>", "<M|M|O>", "<Mc|Mc|Oc>", "<O|K|K>"):
    print(f"  pi{text} = {project_pi(parse_lattice(text))}")
