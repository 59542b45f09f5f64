# Apartments of PGL(2) and PGL(3) over a one-dimensional local field.
# Run: python3 demos/apartment_over_a_curve_field.py
from collections import Counter

from higher_buildings import ApartmentSpec, build_apartment, link, parse_lattice, pgl2_lines, ray_limit
from higher_buildings.export import to_svg

# the tree line: x_i = <O + m^i>, two ends at infinity
tree = build_apartment(ApartmentSpec(2, 1, 3))
print("tree window:", tree.counts())
for i, L in enumerate(tree.vertices):
    print(" ", i, L, tree.stratum(i))

# the plane of PGL(3): inner vertices ij = <O + m^i + m^j>
plane = build_apartment(ApartmentSpec(3, 1, 2))
print("\nrank 3 window:", plane.counts())
print("strata:", dict(Counter(plane.stratum(i) for i in range(len(plane.vertices)))))

# every inner vertex with its whole star in the window has a hexagon as link
centre = parse_lattice("<O1|O1|O1>")
lk = link(plane, centre)
print("\nlink of", centre, "->", len(lk.vertices), "vertices,", len(lk.of_dim(1)), "edges")
for v in lk.vertices:
    print(" ", v)

# rays running off to the boundary
for i in range(-2, 3):
    print(f"ray <O + m^{i} + m^j>, j -> -inf:", ray_limit([0, i, 0], [0, 0, -1]))
print("ray <O + m^0 + m^j>, j -> +inf:", ray_limit([0, 0, 0], [0, 0, 1]))

# the three PGL(2) lines through the centre
for movers, items in pgl2_lines(plane, centre):
    print("\nmoving coordinates", movers)
    print("  " + " - ".join(str(it.lattice) for it in items))

# picture of the window with the boundary rays dotted
with open("apartment_rank3.svg", "w") as fh:
    fh.write(to_svg(plane))
print("\nwrote apartment_rank3.svg")
