# The affine Weyl group: generators, orders, and how elements move classes.
# Run: python3 demos/weyl_group_moves.py
from higher_buildings import parse_lattice
from higher_buildings.weyl import (
    WeylElement,
    act,
    ball,
    generators,
    involution_fixed_point,
    parse_weyl,
    translation,
    weyl_order,
)

gens = generators(3, 2)
for name, g in gens.items():
    print(f"{name}: {g}  order {weyl_order(g)}")

for r in range(4):
    print(f"elements of word length <= {r}: {len(ball(gens, r))}")

# a rotation of S_3 keeps the centre fixed and turns its neighbours
rot = WeylElement.make((1, 2, 0), [(0, 0)] * 3, 2)
L = parse_lattice("<O|O|O>")
print("\nrotation fixes", L, "->", act(rot, L))
for text in ("<M|O|O>", "<M|M|O>"):
    print(f"  {text} -> {act(rot, parse_lattice(text))}")

# translations along the inner boundary of the rank 2 apartment
outer = translation([(0, 0), (0, 1)], 2)
inner = translation([(0, 0), (1, 0)], 2)
for text in ("<O|Oc>", "<Oc|O>", "<O|P(2,1)>"):
    L = parse_lattice(text)
    print(f"{text:12} outer shift -> {act(outer, L)}   inner shift -> {act(inner, L)}")

# reflections of the tree line and their centres
for c in range(-2, 3):
    w = WeylElement.make((1, 0), [0, c], 1)
    print(f"swap with offset {c}: centre at {involution_fixed_point(w)}")

print("\nparsed word s1*w2*T(0;(1,0);(0,-1)):", parse_weyl("s1*w2*T(0;(1,0);(0,-1))", 3, 2))
