# Quasilattices with forbidden rotation orders
# ---------------------------------------------
# Integer combinations of the n-th roots of unity give point sets with
# 5-, 8-, 10- and 12-fold symmetry -- orders no periodic lattice can have.
# Each of these sets is self-similar: scaling by the right metallic mean
# maps the set into itself.

import pathlib

from quasisym.quasilattice import (
    generate_periodic,
    generate_quasilattice,
    inflate_point,
    inflation_factor,
    point_group_order,
    verify_self_similarity,
)
from quasisym.jsonio import PointSetDocument, write_pointset
from quasisym.svg import RenderOptions, write_svg

out = pathlib.Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

for n, name in [(5, "pentagonal"), (8, "octagonal"), (10, "decagonal"), (12, "dodecagonal")]:
    s = generate_quasilattice(n, coeff_bound=1, radius=3.0)
    rep = verify_self_similarity(s)
    print(f"n={n:>2} ({name}): {len(s):>4} points, "
          f"rotation order {point_group_order(s)}, "
          f"self-similar under k={inflation_factor(n):.6f} "
          f"({rep.contained}/{rep.checked} inflated points land in the set)")

# the periodic lattices do the same thing with k = 2
for kind in ("square", "hexagonal"):
    s = generate_periodic(kind, 3.0)
    rep = verify_self_similarity(s)
    print(f"{kind}: {len(s)} points, order {point_group_order(s)}, "
          f"doubling keeps {rep.contained}/{rep.checked}")

# inflation acts on exact coefficient vectors; the embedding scales exactly
s8 = generate_quasilattice(8, 1, 2.0)
p = s8.points[1]
q = inflate_point(p)
print("\ninflation of", p.coeffs, "->", q.coeffs)
print("embeds", p.embed(), "->", q.embed(), " ratio", abs(q.embed() / p.embed()))

# dump the octagonal set for the other demos / the CLI to pick up
doc = PointSetDocument.from_crystal_set(s8)
write_pointset(doc, out / "octagonal.json")

svg = write_svg(generate_quasilattice(8, 1, 6.0),
                options=RenderOptions(point_radius_px=2.0))
(out / "octagonal.svg").write_text(svg)
print("\nwrote", out / "octagonal.json", "and", out / "octagonal.svg")
