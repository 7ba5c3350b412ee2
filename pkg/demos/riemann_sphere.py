"""Lifting plane sets to the unit sphere and inverting in 3D."""

import numpy as np

from quasisym.algebra import CircleSpec, INFINITY
from quasisym.conformal import (
    MapSpec,
    SpherePoint,
    circle_image_check,
    inverse_stereographic,
    invert_sphere3d,
    map_point,
    map_set,
)
from quasisym.quasilattice import generate_periodic

st = MapSpec.stereographic()

# landmark points: 0 -> near pole, 1 -> equator, infinity -> far pole
for z in (0j, 1 + 0j, INFINITY):
    p = map_point(st, z)
    print(f"z = {z!s:<8} -> ({p.x0:+.4f}, {p.x1:+.4f}, {p.x2:+.4f})")

# lift a whole lattice patch; every image sits on the unit sphere
s = generate_periodic("square", 4.0)
cloud = map_set(st, s).points
norms = np.linalg.norm(cloud, axis=1)
print(f"\nlifted {len(cloud)} lattice points, max |norm - 1| = "
      f"{np.abs(norms - 1).max():.2e}")

# and comes back down exactly
back = np.array([inverse_stereographic(SpherePoint(*row)) for row in cloud])
print("round-trip error:", np.abs(back - s.embedded).max())

# plane circles lift to plane sections of the sphere (true circles in 3D)
rep = circle_image_check(st, CircleSpec(A=1.0, B=-1.0, C=-3.0))
print(f"lifted circle: fit mode {rep.mode!r}, coplanarity residual {rep.residual:.2e}")

# inversion in a 3D sphere, the spatial version of the same construction
q = invert_sphere3d((2.0, 0.0, 0.0), (0.0, 0.0, 0.0), 1.0)
print("\ninvert (2,0,0) in the unit sphere ->", q)
p = np.array([0.3, -1.2, 0.7])
r2 = invert_sphere3d(invert_sphere3d(p, (0.5, 0, -1), 1.7), (0.5, 0, -1), 1.7)
print("double inversion displacement:", np.linalg.norm(r2 - p))

# points on the inversion sphere stay put
fixed = invert_sphere3d((0.0, 0.6, 0.8), (0.0, 0.0, 0.0), 1.0)
print("on-sphere point maps to:", fixed)
