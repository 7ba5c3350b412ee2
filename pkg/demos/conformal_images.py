"""Conformal images of lattice patches.

w = z^2 halves the rotation order of a set (the two half-turn copies fold
onto each other), reciprocal-type maps send circles to circles, and the
inversion image of a square boundary meets itself in exactly four special
points.
"""

import numpy as np

from quasisym.algebra import CircleSpec, MobiusMap
from quasisym.conformal import (
    MapSpec,
    circle_image_check,
    conformality_check,
    map_set,
    special_points_of_inverted_square,
)
from quasisym.quasilattice import generate_periodic, point_group_order

square = generate_periodic("square", 3.0)
hexa = generate_periodic("hexagonal", 3.0)

print("rotation orders before / after w = z^2")
for name, s in (("square", square), ("hexagonal", hexa)):
    img = map_set(MapSpec.square(), s)
    print(f"  {name:<10} {point_group_order(s)} -> {point_group_order(img.points)}")

# angles are preserved wherever the derivative is nonzero
rep = conformality_check(MapSpec.square(), 1 + 0j, 1e-5)
print(f"\nz^2 at z=1: angle deviation {rep.deviation:.2e}, orientation {rep.orientation:+d}")
rep = conformality_check(MapSpec.inversion_unit_circle(), 2 + 0j, 1e-5)
print(f"1/conj(z) at z=2: deviation {rep.deviation:.2e}, orientation {rep.orientation:+d}")

# circles stay circles under any Moebius map...
m = MapSpec.from_mobius(MobiusMap(1, 2j, 1, 3 + 0j))
rep = circle_image_check(m, CircleSpec(A=1.0, B=-1.0, C=-3.0))
print(f"\nMoebius image of a circle: fit mode {rep.mode!r}, residual {rep.residual:.2e}")

# ...except a circle through the pole, which straightens into a line
pole = MobiusMap(1, 2j, 1, 3 + 0j).pole()
center = pole - 1.5
through = CircleSpec(A=1.0, B=-center.real, C=abs(center) ** 2 - 1.5 ** 2)
rep = circle_image_check(m, through)
print(f"circle through the pole: fit mode {rep.mode!r}, residual {rep.residual:.2e}")

# count the special points where the inverted square boundary crosses itself
s = generate_periodic("square", 2.5, metric="chebyshev")
print("\nspecial points of the inverted square boundary:",
      special_points_of_inverted_square(s))

# inversion piles the far half of the patch into a small neighbourhood of 0
pts = square.embedded[np.abs(square.embedded) > 1e-9]
img = map_set(MapSpec.inversion_unit_circle(), pts).points
r = np.median(np.abs(img))
print("inversion image: %d of %d points inside the median radius %.4f"
      % ((np.abs(img) <= r).sum(), len(img), r))
