# two-colored wheels and when a motion swaps the colors
#
# Cells are (sector, shell) pairs. A checkerboard coloring flips parity on
# every one-step rotation, so the rotation is a color-SWAPPING symmetry,
# while the two-step rotation keeps each color in place.

import math
import pathlib

import numpy as np

from quasisym.symmetry import Similarity2D
from quasisym.tiling import build_tiling, color_partition, color_symmetry_check
from quasisym.jsonio import TilingDocument, write_tiling
from quasisym.svg import RenderOptions, write_svg

out = pathlib.Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

radii = [1.0, 1.5, 2.25]
pts = np.array([r * np.exp(2j * np.pi * k / 8) for r in radii for k in range(8)])
t = build_tiling(pts, n_sectors=8)
t = t.with_colors(color_partition(t, "two_checker"))

step = Similarity2D.rotation(2 * math.pi / 8)
double = Similarity2D.rotation(2 * (2 * math.pi / 8))
swap, keep = [1, 0], [0, 1]

print("8-spoke wheel, two_checker coloring")
for label, op, perm in [
    ("rotate 45deg, swap colors ", step, swap),
    ("rotate 45deg, keep colors ", step, keep),
    ("rotate 90deg, swap colors ", double, swap),
    ("rotate 90deg, keep colors ", double, keep),
]:
    print(f"  {label}: {color_symmetry_check(t, op, perm)}")

# mirror across the x-axis maps sector k to -k; parity survives, colors stay
mirror = Similarity2D.reflection(axis_angle=0.0)
print(f"  mirror, keep colors       : {color_symmetry_check(t, mirror, keep)}")

cp = color_partition(t, "four_by_shell_and_parity")
print("four-color scheme uses colors", sorted({int(c) for c in cp}))

doc = TilingDocument.from_tiling(t)
write_tiling(doc, out / "checker_wheel.json")
svg = write_svg(pts, tiling=t, options=RenderOptions(draw_rays=True, point_radius_px=6.0))
(out / "checker_wheel.svg").write_text(svg)
print("wrote", out / "checker_wheel.svg")

# the checkerboard is proper on the cell grid: one step in sector or shell
# always lands on the other color
cells = {(int(s), int(h)): int(c) for s, h, c in zip(t.sectors, t.shells, t.colors)}
clashes = 0
for (sec, sh), c in cells.items():
    for nb in (((sec + 1) % 8, sh), (sec, sh + 1)):
        if nb in cells and cells[nb] == c:
            clashes += 1
print("adjacent same-colored cells:", clashes)
