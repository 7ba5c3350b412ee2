import math
import pathlib

import numpy as np

from quasisym.symmetry import (
    fixed_point_check,
    orbit,
    parse_symbol,
    random_words,
)
from quasisym.tiling import build_tiling, radial_shells
from quasisym.jsonio import PointSetDocument, TilingDocument, write_pointset, write_tiling
from quasisym.svg import RenderOptions, write_svg

out = pathlib.Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

# a similarity group written the short way: 10-fold rotation wheel plus a
# spiral shrink by the golden mean, turned -pi/5 per step
group = parse_symbol("10L(phi=-pi/5)")
print("parsed 10L(phi=-pi/5):")
for g in group.generators:
    print("   ", g.kind, "k=%.6f" % g.k, "phi=%.6f" % g.phi)

pts = orbit(group, [1 + 0j])
print("orbit of z=1 inside the annulus:", len(pts), "points,",
      len(set(radial_shells(pts))), "shells")

# every word in the generators fixes the shared center
words = random_words(len(group.generators), 200, 8, seed=3)
print("max displacement of the center over 200 random words:",
      fixed_point_check(group, words))

# the mirrored variant has a third generator
mirrored = parse_symbol("10mL(phi=pi/5)", annulus=(0.05, 8.0))
mpts = orbit(mirrored, [1 + 0j])
print("10mL(phi=pi/5) orbit:", len(mpts), "points")

# bad symbols report where they went wrong
for text in ("10X", "10L(phi=pi/5)x"):
    try:
        parse_symbol(text)
    except ValueError as e:
        print(f"parse {text!r}: {e}")

# write the wheel out with sector rays so the symmetry is visible
t = build_tiling(mpts, n_sectors=10)
write_pointset(PointSetDocument.from_points(mpts, n=10), out / "wheel.json")
write_tiling(TilingDocument.from_tiling(t), out / "wheel_tiling.json")
svg = write_svg(mpts, tiling=t,
                options=RenderOptions(draw_rays=True, point_radius_px=2.5))
(out / "wheel.svg").write_text(svg)
print("wrote", out / "wheel.svg")

# sanity: the spiral step scales by tau each application
tau = (1 + math.sqrt(5)) / 2
radii = sorted({round(abs(z), 9) for z in pts})
ratios = [radii[i + 1] / radii[i] for i in range(len(radii) - 1)]
print("shell radius ratios:", np.round(ratios, 6), "~ tau =", round(tau, 6))
