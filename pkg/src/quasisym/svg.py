"""Deterministic SVG rendering of point sets and tilings.

Output is a plain SVG 1.1 string built line by line: no timestamps, no
random ids, so identical inputs produce identical bytes.  Points become
``<circle>`` elements, edges ``<line>`` elements, and optional sector rays
a single ``<path>``; element counts therefore mirror the geometry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

DEFAULT_PALETTE = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#ff7f0e",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
)


@dataclass(frozen=True)
class RenderOptions:
    width_px: int = 800
    height_px: int = 800
    point_radius_px: float = 3.0
    palette: tuple[str, ...] = DEFAULT_PALETTE
    draw_edges: bool = True
    draw_rays: bool = False
    background: str = "white"
    edge_color: str = "#555555"
    margin_frac: float = 0.05


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def write_svg(points, tiling=None, options: RenderOptions | None = None) -> str:
    """Render a point set (and optionally its tiling) to an SVG string.

    ``points`` may be a complex array, an (m, 2) float array, or anything
    with an ``embedded`` attribute.  When ``tiling`` is given its vertices
    take precedence and its edges / colors are drawn.
    """
    opt = options or RenderOptions()
    pts = tiling.vertices if tiling is not None else getattr(points, "embedded", points)
    pts = np.asarray(pts)
    if pts.ndim == 2 and pts.shape[1] >= 2:
        pts = pts[:, 0].astype(float) + 1j * pts[:, 1].astype(float)
    pts = pts.astype(complex)
    if len(pts) == 0:
        raise ValueError("nothing to render: empty point set")

    xs, ys = pts.real, pts.imag
    span = max(xs.max() - xs.min(), ys.max() - ys.min(), 1e-12)
    pad = opt.margin_frac * span
    x0, x1 = xs.min() - pad, xs.max() + pad
    y0, y1 = ys.min() - pad, ys.max() + pad
    # Keep the aspect ratio square so circles stay circles.
    side = max(x1 - x0, y1 - y0)
    cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
    x0, x1 = cx - side / 2, cx + side / 2
    y0, y1 = cy - side / 2, cy + side / 2
    scale = opt.width_px / side

    def to_px(z: complex) -> tuple[float, float]:
        # SVG y grows downward; flip so the plane reads conventionally.
        return ((z.real - x0) * scale, (y1 - z.imag) * scale)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{opt.width_px}" height="{opt.height_px}" '
        f'viewBox="0 0 {opt.width_px} {opt.height_px}">',
        f'<rect width="100%" height="100%" fill="{opt.background}"/>',
    ]

    if opt.draw_rays and tiling is not None and tiling.n_sectors >= 1:
        ray_len = side
        segs = []
        origin = complex(getattr(tiling, "origin", 0j))
        origin_px = to_px(origin)
        for k in range(tiling.n_sectors):
            ang = 2 * math.pi * k / tiling.n_sectors
            tip = origin + ray_len * complex(math.cos(ang), math.sin(ang))
            tx, ty = to_px(tip)
            segs.append(
                f"M {_fmt(origin_px[0])} {_fmt(origin_px[1])} L {_fmt(tx)} {_fmt(ty)}"
            )
        lines.append(
            f'<path d="{" ".join(segs)}" stroke="#cccccc" stroke-width="1" fill="none"/>'
        )

    if tiling is not None and opt.draw_edges:
        for i, j in tiling.edges:
            ax, ay = to_px(pts[i])
            bx, by = to_px(pts[j])
            lines.append(
                f'<line x1="{_fmt(ax)}" y1="{_fmt(ay)}" x2="{_fmt(bx)}" y2="{_fmt(by)}" '
                f'stroke="{opt.edge_color}" stroke-width="1"/>'
            )

    colors = None
    if tiling is not None and tiling.colors is not None:
        colors = np.asarray(tiling.colors, dtype=int)
    for idx, z in enumerate(pts):
        px, py = to_px(z)
        if colors is not None:
            fill = opt.palette[colors[idx] % len(opt.palette)]
        else:
            fill = opt.palette[0]
        lines.append(
            f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="{_fmt(opt.point_radius_px)}" '
            f'fill="{fill}"/>'
        )

    lines.append("</svg>")
    return "\n".join(lines) + "\n"
