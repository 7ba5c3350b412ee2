"""Conformal and anticonformal images of point sets, and the Riemann-sphere
projection.

Covers the squaring map (which halves rotation orders), the reciprocal,
inversion in the unit circle, general Moebius maps, and the stereographic
projection; plus numeric certificates: angle preservation by finite
differences, circle-to-circle transport by least-squares circle fitting,
and coplanarity of spherical circle images.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.spatial import ConvexHull, cKDTree

from .algebra import INFINITY, CircleSpec, MobiusMap, is_infinity, mobius_apply
from .quasilattice import CrystalSet

_KINDS = ("square", "reciprocal", "inversion_unit_circle", "mobius", "stereographic")


@dataclass(frozen=True)
class SpherePoint:
    """Point (x0, x1, x2) on the unit sphere."""

    x0: float
    x1: float
    x2: float

    def __post_init__(self) -> None:
        norm = math.sqrt(self.x0**2 + self.x1**2 + self.x2**2)
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"not on the unit sphere (norm {norm})")

    def as_array(self) -> np.ndarray:
        return np.array([self.x0, self.x1, self.x2])


@dataclass(frozen=True)
class MapSpec:
    """Selector for the supported plane/sphere maps."""

    kind: str
    mobius: MobiusMap | None = None

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown map kind {self.kind!r}")
        if (self.kind == "mobius") != (self.mobius is not None):
            raise ValueError("mobius payload required exactly for kind='mobius'")

    @classmethod
    def square(cls) -> "MapSpec":
        return cls("square")

    @classmethod
    def reciprocal(cls) -> "MapSpec":
        return cls("reciprocal")

    @classmethod
    def inversion_unit_circle(cls) -> "MapSpec":
        return cls("inversion_unit_circle")

    @classmethod
    def from_mobius(cls, m: MobiusMap) -> "MapSpec":
        return cls("mobius", mobius=m)

    @classmethod
    def stereographic(cls) -> "MapSpec":
        return cls("stereographic")

    @property
    def anticonformal(self) -> bool:
        if self.kind == "inversion_unit_circle":
            return True
        if self.kind == "mobius":
            return self.mobius.anticonformal
        return False

    def singularities(self) -> list[complex]:
        """Finite points where conformality fails or the value is infinite."""
        if self.kind == "square":
            return [0j]  # critical point: angles double there
        if self.kind in ("reciprocal", "inversion_unit_circle"):
            return [0j]
        if self.kind == "mobius":
            p = self.mobius.pole()
            return [] if is_infinity(p) else [p]
        return []


def _stereographic(z: complex) -> SpherePoint:
    if is_infinity(z):
        return SpherePoint(-1.0, 0.0, 0.0)
    r2 = z.real * z.real + z.imag * z.imag
    denom = 1.0 + r2
    return SpherePoint((1.0 - r2) / denom, 2.0 * z.real / denom, 2.0 * z.imag / denom)


def map_point(spec: MapSpec, z: complex):
    """Image of one point: a complex number (possibly INFINITY) for the
    plane maps, a SpherePoint for the stereographic projection."""
    z = complex(z)
    if spec.kind == "square":
        return z * z
    if spec.kind == "reciprocal":
        return 1.0 / z if z != 0 else INFINITY
    if spec.kind == "inversion_unit_circle":
        return 1.0 / z.conjugate() if z != 0 else INFINITY
    if spec.kind == "mobius":
        return mobius_apply(spec.mobius, z)
    return _stereographic(z)


@dataclass(frozen=True)
class MapImage:
    """Image of a point set: planar points are a complex array, sphere
    points an (m, 3) array; ``dropped`` counts inputs sent to infinity."""

    points: np.ndarray
    dropped: int


def map_set(spec: MapSpec, s) -> MapImage:
    """Apply the map to every embedded point, in input order, dropping
    those that land at infinity."""
    pts = s.embedded if isinstance(s, CrystalSet) else np.asarray(s, dtype=complex)
    if spec.kind == "stereographic":
        out = np.array([_stereographic(z).as_array() for z in pts])
        return MapImage(out.reshape(-1, 3), 0)
    images = [map_point(spec, z) for z in pts]
    kept = [w for w in images if not is_infinity(w)]
    return MapImage(np.array(kept, dtype=complex), len(images) - len(kept))


# --- conformality -------------------------------------------------------------


@dataclass(frozen=True)
class ConformalityReport:
    deviation: float  # | |measured angle| - pi/4 |
    orientation: int  # +1 preserved, -1 reversed
    angle: float  # signed measured angle


def conformality_check(spec: MapSpec, z0: complex, h: float) -> ConformalityReport:
    """Measure the image angle between two short segments through z0 at
    0 and 45 degrees (symmetric secants of length 2h); for a conformal map
    the deviation from pi/4 is O(h^2) and the orientation sign is +1,
    for an anticonformal map the measured angle flips sign.
    """
    z0 = complex(z0)
    if h <= 0:
        raise ValueError("h must be positive")
    for s in spec.singularities():
        if abs(z0 - s) <= 10.0 * h:
            raise ValueError(f"z0 too close to the singular point {s}")
    d = h * cmath.exp(1j * math.pi / 4)
    if spec.kind == "stereographic":
        f = lambda z: _stereographic(z).as_array()
        u = f(z0 + h) - f(z0 - h)
        v = f(z0 + d) - f(z0 - d)
        normal = f(z0)  # outward sphere normal at the image
        cross = np.cross(u, v)
        signed = math.atan2(float(np.dot(cross, normal)), float(np.dot(u, v)))
    else:
        u = map_point(spec, z0 + h) - map_point(spec, z0 - h)
        v = map_point(spec, z0 + d) - map_point(spec, z0 - d)
        signed = cmath.phase(v / u)
    orientation = 1 if signed >= 0 else -1
    return ConformalityReport(
        deviation=abs(abs(signed) - math.pi / 4),
        orientation=orientation,
        angle=signed,
    )


# --- least-squares fits -------------------------------------------------------


def fit_circle(points: np.ndarray) -> tuple[complex, float, float]:
    """Algebraic least-squares circle through planar points: returns
    (center, radius, max geometric residual)."""
    pts = np.asarray(points, dtype=complex)
    if len(pts) < 3:
        raise ValueError("need at least 3 points to fit a circle")
    x, y = pts.real, pts.imag
    A = np.column_stack([x, y, np.ones_like(x)])
    rhs = -(x * x + y * y)
    (D, E, F), *_ = np.linalg.lstsq(A, rhs, rcond=None)
    cx, cy = -D / 2.0, -E / 2.0
    r2 = cx * cx + cy * cy - F
    if r2 <= 0:
        raise ValueError("degenerate circle fit")
    r = math.sqrt(r2)
    center = complex(cx, cy)
    residual = float(np.abs(np.abs(pts - center) - r).max())
    return center, r, residual


def fit_line(points: np.ndarray) -> tuple[complex, complex, float]:
    """Total least-squares line: returns (point, unit direction, max
    orthogonal residual)."""
    pts = np.asarray(points, dtype=complex)
    if len(pts) < 2:
        raise ValueError("need at least 2 points to fit a line")
    centroid = pts.mean()
    rel = pts - centroid
    mat = np.column_stack([rel.real, rel.imag])
    _, _, vt = np.linalg.svd(mat, full_matrices=False)
    direction = complex(vt[0, 0], vt[0, 1])
    normal = complex(-vt[0, 1], vt[0, 0])
    residual = float(np.abs((rel * normal.conjugate()).real).max())
    return centroid, direction, residual


def fit_plane(points: np.ndarray) -> tuple[np.ndarray, np.ndarray, float]:
    """Least-squares plane through 3-space points: returns (centroid, unit
    normal, max |signed distance|)."""
    pts = np.asarray(points, dtype=float).reshape(-1, 3)
    if len(pts) < 3:
        raise ValueError("need at least 3 points to fit a plane")
    centroid = pts.mean(axis=0)
    rel = pts - centroid
    _, _, vt = np.linalg.svd(rel, full_matrices=False)
    normal = vt[-1]
    residual = float(np.abs(rel @ normal).max())
    return centroid, normal, residual


@dataclass(frozen=True)
class CircleImageReport:
    mode: str  # "circle" | "line" | "plane"
    residual: float


def circle_image_check(
    spec: MapSpec, circle: CircleSpec, samples: int = 64
) -> CircleImageReport:
    """Sample the circle, map the samples, and fit the expected image
    shape: a circle (or a line when the map's pole lies on the circle) for
    the plane maps, a plane for the stereographic projection.  The
    residual certifies the circle-to-circle property numerically.
    """
    if samples < 8:
        raise ValueError("need at least 8 samples")
    if circle.is_line:
        t = np.linspace(-3.0, 3.0, samples)
        zs = circle.line_x + 1j * t
    else:
        theta = 2.0 * np.pi * np.arange(samples) / samples
        zs = circle.center + circle.radius * np.exp(1j * theta)

    if spec.kind == "stereographic":
        img = np.array([_stereographic(z).as_array() for z in zs])
        _, _, residual = fit_plane(img)
        return CircleImageReport("plane", residual)

    line_mode = False
    for pole in spec.singularities():
        if spec.kind == "square":
            continue  # z^2 has no pole; the origin is a critical point only
        if circle.is_line:
            line_mode = line_mode or abs(pole.real - circle.line_x) <= 1e-9
        else:
            line_mode = (
                line_mode
                or abs(abs(pole - circle.center) - circle.radius) <= 1e-9
            )
    images = np.array(
        [map_point(spec, z) for z in zs if not is_infinity(map_point(spec, z))],
        dtype=complex,
    )
    if line_mode:
        # drop the few samples blown up toward infinity for a stable fit
        finite = images[np.abs(images) <= 1e9]
        _, _, residual = fit_line(finite)
        return CircleImageReport("line", residual)
    _, _, residual = fit_circle(images)
    return CircleImageReport("circle", residual)


# --- special points of an inverted lattice patch -------------------------------


def _circle_circle_intersections(
    c1: complex, r1: float, c2: complex, r2: float
) -> list[complex]:
    d = abs(c2 - c1)
    if d == 0:
        return []
    a = (r1 * r1 - r2 * r2 + d * d) / (2.0 * d)
    h2 = r1 * r1 - a * a
    if h2 < -1e-15 * max(r1, r2) ** 2:
        return []
    h = math.sqrt(max(h2, 0.0))
    u = (c2 - c1) / d
    base = c1 + a * u
    if h == 0.0:
        return [base]
    return [base + 1j * h * u, base - 1j * h * u]


def special_points_of_inversion_rows(
    rows: Sequence[np.ndarray], tolerance: float = 1e-9
) -> int:
    """Invert boundary rows in the unit circle, fit a circle to each image
    row, and count intersection points of cyclically adjacent fitted
    circles that lie inside the convex hull of the mapped row points.

    Every boundary line maps to a circle through the inversion center (the
    image of the far field), so all fitted circles share that one point; it
    is excluded, leaving exactly the corner images where two adjacent image
    arcs actually meet.
    """
    if len(rows) < 2:
        raise ValueError("need at least 2 boundary rows")
    images = []
    for row in rows:
        row = np.asarray(row, dtype=complex)
        if len(row) < 3:
            raise ValueError("fewer than 3 points in a boundary row")
        if np.any(np.abs(row) <= tolerance):
            raise ValueError("boundary row passes through the inversion center")
        images.append(1.0 / row.conjugate())
    circles = [fit_circle(img)[:2] for img in images]

    allpts = np.concatenate(images)
    hull = ConvexHull(np.column_stack([allpts.real, allpts.imag]))
    scale = float(np.abs(allpts).max())
    # Corner images belong to the mapped point set, so they sit inside or
    # exactly on the hull; include the boundary within tolerance.
    margin = 1e-9 * max(scale, 1.0)
    concurrence_tol = 1e-6 * max(scale, 1.0)

    def inside(p: complex) -> bool:
        xy = np.array([p.real, p.imag, 1.0])
        return bool(np.all(hull.equations @ xy <= margin))

    def on_every_circle(p: complex) -> bool:
        return all(abs(abs(p - c) - r) <= concurrence_tol for c, r in circles)

    count = 0
    for i in range(len(circles)):
        (c1, r1) = circles[i]
        (c2, r2) = circles[(i + 1) % len(circles)]
        for p in _circle_circle_intersections(c1, r1, c2, r2):
            if inside(p) and not on_every_circle(p):
                count += 1
    return count


def special_points_of_inverted_square(s: CrystalSet, tolerance: float = 1e-9) -> int:
    """Count the special points produced by inverting a square lattice
    patch in the unit circle: the four boundary rows map to four circles
    whose adjacent crossings inside the image bound the central region.
    """
    if s.kind != "square":
        raise ValueError("expected a square-lattice set")
    pts = s.embedded
    x, y = pts.real, pts.imag
    m = round(float(x.max()))
    if m < 1:
        raise ValueError("degenerate patch: no boundary rows")
    rows = [
        pts[np.abs(x - m) < 0.25],
        pts[np.abs(y - m) < 0.25],
        pts[np.abs(x + m) < 0.25],
        pts[np.abs(y + m) < 0.25],
    ]
    return special_points_of_inversion_rows(rows, tolerance)


def hexagonal_boundary_rows(s: CrystalSet) -> list[np.ndarray]:
    """The six boundary rows of a hexagon-cropped hexagonal patch, in
    cyclic order (rows maximize the projections onto the six edge
    normals)."""
    if s.kind != "hexagonal":
        raise ValueError("expected a hexagonal-lattice set")
    pts = s.embedded
    rows = []
    for k in range(6):
        proj = (pts * np.exp(-1j * np.pi * k / 3)).real
        m = proj.max()
        rows.append(pts[np.abs(proj - m) < 0.25])
    return rows


# --- sphere -------------------------------------------------------------------


def inverse_stereographic(p: SpherePoint) -> complex:
    """Plane point whose projection is p; the pole x0 = -1 is the image of
    infinity and returns the explicit INFINITY value."""
    if 1.0 + p.x0 <= 1e-12:
        return INFINITY
    return complex(p.x1, p.x2) / (1.0 + p.x0)


def invert_sphere3d(
    p: Sequence[float], center: Sequence[float], radius: float
) -> np.ndarray:
    """Inversion in the sphere |x - center| = radius:
    p -> center + radius^2 (p - center)/|p - center|^2."""
    p = np.asarray(p, dtype=float)
    center = np.asarray(center, dtype=float)
    if radius <= 0:
        raise ValueError("radius must be positive")
    rel = p - center
    d2 = float(np.dot(rel, rel))
    if d2 == 0.0:
        raise ValueError("cannot invert the center of the sphere")
    return center + (radius * radius / d2) * rel
