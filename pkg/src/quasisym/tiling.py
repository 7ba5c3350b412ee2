"""Combinatorial tilings over point sets: nearest-neighbor edges, angular
sectors, radial shells, and deterministic color partitions.

A cell is a (sector, shell) pair; colorings are functions of the cell, so
color symmetry can be checked by matching transformed vertices back onto
the set and comparing permuted colors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np
from scipy.spatial import cKDTree

from .symmetry import Similarity2D, apply_similarity2d

COLOR_SCHEMES = ("two_checker", "sector_alternate", "four_by_shell_and_parity")


@dataclass(frozen=True)
class Tiling:
    """Vertices with nearest-neighbor edges and (sector, shell) cell labels;
    ``colors`` is the per-vertex cell color, when assigned."""

    vertices: np.ndarray  # (m,) complex
    edges: np.ndarray  # (e, 2) int, each row i < j
    sectors: np.ndarray  # (m,) int
    shells: np.ndarray  # (m,) int
    n_sectors: int
    colors: np.ndarray | None = None
    origin: complex = 0j

    def __len__(self) -> int:
        return len(self.vertices)

    def with_colors(self, colors: np.ndarray) -> "Tiling":
        return replace(self, colors=np.asarray(colors, dtype=int))


def edges_by_nearest_neighbors(points, factor: float = 1.05) -> np.ndarray:
    """Index pairs (i < j) at distance <= factor * (global minimum pairwise
    distance), sorted lexicographically."""
    pts = np.asarray(getattr(points, "embedded", points), dtype=complex)
    if len(pts) < 2:
        raise ValueError("need at least 2 points")
    if factor < 1.0:
        raise ValueError("factor must be at least 1")
    xy = np.column_stack([pts.real, pts.imag])
    tree = cKDTree(xy)
    d, _ = tree.query(xy, k=2)
    dmin = float(d[:, 1].min())
    scale = float(np.abs(pts).max())
    if dmin <= 1e-12 * max(scale, 1.0):
        raise ValueError("all points coincident; no edge scale")
    pairs = sorted(tree.query_pairs(factor * dmin))
    return np.array(pairs, dtype=int).reshape(-1, 2)


def sector_partition(points, n: int, origin: complex = 0j) -> np.ndarray:
    """Angular sector index floor(theta * n / 2pi) per point, theta in
    [0, 2pi) about ``origin``.

    Points within 1e-12 of a sector ray snap to the sector that the ray
    opens (angle 0 belongs to sector 0); the exact origin gets sector 0.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    pts = np.asarray(getattr(points, "embedded", points), dtype=complex)
    rel = pts - origin
    theta = np.mod(np.angle(rel), 2.0 * np.pi)
    idx = np.floor(theta * n / (2.0 * np.pi) + 1e-12).astype(int) % n
    idx[rel == 0] = 0
    return idx


def radial_shells(points, origin: complex = 0j, tolerance: float = 1e-9) -> np.ndarray:
    """Shell index = rank of |z - origin| among the distinct radii; radii
    within ``tolerance`` collapse to one shell."""
    pts = np.asarray(getattr(points, "embedded", points), dtype=complex)
    r = np.abs(pts - origin)
    order = np.argsort(r)
    labels = np.empty(len(pts), dtype=int)
    shell = 0
    prev = None
    for i in order:
        if prev is not None and r[i] - prev > tolerance:
            shell += 1
        labels[i] = shell
        prev = r[i]
    return labels


def build_tiling(
    points,
    n_sectors: int,
    origin: complex = 0j,
    neighbor_factor: float = 1.05,
    tolerance: float = 1e-9,
) -> Tiling:
    """Assemble edges, sectors and shells for a point set in one pass."""
    pts = np.asarray(getattr(points, "embedded", points), dtype=complex)
    return Tiling(
        vertices=pts,
        edges=edges_by_nearest_neighbors(pts, neighbor_factor),
        sectors=sector_partition(pts, n_sectors, origin),
        shells=radial_shells(pts, origin, tolerance),
        n_sectors=n_sectors,
        origin=complex(origin),
    )


def color_partition(tiling: Tiling, scheme: str) -> np.ndarray:
    """Deterministic cell coloring.

    two_checker: (sector + shell) mod 2 - a proper 2-coloring of the cell
    graph when n_sectors is even.  sector_alternate: sector mod 2 (even
    n_sectors only).  four_by_shell_and_parity: 2*(shell mod 2) +
    (sector mod 2).
    """
    if scheme == "two_checker":
        return (tiling.sectors + tiling.shells) % 2
    if scheme == "sector_alternate":
        if tiling.n_sectors % 2 == 1:
            raise ValueError("sector_alternate needs an even sector count")
        return tiling.sectors % 2
    if scheme == "four_by_shell_and_parity":
        return 2 * (tiling.shells % 2) + tiling.sectors % 2
    raise ValueError(f"unknown color scheme {scheme!r}")


def color_symmetry_check(
    tiling: Tiling,
    op: Similarity2D,
    permutation: Sequence[int],
    tolerance: float = 1e-9,
) -> bool:
    """True when ``op`` maps every colored vertex onto a vertex whose color
    is permutation[original color]; requires op to fix the tiling origin.
    """
    if tiling.colors is None:
        raise ValueError("tiling has no colors; run color_partition first")
    if abs(op.center - tiling.origin) > tolerance:
        raise ValueError("operation must fix the tiling origin")
    perm = np.asarray(permutation, dtype=int)
    if perm.ndim != 1 or len(perm) <= tiling.colors.max():
        raise ValueError("permutation does not cover all colors")
    moved = np.array(
        [apply_similarity2d(op, z) for z in tiling.vertices], dtype=complex
    )
    xy = np.column_stack([tiling.vertices.real, tiling.vertices.imag])
    tree = cKDTree(xy)
    d, j = tree.query(np.column_stack([moved.real, moved.imag]))
    if d.max() > tolerance:
        return False
    return bool(np.all(tiling.colors[j] == perm[tiling.colors]))
