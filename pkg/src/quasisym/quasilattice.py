"""Point sets with n-fold symmetry in exact cyclotomic integer coordinates.

A point is an integer coefficient vector over the n-th roots of unity;
rotation is a cyclic index shift, mirror reflection is index reversal, and
self-similar inflation is cyclic convolution with the integer expression
of the scaling coefficient.  Embeddings into the plane are the only
floating-point step.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np
from scipy.spatial import cKDTree

from .algebra import MetallicMean

#: Orders with a documented self-similar scaling coefficient.
STANDARD_ORDERS = (5, 8, 10, 12, 14, 16, 18)

# Integer expression of the inflation coefficient over the roots of unity:
# index -> coefficient of zeta_n^index.  Periodic lattices (n = 4, 6) scale
# by the integer 2; the quasilattice orders scale by a metallic mean.
INFLATION_MASKS: dict[int, dict[int, int]] = {
    4: {0: 2},
    5: {2: -1, 3: -1},
    6: {0: 2},
    8: {0: 1, 1: 1, 7: 1},
    10: {1: 1, 9: 1},
    12: {0: 1, 1: 1, 11: 1},
}

#: Numeric scaling coefficient of the inflation, per order.
INFLATION_MEANS: dict[int, MetallicMean | int] = {
    4: 2,
    5: MetallicMean.TAU,
    6: 2,
    8: MetallicMean.RHO,
    10: MetallicMean.TAU,
    12: MetallicMean.ETA,
}


def inflation_factor(n: int) -> float:
    mean = INFLATION_MEANS[n]
    return float(mean) if isinstance(mean, int) else mean.value()


@lru_cache(maxsize=None)
def roots_of_unity(n: int) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(n) / n)


@dataclass(frozen=True)
class CyclotomicPoint:
    """Integer coefficients over the n-th roots of unity (full length n,
    no cyclotomic reduction; vectors are exact but not canonical)."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError("n must be at least 3")
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    def embed(self) -> complex:
        return complex(np.dot(self.coeffs, roots_of_unity(self.n)))


def rotate_point(p: CyclotomicPoint) -> CyclotomicPoint:
    """Multiply by zeta_n: cyclic shift of the coefficient vector."""
    c = p.coeffs
    return CyclotomicPoint(p.n, (c[-1],) + c[:-1])


def reflect_point(p: CyclotomicPoint) -> CyclotomicPoint:
    """Complex conjugation: index i -> (n - i) mod n."""
    c = p.coeffs
    return CyclotomicPoint(p.n, tuple(c[(p.n - i) % p.n] for i in range(p.n)))


def inflate_point(p: CyclotomicPoint) -> CyclotomicPoint:
    """Multiply by the order's scaling coefficient: cyclic convolution of
    the coefficients with the coefficient's integer mask."""
    mask = INFLATION_MASKS.get(p.n)
    if mask is None:
        raise ValueError(f"no inflation coefficient defined for n={p.n}")
    out = [0] * p.n
    for shift, m in mask.items():
        for i, ci in enumerate(p.coeffs):
            out[(i + shift) % p.n] += m * ci
    return CyclotomicPoint(p.n, tuple(out))


@dataclass(frozen=True)
class CrystalSet:
    """A finite symmetric point set: exact coefficient vectors plus their
    planar embeddings, deduplicated at ``tolerance``."""

    n: int
    coeff_matrix: np.ndarray  # (m, n) integer
    embedded: np.ndarray  # (m,) complex
    tolerance: float
    radius: float
    kind: str  # "square" | "hexagonal" | "quasilattice"

    def __len__(self) -> int:
        return len(self.embedded)

    @property
    def points(self) -> list[CyclotomicPoint]:
        return [
            CyclotomicPoint(self.n, tuple(int(c) for c in row))
            for row in self.coeff_matrix
        ]


@dataclass(frozen=True)
class SelfSimilarityReport:
    checked: int
    contained: int

    @property
    def ok(self) -> bool:
        return self.checked == self.contained


# --- deduplication helpers ----------------------------------------------------


def _grid_keys(emb: np.ndarray, cell: float) -> np.ndarray:
    # integer grid cells packed as exact complex pairs (safe below 2^53)
    return np.round(emb.real / cell) + 1j * np.round(emb.imag / cell)


def _merge_unique(chunks_emb, chunks_coeff, cell):
    emb = np.concatenate(chunks_emb)
    coeff = np.concatenate(chunks_coeff)
    _, idx = np.unique(_grid_keys(emb, cell), return_index=True)
    idx.sort()
    return emb[idx], coeff[idx]


def _drop_close_pairs(emb: np.ndarray, tol: float) -> np.ndarray:
    """Indices to keep so that no two survivors are within tol (grid
    dedup can miss pairs straddling a cell boundary)."""
    if len(emb) < 2:
        return np.arange(len(emb))
    tree = cKDTree(np.column_stack([emb.real, emb.imag]))
    drop = set()
    for i, j in tree.query_pairs(tol):
        drop.add(max(i, j))
    if not drop:
        return np.arange(len(emb))
    return np.array([i for i in range(len(emb)) if i not in drop])


def _sorted_order(emb: np.ndarray, tol: float) -> np.ndarray:
    q = max(tol, 1e-12)
    return np.lexsort((np.round(emb.imag / q), np.round(emb.real / q)))


def dedup_embeddings(emb: np.ndarray, tol: float) -> np.ndarray:
    """Deduplicated copy of a complex point array (tolerance metric)."""
    emb = np.asarray(emb, dtype=complex)
    _, idx = np.unique(_grid_keys(emb, max(tol, 1e-12)), return_index=True)
    idx.sort()
    emb = emb[idx]
    return emb[_drop_close_pairs(emb, tol)]


def sets_match(a: np.ndarray, b: np.ndarray, tol: float) -> bool:
    """True when two deduplicated point sets coincide within tol."""
    if len(a) != len(b):
        return False
    if len(a) == 0:
        return True
    ta = cKDTree(np.column_stack([a.real, a.imag]))
    db, _ = ta.query(np.column_stack([b.real, b.imag]))
    if db.max() > tol:
        return False
    tb = cKDTree(np.column_stack([b.real, b.imag]))
    da, _ = tb.query(np.column_stack([a.real, a.imag]))
    return da.max() <= tol


# --- generators ---------------------------------------------------------------


def generate_periodic(kind: str, radius: float, metric: str = "euclidean") -> CrystalSet:
    """Square (n=4) or hexagonal (n=6) lattice patch.

    ``metric`` "euclidean" crops to a disk; "chebyshev" crops to the
    square |x|,|y| <= radius (n=4) or the regular hexagon with inradius
    ``radius`` (n=6), which keeps whole boundary rows.
    """
    if kind not in ("square", "hexagonal"):
        raise ValueError(f"unknown periodic kind {kind!r}")
    if radius <= 0:
        raise ValueError("radius must be positive")
    if metric not in ("euclidean", "chebyshev"):
        raise ValueError(f"unknown metric {metric!r}")
    n = 4 if kind == "square" else 6
    basis = 1j if kind == "square" else roots_of_unity(6)[1]
    span = int(np.ceil(radius * 2)) + 1
    xs, ys = np.meshgrid(np.arange(-span, span + 1), np.arange(-span, span + 1))
    xs, ys = xs.ravel(), ys.ravel()
    emb = xs + basis * ys
    eps = 1e-9
    if metric == "euclidean":
        keep = np.abs(emb) <= radius + eps
    elif kind == "square":
        keep = np.maximum(np.abs(emb.real), np.abs(emb.imag)) <= radius + eps
    else:
        # regular hexagon: bound the projections onto the three edge normals
        proj = np.abs(np.stack([
            (emb * np.exp(-1j * np.pi * k / 3)).real for k in range(3)
        ]))
        keep = proj.max(axis=0) <= radius + eps
    xs, ys, emb = xs[keep], ys[keep], emb[keep]
    coeff = np.zeros((len(emb), n), dtype=np.int16)
    coeff[:, 0] = xs
    coeff[:, 1] = ys
    order = _sorted_order(emb, 1e-9)
    return CrystalSet(
        n=n,
        coeff_matrix=coeff[order],
        embedded=emb[order],
        tolerance=1e-9,
        radius=float(radius),
        kind=kind,
    )


def generate_quasilattice(
    n: int,
    coeff_bound: int,
    radius: float,
    tolerance: float = 1e-9,
    include_negation: bool = True,
) -> CrystalSet:
    """All integer combinations sum(c_i * zeta_n^i) with |c_i| <= coeff_bound
    whose embedding lies within ``radius``, deduplicated at ``tolerance``.

    Enumeration runs one exponent at a time (opposite exponents adjacent so
    zeta^i and -zeta^i collapse early), pruning partial sums that cannot
    return within the radius and deduplicating embeddings after each stage.
    For odd n the set is united with its negation by default; interval
    coefficient ranges are already negation-closed, so this is a
    documented no-op safeguard.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be at least 1")
    if radius <= 0:
        raise ValueError("radius must be positive")
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    if n not in STANDARD_ORDERS:
        warnings.warn(
            f"n={n} has no documented scaling coefficient; generating anyway",
            UserWarning,
            stacklevel=2,
        )

    roots = roots_of_unity(n)
    if n % 2 == 0:
        order = [i for pair in zip(range(n // 2), range(n // 2, n)) for i in pair]
    else:
        order = list(range(n))

    cell = max(tolerance, 1e-12)
    emb = np.zeros(1, dtype=complex)
    coeff = np.zeros((1, n), dtype=np.int16)
    for step, idx in enumerate(order):
        slack = coeff_bound * (len(order) - step - 1)
        limit = radius + tolerance + slack
        acc_emb, acc_coeff = [emb[:0]], [coeff[:0]]
        rows = 0
        for c in range(-coeff_bound, coeff_bound + 1):
            e2 = emb + c * roots[idx]
            keep = np.abs(e2) <= limit
            e2 = e2[keep]
            c2 = coeff[keep].copy()
            c2[:, idx] = c
            acc_emb.append(e2)
            acc_coeff.append(c2)
            rows += len(e2)
            if rows > 4_000_000:
                merged = _merge_unique(acc_emb, acc_coeff, cell)
                acc_emb, acc_coeff = [merged[0]], [merged[1]]
                rows = len(merged[0])
        emb, coeff = _merge_unique(acc_emb, acc_coeff, cell)

    keep = np.abs(emb) <= radius + tolerance
    emb, coeff = emb[keep], coeff[keep]
    if include_negation and n % 2 == 1:
        both = np.concatenate([emb, -emb])
        both_c = np.concatenate([coeff, -coeff])
        _, idx = np.unique(_grid_keys(both, cell), return_index=True)
        idx.sort()
        emb, coeff = both[idx], both_c[idx]
    keep_idx = _drop_close_pairs(emb, tolerance)
    emb, coeff = emb[keep_idx], coeff[keep_idx]
    order_idx = _sorted_order(emb, tolerance)
    return CrystalSet(
        n=n,
        coeff_matrix=coeff[order_idx],
        embedded=emb[order_idx],
        tolerance=tolerance,
        radius=float(radius),
        kind="quasilattice",
    )


# --- set-level operations -----------------------------------------------------


def _as_points(s) -> np.ndarray:
    if isinstance(s, CrystalSet):
        return s.embedded
    return np.asarray(s, dtype=complex)


def point_group_order(s, tolerance: float | None = None, max_order: int = 24) -> int:
    """Largest m <= max_order with the embedded set invariant under
    rotation by 2*pi/m about the origin.

    A single point at the origin is fixed by every rotation and reports
    max_order by convention.
    """
    pts = _as_points(s)
    if len(pts) == 0:
        raise ValueError("empty point set")
    tol = tolerance if tolerance is not None else getattr(s, "tolerance", 1e-9)
    pts = dedup_embeddings(pts, tol)
    for m in range(max_order, 0, -1):
        if sets_match(pts, pts * np.exp(2j * np.pi / m), tol):
            return m
    return 1


def _inflate_matrix(coeff: np.ndarray, n: int) -> np.ndarray:
    mask = INFLATION_MASKS[n]
    out = np.zeros_like(coeff, dtype=np.int32)
    for shift, m in mask.items():
        out += m * np.roll(coeff, shift, axis=1)
    return out


def verify_self_similarity(
    s: CrystalSet, reference_bound: int | None = None
) -> SelfSimilarityReport:
    """Inflate every point exactly and count how many inflated embeddings
    lie (within tolerance) in a reference set regenerated with a larger
    coefficient bound; ``contained == checked`` certifies closure.

    The default reference bound is the set's own maximum coefficient
    magnitude times the sum of absolute mask coefficients of the scaling
    factor — the exact bound on an inflated coefficient, so every inflated
    vector is enumerable in the reference.  The reference radius covers the
    scaled points.
    """
    if len(s) == 0:
        return SelfSimilarityReport(0, 0)
    if s.n not in INFLATION_MASKS:
        raise ValueError(f"no inflation coefficient defined for n={s.n}")

    inflated = _inflate_matrix(np.asarray(s.coeff_matrix, dtype=np.int32), s.n)
    emb = inflated @ roots_of_unity(s.n)

    k = inflation_factor(s.n)
    ref_radius = k * float(np.abs(s.embedded).max()) + 2 * s.tolerance + 1e-9
    if s.kind in ("square", "hexagonal"):
        ref = generate_periodic(s.kind, ref_radius)
    else:
        if reference_bound is None:
            own_bound = int(np.abs(s.coeff_matrix).max())
            mask_weight = sum(abs(v) for v in INFLATION_MASKS[s.n].values())
            reference_bound = max(own_bound * mask_weight, 1)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", UserWarning)
            ref = generate_quasilattice(s.n, reference_bound, ref_radius, s.tolerance)

    tree = cKDTree(np.column_stack([ref.embedded.real, ref.embedded.imag]))
    d, _ = tree.query(np.column_stack([emb.real, emb.imag]))
    contained = int((d <= s.tolerance).sum())
    return SelfSimilarityReport(checked=len(s), contained=contained)
