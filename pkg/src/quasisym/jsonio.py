"""JSON documents for point sets and tilings.

Documents are plain dataclasses with field-exact round-trips: floats are
serialized with Python's shortest-round-trip repr (the json default), so
read(write(doc)) == doc.  Loading re-validates structural invariants,
including the agreement between exact coefficients and embeddings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .quasilattice import CrystalSet, roots_of_unity
from .tiling import Tiling

FORMAT_VERSION = 1


class DocumentError(ValueError):
    """Malformed or inconsistent document."""


@dataclass(frozen=True)
class PointRecord:
    """One point: planar position, optional exact coefficients, optional
    third coordinate for sphere projections."""

    x: float
    y: float
    coeffs: tuple[int, ...] | None = None
    z: float | None = None


@dataclass(frozen=True)
class PointSetDocument:
    n: int
    tolerance: float
    points: tuple[PointRecord, ...]
    metadata: dict[str, str] = field(default_factory=dict)
    format_version: int = FORMAT_VERSION

    def embedded(self) -> np.ndarray:
        return np.array([complex(p.x, p.y) for p in self.points], dtype=complex)

    @classmethod
    def from_crystal_set(
        cls, s: CrystalSet, metadata: dict[str, str] | None = None
    ) -> "PointSetDocument":
        meta = {"kind": s.kind, "radius": repr(s.radius)}
        if metadata:
            meta.update(metadata)
        records = tuple(
            PointRecord(x=float(z.real), y=float(z.imag), coeffs=tuple(int(c) for c in row))
            for row, z in zip(s.coeff_matrix, s.embedded)
        )
        return cls(n=s.n, tolerance=s.tolerance, points=records, metadata=meta)

    @classmethod
    def from_points(
        cls,
        points,
        n: int,
        tolerance: float = 1e-9,
        metadata: dict[str, str] | None = None,
    ) -> "PointSetDocument":
        records = []
        for p in np.asarray(points):
            if np.shape(p) == (3,):
                records.append(PointRecord(float(p[0]), float(p[1]), z=float(p[2])))
            else:
                z = complex(p)
                records.append(PointRecord(float(z.real), float(z.imag)))
        return cls(
            n=n,
            tolerance=tolerance,
            points=tuple(records),
            metadata=dict(metadata or {}),
        )

    def to_crystal_set(self) -> CrystalSet:
        """Rebuild the exact set; requires coefficients on every point."""
        if any(p.coeffs is None for p in self.points):
            raise DocumentError("document has no exact coefficients")
        coeff = np.array([p.coeffs for p in self.points], dtype=np.int16)
        emb = self.embedded()
        kind = self.metadata.get("kind", "quasilattice")
        radius = float(self.metadata.get("radius", np.abs(emb).max() if len(emb) else 0.0))
        return CrystalSet(
            n=self.n,
            coeff_matrix=coeff,
            embedded=emb,
            tolerance=self.tolerance,
            radius=radius,
            kind=kind,
        )


def _point_to_json(p: PointRecord) -> dict:
    out: dict = {}
    if p.coeffs is not None:
        out["coeffs"] = list(p.coeffs)
    out["x"] = p.x
    out["y"] = p.y
    if p.z is not None:
        out["z"] = p.z
    return out


def dumps_pointset(doc: PointSetDocument) -> str:
    payload = {
        "format_version": doc.format_version,
        "n": doc.n,
        "tolerance": doc.tolerance,
        "points": [_point_to_json(p) for p in doc.points],
        "metadata": dict(sorted(doc.metadata.items())),
    }
    return json.dumps(payload, indent=2) + "\n"


def loads_pointset(text: str) -> PointSetDocument:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"invalid JSON: {e}") from e
    if not isinstance(payload, dict):
        raise DocumentError("expected a JSON object")
    if payload.get("format_version") != FORMAT_VERSION:
        raise DocumentError(
            f"unsupported format_version {payload.get('format_version')!r}"
        )
    try:
        n = int(payload["n"])
        tolerance = float(payload["tolerance"])
        raw_points = payload["points"]
        metadata = payload.get("metadata", {})
    except (KeyError, TypeError, ValueError) as e:
        raise DocumentError(f"malformed document: {e}") from e
    if not isinstance(metadata, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in metadata.items()
    ):
        raise DocumentError("metadata must be a string-to-string map")
    records = []
    for i, rp in enumerate(raw_points):
        try:
            coeffs = tuple(int(c) for c in rp["coeffs"]) if "coeffs" in rp else None
            rec = PointRecord(
                x=float(rp["x"]),
                y=float(rp["y"]),
                coeffs=coeffs,
                z=float(rp["z"]) if "z" in rp else None,
            )
        except (KeyError, TypeError, ValueError) as e:
            raise DocumentError(f"malformed point {i}: {e}") from e
        if rec.coeffs is not None:
            if len(rec.coeffs) != n:
                raise DocumentError(f"point {i}: expected {n} coefficients")
            emb = complex(np.dot(rec.coeffs, roots_of_unity(n)))
            if abs(emb - complex(rec.x, rec.y)) > 1e-9:
                raise DocumentError(
                    f"point {i}: coefficients embed to {emb}, not ({rec.x}, {rec.y})"
                )
        records.append(rec)
    return PointSetDocument(
        n=n,
        tolerance=tolerance,
        points=tuple(records),
        metadata=dict(metadata),
    )


def write_pointset(doc: PointSetDocument, path: str | Path) -> None:
    Path(path).write_text(dumps_pointset(doc), encoding="utf-8")


def read_pointset(path: str | Path) -> PointSetDocument:
    return loads_pointset(Path(path).read_text(encoding="utf-8"))


# --- tilings ------------------------------------------------------------------


@dataclass(frozen=True)
class TilingDocument:
    n_sectors: int
    vertices: tuple[tuple[float, float], ...]
    edges: tuple[tuple[int, int], ...]
    sectors: tuple[int, ...]
    shells: tuple[int, ...]
    colors: tuple[int, ...] | None = None
    metadata: dict[str, str] = field(default_factory=dict)
    format_version: int = FORMAT_VERSION

    @classmethod
    def from_tiling(
        cls, t: Tiling, metadata: dict[str, str] | None = None
    ) -> "TilingDocument":
        return cls(
            n_sectors=t.n_sectors,
            vertices=tuple((float(z.real), float(z.imag)) for z in t.vertices),
            edges=tuple((int(i), int(j)) for i, j in t.edges),
            sectors=tuple(int(s) for s in t.sectors),
            shells=tuple(int(s) for s in t.shells),
            colors=None if t.colors is None else tuple(int(c) for c in t.colors),
            metadata=dict(metadata or {}),
        )

    def to_tiling(self) -> Tiling:
        return Tiling(
            vertices=np.array([complex(x, y) for x, y in self.vertices]),
            edges=np.array(self.edges, dtype=int).reshape(-1, 2),
            sectors=np.array(self.sectors, dtype=int),
            shells=np.array(self.shells, dtype=int),
            n_sectors=self.n_sectors,
            colors=None if self.colors is None else np.array(self.colors, dtype=int),
        )


def dumps_tiling(doc: TilingDocument) -> str:
    payload = {
        "format_version": doc.format_version,
        "n_sectors": doc.n_sectors,
        "vertices": [list(v) for v in doc.vertices],
        "edges": [list(e) for e in doc.edges],
        "sectors": list(doc.sectors),
        "shells": list(doc.shells),
        "colors": None if doc.colors is None else list(doc.colors),
        "metadata": dict(sorted(doc.metadata.items())),
    }
    return json.dumps(payload, indent=2) + "\n"


def loads_tiling(text: str) -> TilingDocument:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"invalid JSON: {e}") from e
    if payload.get("format_version") != FORMAT_VERSION:
        raise DocumentError(
            f"unsupported format_version {payload.get('format_version')!r}"
        )
    try:
        doc = TilingDocument(
            n_sectors=int(payload["n_sectors"]),
            vertices=tuple(
                (float(x), float(y)) for x, y in payload["vertices"]
            ),
            edges=tuple((int(i), int(j)) for i, j in payload["edges"]),
            sectors=tuple(int(s) for s in payload["sectors"]),
            shells=tuple(int(s) for s in payload["shells"]),
            colors=(
                None
                if payload.get("colors") is None
                else tuple(int(c) for c in payload["colors"])
            ),
            metadata=dict(payload.get("metadata", {})),
        )
    except (KeyError, TypeError, ValueError) as e:
        raise DocumentError(f"malformed tiling document: {e}") from e
    m = len(doc.vertices)
    if len(doc.sectors) != m or len(doc.shells) != m:
        raise DocumentError("sectors/shells must match the vertex count")
    if doc.colors is not None and len(doc.colors) != m:
        raise DocumentError("colors must match the vertex count")
    if any(not (0 <= i < m and 0 <= j < m) for i, j in doc.edges):
        raise DocumentError("edge index out of range")
    return doc


def write_tiling(doc: TilingDocument, path: str | Path) -> None:
    Path(path).write_text(dumps_tiling(doc), encoding="utf-8")


def read_tiling(path: str | Path) -> TilingDocument:
    return loads_tiling(Path(path).read_text(encoding="utf-8"))
