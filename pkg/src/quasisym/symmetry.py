"""Similarity symmetry operations about a shared special point.

The plane operations are homothety K (pure scaling), spiral motion L
(scaling plus rotation), and homothetic reflection M (scaling plus mirror
reflection); each fixes one special point O.  Their 3-space analogues act
about an axis through O.  Groups generated by such operations about a
common O have every group word fixing O, which the orbit and fixed-point
routines exercise numerically.
"""

from __future__ import annotations

import cmath
import math
import re
from collections import deque
from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

from .algebra import MetallicMean


def _wrap_angle(x: float) -> float:
    """Normalize to (-pi, pi]."""
    y = math.remainder(x, math.tau)
    if y <= -math.pi:
        y += math.tau
    return y


@dataclass(frozen=True)
class Similarity2D:
    """z -> O + k * exp(i*phi) * R(z - O), with R a reflection across the
    line through O at ``axis_angle`` when ``reflect`` else the identity.

    k > 0 is the scaling coefficient.  Kinds: K (phi = 0, no reflection,
    k != 1), L (phi != 0, no reflection), M (reflection).
    """

    k: float
    phi: float = 0.0
    reflect: bool = False
    axis_angle: float = 0.0
    center: complex = 0j

    def __post_init__(self) -> None:
        if self.k <= 0:
            raise ValueError("scaling coefficient k must be positive")
        object.__setattr__(self, "center", complex(self.center))

    @property
    def kind(self) -> str:
        if self.reflect:
            return "M"
        if _wrap_angle(self.phi) != 0.0:
            return "L"
        return "K" if self.k != 1.0 else "identity"

    def _multiplier(self) -> complex:
        ang = self.phi + (2.0 * self.axis_angle if self.reflect else 0.0)
        return self.k * cmath.exp(1j * ang)

    @classmethod
    def homothety(cls, k: float, center: complex = 0j) -> "Similarity2D":
        return cls(k=k, center=center)

    @classmethod
    def spiral(cls, k: float, phi: float, center: complex = 0j) -> "Similarity2D":
        return cls(k=k, phi=phi, center=center)

    @classmethod
    def rotation(cls, phi: float, center: complex = 0j) -> "Similarity2D":
        return cls(k=1.0, phi=phi, center=center)

    @classmethod
    def reflection(
        cls, k: float = 1.0, axis_angle: float = 0.0, center: complex = 0j
    ) -> "Similarity2D":
        return cls(k=k, reflect=True, axis_angle=axis_angle, center=center)


def apply_similarity2d(op: Similarity2D, z: complex) -> complex:
    w = complex(z) - op.center
    if op.reflect:
        w = w.conjugate()
    return op.center + op._multiplier() * w


def _from_multiplier(mult: complex, reflect: bool, center: complex) -> Similarity2D:
    k = abs(mult)
    ang = cmath.phase(mult)
    if reflect:
        return Similarity2D(
            k=k, phi=0.0, reflect=True, axis_angle=ang / 2.0, center=center
        )
    return Similarity2D(k=k, phi=_wrap_angle(ang), center=center)


def compose_similarity2d(op1: Similarity2D, op2: Similarity2D) -> Similarity2D:
    """The operation z -> op1(op2(z)); both must share the special point.

    Coefficients multiply; rotation angles add, with the sign flipped when
    passing through a reflection; reflection flags combine by XOR.
    """
    if op1.center != op2.center:
        raise ValueError("special points differ")
    m2 = op2._multiplier()
    if op1.reflect:
        m2 = m2.conjugate()
    return _from_multiplier(
        op1._multiplier() * m2, op1.reflect != op2.reflect, op1.center
    )


def inverse_similarity2d(op: Similarity2D) -> Similarity2D:
    m = op._multiplier()
    if op.reflect:
        return _from_multiplier(1.0 / m.conjugate(), True, op.center)
    return _from_multiplier(1.0 / m, False, op.center)


# --- 3-space ------------------------------------------------------------------


@dataclass(frozen=True)
class Similarity3D:
    """p -> O + k * [reflect?] Rot(axis, phi) (p - O).

    ``axis`` is a unit 3-vector through the special point O = ``center``;
    ``reflect`` mirrors in the plane through O normal to the axis.  With
    reflect and phi = 0 this is the 3D homothetic reflection; with reflect
    and phi != 0 the spiral reflection whose square is the spiral motion
    with coefficient k^2 and angle 2*phi.
    """

    k: float
    axis: tuple[float, float, float]
    phi: float = 0.0
    reflect: bool = False
    center: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def __post_init__(self) -> None:
        if self.k <= 0:
            raise ValueError("scaling coefficient k must be positive")
        ax = tuple(float(v) for v in self.axis)
        if abs(math.sqrt(sum(v * v for v in ax)) - 1.0) > 1e-12:
            raise ValueError("axis must be a unit vector")
        object.__setattr__(self, "axis", ax)
        object.__setattr__(self, "center", tuple(float(v) for v in self.center))


def apply_similarity3d(op: Similarity3D, p: Sequence[float]) -> np.ndarray:
    v = np.asarray(p, dtype=float) - np.asarray(op.center)
    axis = np.asarray(op.axis)
    c, s = math.cos(op.phi), math.sin(op.phi)
    v = v * c + np.cross(axis, v) * s + axis * np.dot(axis, v) * (1.0 - c)
    if op.reflect:
        v = v - 2.0 * np.dot(axis, v) * axis
    return np.asarray(op.center) + op.k * v


def compose_similarity3d(op1: Similarity3D, op2: Similarity3D) -> Similarity3D:
    """Composition for operations sharing center and axis: coefficients
    multiply, angles add, reflections cancel in pairs (the mirror plane is
    normal to the rotation axis, so the two commute)."""
    if not np.allclose(op1.center, op2.center, atol=1e-12):
        raise ValueError("special points differ")
    if not np.allclose(op1.axis, op2.axis, atol=1e-12):
        raise ValueError("axes differ")
    return Similarity3D(
        k=op1.k * op2.k,
        axis=op1.axis,
        phi=_wrap_angle(op1.phi + op2.phi),
        reflect=op1.reflect != op2.reflect,
        center=op1.center,
    )


# --- groups -------------------------------------------------------------------


@dataclass(frozen=True)
class SimilarityGroup:
    """Finitely many generators about one shared special point, modelled on
    an annulus r_min <= |z - O| <= r_max (the finite window that stands in
    for the full orbit)."""

    generators: tuple[Similarity2D, ...]
    symbol: str = ""
    annulus: tuple[float, float] = (0.1, 10.0)

    def __post_init__(self) -> None:
        gens = tuple(self.generators)
        if not gens:
            raise ValueError("at least one generator required")
        center = gens[0].center
        if any(g.center != center for g in gens):
            raise ValueError("special points differ")
        r_min, r_max = self.annulus
        if not (0 < r_min < r_max):
            raise ValueError("annulus must satisfy 0 < r_min < r_max")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "annulus", (float(r_min), float(r_max)))

    @property
    def center(self) -> complex:
        return self.generators[0].center


def orbit(
    group: SimilarityGroup,
    seed: Sequence[complex],
    budget: int = 1_000_000,
    tolerance: float = 1e-9,
) -> np.ndarray:
    """Breadth-first closure of the seed under the generators and their
    inverses, keeping points inside the annulus, deduplicated at
    ``tolerance``.  Exceeding ``budget`` distinct points raises: the orbit
    is not discrete in the annulus.
    """
    O = group.center
    r_min, r_max = group.annulus
    ops = []
    for g in group.generators:
        ops.append(g)
        ops.append(inverse_similarity2d(g))

    cell = max(tolerance, 1e-12)
    seen: dict[tuple[int, int], complex] = {}
    out: list[complex] = []
    queue: deque[complex] = deque()

    def admit(z: complex) -> None:
        r = abs(z - O)
        if r < r_min - tolerance or r > r_max + tolerance:
            return
        kx = round(z.real / cell)
        ky = round(z.imag / cell)
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                prev = seen.get((kx + dx, ky + dy))
                if prev is not None and abs(prev - z) <= tolerance:
                    return
        if len(out) >= budget:
            raise RuntimeError("orbit not discrete in annulus")
        seen[(kx, ky)] = z
        out.append(z)
        queue.append(z)

    for z in seed:
        admit(complex(z))
    while queue:
        z = queue.popleft()
        for op in ops:
            admit(apply_similarity2d(op, z))

    pts = np.array(out, dtype=complex)
    if len(pts) == 0:
        return pts
    rel = pts - O
    q = max(tolerance, 1e-12)
    order = np.lexsort(
        (np.round(np.angle(rel) / (q * 1e-3)), np.round(np.abs(rel) / q))
    )
    return pts[order]


# --- group symbols ------------------------------------------------------------


class SymbolParseError(ValueError):
    """Malformed group symbol; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


_DEFAULT_COEFFS = {
    5: MetallicMean.TAU,
    10: MetallicMean.TAU,
    8: MetallicMean.RHO,
    12: MetallicMean.ETA,
}

_ANGLE_RE = re.compile(
    r"^(?P<sign>[+-]?)(?:(?P<num>\d+(?:\.\d+)?)?(?P<pi>pi)(?:/(?P<den>\d+))?"
    r"|(?P<plain>\d+(?:\.\d+)?))$"
)


def _parse_angle(text: str, position: int) -> float:
    s = (
        text.replace("−", "-")
        .replace("π", "pi")
        .replace(" ", "")
        .replace("*", "")
    )
    m = _ANGLE_RE.match(s)
    if m is None:
        raise SymbolParseError(f"bad angle expression {text!r}", position)
    sign = -1.0 if m.group("sign") == "-" else 1.0
    if m.group("pi"):
        num = float(m.group("num") or 1.0)
        den = float(m.group("den") or 1.0)
        return sign * num * math.pi / den
    return sign * float(m.group("plain"))


def default_coefficient(n: int) -> float:
    """Scaling coefficient assigned to a symmetry order: the golden mean
    for 5 and 10, silver for 8, 1+sqrt(3) for 12, and 2 otherwise."""
    mean = _DEFAULT_COEFFS.get(n)
    return 2.0 if mean is None else mean.value()


def parse_symbol(
    text: str,
    center: complex = 0j,
    annulus: tuple[float, float] | None = None,
    coefficient: float | None = None,
) -> SimilarityGroup:
    """Build a group from a symbol like "8K", "10L(phi=-pi/5)", "12mM".

    Grammar: n ["m"] ("K" | "L(phi=<expr>)" | "M").  The leading n adds the
    rotation by 2*pi/n; "m" adds the mirror through the real axis; the
    final letter adds the scaling operation with the order's default
    coefficient (overridable).  Unicode phi/pi/minus are accepted.
    """
    s = text.strip().replace("φ", "phi")
    i = 0
    start = i
    while i < len(s) and s[i].isdigit():
        i += 1
    if i == start:
        raise SymbolParseError("expected symmetry order", i)
    n = int(s[start:i])
    if n < 1:
        raise SymbolParseError("order must be at least 1", start)
    mirror = False
    if i < len(s) and s[i] == "m":
        mirror = True
        i += 1
    if i >= len(s) or s[i] not in "KLM":
        raise SymbolParseError("expected operation letter K, L or M", i)
    letter = s[i]
    i += 1
    angle = 0.0
    if letter == "L":
        if i >= len(s) or s[i] != "(":
            raise SymbolParseError("L requires an angle, e.g. L(phi=pi/5)", i)
        close = s.find(")", i)
        if close < 0:
            raise SymbolParseError("missing closing parenthesis", len(s))
        inner = s[i + 1 : close]
        if inner.startswith("phi="):
            inner = inner[4:]
        angle = _parse_angle(inner, i + 1)
        i = close + 1
    if i != len(s):
        raise SymbolParseError(f"unexpected trailing text {s[i:]!r}", i)

    k = coefficient if coefficient is not None else default_coefficient(n)
    gens = [Similarity2D.rotation(2.0 * math.pi / n, center)]
    if mirror:
        gens.append(Similarity2D.reflection(center=center))
    if letter == "K":
        gens.append(Similarity2D.homothety(k, center))
    elif letter == "L":
        gens.append(Similarity2D.spiral(k, angle, center))
    else:
        gens.append(Similarity2D.reflection(k=k, center=center))
    if annulus is None:
        annulus = (k**-3, k**3)
    return SimilarityGroup(tuple(gens), symbol=text.strip(), annulus=annulus)


# --- fixed point of the special point -----------------------------------------


def random_words(
    n_generators: int, count: int, max_length: int, seed: int = 0
) -> list[list[int]]:
    """Random group words as signed 1-based generator indices (negative
    means the inverse)."""
    rng = np.random.default_rng(seed)
    words = []
    for _ in range(count):
        length = int(rng.integers(1, max_length + 1))
        idx = rng.integers(1, n_generators + 1, size=length)
        sign = rng.choice([-1, 1], size=length)
        words.append([int(i * s) for i, s in zip(idx, sign)])
    return words


def fixed_point_check(
    group: SimilarityGroup, words: Sequence[Sequence[int]]
) -> float:
    """Maximum displacement |word(O) - O| over the given words; the shared
    special point is fixed by every word, so this should vanish."""
    O = group.center
    worst = 0.0
    for word in words:
        z = O
        for tok in word:
            if tok == 0:
                raise ValueError("word tokens are signed 1-based indices")
            g = group.generators[abs(tok) - 1]
            if tok < 0:
                g = inverse_similarity2d(g)
            z = apply_similarity2d(g, z)
        worst = max(worst, abs(z - O))
    return worst
