"""Exact arithmetic for metallic means and the Moebius-map algebra behind
circle inversion.

Quadratic integers are kept in integer coordinates so power tables and
recurrence sequences come out exact; Moebius maps carry an anticonformal
flag so inversions compose by plain matrix algebra with conjugation
bookkeeping.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

#: Explicit point at infinity of the one-point compactified plane.
INFINITY: complex = complex(math.inf, 0.0)


def is_infinity(z: complex) -> bool:
    """True for the explicit infinity value (either component infinite)."""
    return cmath.isinf(z)


# --- quadratic integer rings -------------------------------------------------

# For each supported discriminant d the ring basis is {omega, 1} where
# omega^2 = P*omega + Q.  d=2 and d=3 use omega = sqrt(d); d=5 uses the
# golden ratio itself (omega = (1+sqrt 5)/2) so golden powers stay integral.
_OMEGA_RULE: dict[int, tuple[int, int]] = {2: (0, 2), 3: (0, 3), 5: (1, 1)}
_OMEGA_SYMBOL = {2: "√2", 3: "√3", 5: "τ"}


def _omega_value(d: int) -> float:
    if d == 5:
        return (1.0 + math.sqrt(5.0)) / 2.0
    return math.sqrt(d)


@dataclass(frozen=True)
class QuadraticInteger:
    """Element a*omega + b of a real quadratic ring (omega depends on d).

    ``a`` multiplies the irrational basis element, ``b`` is the rational
    part, and ``d`` in {2, 3, 5} selects the ring.
    """

    a: int
    b: int
    d: int

    def __post_init__(self) -> None:
        if self.d not in _OMEGA_RULE:
            raise ValueError(f"unsupported ring discriminant {self.d}")
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise TypeError("coefficients must be integers")

    # -- ring operations --

    def _check_ring(self, other: "QuadraticInteger") -> None:
        if self.d != other.d:
            raise ValueError(
                f"mismatched rings: d={self.d} and d={other.d}"
            )

    def __add__(self, other):
        other = self._coerce(other)
        self._check_ring(other)
        return QuadraticInteger(self.a + other.a, self.b + other.b, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        self._check_ring(other)
        return QuadraticInteger(self.a - other.a, self.b - other.b, self.d)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return QuadraticInteger(-self.a, -self.b, self.d)

    def __mul__(self, other):
        other = self._coerce(other)
        self._check_ring(other)
        p, q = _OMEGA_RULE[self.d]
        aa = self.a * other.a
        return QuadraticInteger(
            aa * p + self.a * other.b + other.a * self.b,
            aa * q + self.b * other.b,
            self.d,
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            raise ValueError("exponent must be an integer")
        base = self
        e = exponent
        if e < 0:
            base = self.inverse()
            e = -e
        result = QuadraticInteger(0, 1, self.d)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def _coerce(self, other):
        if isinstance(other, QuadraticInteger):
            return other
        if isinstance(other, int):
            return QuadraticInteger(0, other, self.d)
        return NotImplemented

    # -- structure --

    def conjugate(self) -> "QuadraticInteger":
        """Image under the nontrivial ring automorphism."""
        if self.d == 5:
            # tau-bar = 1 - tau
            return QuadraticInteger(-self.a, self.a + self.b, self.d)
        return QuadraticInteger(-self.a, self.b, self.d)

    def norm(self) -> int:
        """Product with the conjugate (a rational integer)."""
        if self.d == 5:
            return self.b * self.b + self.a * self.b - self.a * self.a
        return self.b * self.b - self.a * self.a * self.d

    def is_unit(self) -> bool:
        return abs(self.norm()) == 1

    def inverse(self) -> "QuadraticInteger":
        n = self.norm()
        if abs(n) != 1:
            raise ValueError(f"{self} is not a unit (norm {n})")
        conj = self.conjugate()
        return conj if n == 1 else -conj

    def embed(self) -> float:
        """Numeric value b + a*omega."""
        return self.b + self.a * _omega_value(self.d)

    def __str__(self) -> str:
        sym = _OMEGA_SYMBOL[self.d]
        if self.a == 0:
            return str(self.b)
        head = {1: sym, -1: f"-{sym}"}.get(self.a, f"{self.a}{sym}")
        if self.b == 0:
            return head
        return f"{head}{self.b:+d}"


def quad_mul(x: QuadraticInteger, y: QuadraticInteger) -> QuadraticInteger:
    """Exact ring product; rejects operands from different rings."""
    return x * y


class MetallicMean(Enum):
    """Pisot roots of x^2 = p*x + q: silver (rho), golden (tau), bronze-type
    eta = 1+sqrt(3)."""

    RHO = ("rho", 2, 1, 2)
    TAU = ("tau", 1, 1, 5)
    ETA = ("eta", 2, 2, 3)

    def __init__(self, label: str, p: int, q: int, d: int):
        self.label = label
        self.p = p
        self.q = q
        self.d = d

    @property
    def minimal_poly(self) -> tuple[int, int]:
        """(p, q) of the defining recurrence x^2 = p*x + q."""
        return (self.p, self.q)

    def as_quadratic_integer(self) -> QuadraticInteger:
        if self is MetallicMean.TAU:
            return QuadraticInteger(1, 0, 5)
        return QuadraticInteger(1, 1, self.d)

    def value(self) -> float:
        return self.as_quadratic_integer().embed()


def metallic_power_pair(mean: MetallicMean, n: int) -> tuple[int, int]:
    """Coefficients (c1, c0) with mean**n = c1*mean + c0, exact."""
    p, q = mean.minimal_poly
    a, b = 0, 1  # mean^0
    if n >= 0:
        for _ in range(n):
            a, b = p * a + b, q * a
    else:
        if q != 1:
            raise ValueError(
                f"{mean.label} is not a unit; negative powers leave the ring"
            )
        for _ in range(-n):
            # invert one recurrence step: previous (a, b) from (a', b')
            a, b = b, a - p * b
    return a, b


def metallic_power(mean: MetallicMean, n: int) -> QuadraticInteger:
    """mean**n expanded exactly over the basis {mean, 1}.

    Negative exponents are valid for the unit means (rho, tau); eta has
    norm -2 and raises.
    """
    a, b = metallic_power_pair(mean, n)
    return a * mean.as_quadratic_integer() + b


def recurrence_sequence(mean: MetallicMean, length: int) -> list[int]:
    """First ``length`` terms of s[k+1] = p*s[k] + q*s[k-1], s0=0, s1=1.

    Fibonacci for tau, Pell for rho, and 0,1,2,6,16,44,... for eta.
    """
    if length < 0:
        raise ValueError("length must be non-negative")
    p, q = mean.minimal_poly
    seq: list[int] = []
    a, b = 0, 1
    for _ in range(length):
        seq.append(a)
        a, b = b, p * b + q * a
    return seq


# --- Moebius maps -------------------------------------------------------------


@dataclass(frozen=True)
class MobiusMap:
    """w = (a*u + b)/(c*u + d) with u = conj(z) when anticonformal, else z."""

    a: complex
    b: complex
    c: complex
    d: complex
    anticonformal: bool = False

    def __post_init__(self) -> None:
        for name in "abcd":
            object.__setattr__(self, name, complex(getattr(self, name)))
        if self.det == 0:
            raise ValueError("degenerate map: ad - bc = 0")

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    @classmethod
    def identity(cls) -> "MobiusMap":
        return cls(1, 0, 0, 1)

    @classmethod
    def reciprocal(cls) -> "MobiusMap":
        """The conformal w = 1/z."""
        return cls(0, 1, 1, 0)

    @classmethod
    def unit_circle_inversion(cls) -> "MobiusMap":
        """The anticonformal w = 1/conj(z)."""
        return cls(0, 1, 1, 0, anticonformal=True)

    def pole(self) -> complex:
        """The point sent to infinity (INFINITY itself when c = 0)."""
        if self.c == 0:
            return INFINITY
        p = -self.d / self.c
        return p.conjugate() if self.anticonformal else p


def mobius_apply(m: MobiusMap, z: complex) -> complex:
    """Evaluate m at z on the one-point compactification."""
    if is_infinity(z):
        return m.a / m.c if m.c != 0 else INFINITY
    u = z.conjugate() if m.anticonformal else complex(z)
    denom = m.c * u + m.d
    if denom == 0:
        return INFINITY
    return (m.a * u + m.b) / denom


def mobius_compose(m1: MobiusMap, m2: MobiusMap) -> MobiusMap:
    """The map z -> m1(m2(z)).

    Matrix product with conjugation bookkeeping: when m1 is anticonformal
    its conjugation passes through m2's matrix entrywise, and the
    anticonformal flags combine by XOR.
    """
    if m1.anticonformal:
        a2, b2, c2, d2 = (w.conjugate() for w in (m2.a, m2.b, m2.c, m2.d))
    else:
        a2, b2, c2, d2 = m2.a, m2.b, m2.c, m2.d
    return MobiusMap(
        m1.a * a2 + m1.b * c2,
        m1.a * b2 + m1.b * d2,
        m1.c * a2 + m1.d * c2,
        m1.c * b2 + m1.d * d2,
        anticonformal=m1.anticonformal != m2.anticonformal,
    )


def mobius_decompose(m: MobiusMap) -> list[MobiusMap]:
    """Split a conformal map with c != 0 into translate, reciprocal,
    scale, translate:

        w1 = z + d/c,  w2 = 1/z,  w3 = -((ad-bc)/c^2) * z,  w4 = z + a/c

    applied in that order recompose to m.
    """
    if m.anticonformal:
        raise ValueError("decomposition applies to conformal maps only")
    if m.c == 0:
        raise ValueError("affine map, no inversion factor")
    return [
        MobiusMap(1, m.d / m.c, 0, 1),
        MobiusMap.reciprocal(),
        MobiusMap(-m.det / (m.c * m.c), 0, 0, 1),
        MobiusMap(1, m.a / m.c, 0, 1),
    ]


# --- circles ------------------------------------------------------------------


@dataclass(frozen=True)
class CircleSpec:
    """Circle A*(x^2+y^2) + 2*B*x + C = 0 centered on the real axis.

    A > 0 needs B^2 - A*C > 0 (real radius); A = 0 is the degenerate
    vertical line 2*B*x + C = 0 and needs B != 0.
    """

    A: float
    B: float
    C: float

    def __post_init__(self) -> None:
        if self.A < 0:
            raise ValueError("A must be non-negative")
        if self.A == 0:
            if self.B == 0:
                raise ValueError("degenerate circle: A = 0 and B = 0")
        elif self.B * self.B - self.A * self.C <= 0:
            raise ValueError("B^2 - A*C must be positive for a real circle")

    @property
    def is_line(self) -> bool:
        return self.A == 0

    @property
    def center(self) -> complex:
        if self.is_line:
            raise ValueError("a line has no center")
        return complex(-self.B / self.A, 0.0)

    @property
    def radius(self) -> float:
        if self.is_line:
            raise ValueError("a line has no radius")
        return math.sqrt(self.B * self.B - self.A * self.C) / self.A

    @property
    def line_x(self) -> float:
        """x-coordinate of the vertical line (A = 0 case)."""
        if not self.is_line:
            raise ValueError("not a line")
        return -self.C / (2.0 * self.B)


def circle_inversion(spec: CircleSpec) -> MobiusMap:
    """Anticonformal inversion w = -(B*conj(z) + C)/(A*conj(z) + B).

    For A = 0 this degenerates to the reflection w = -conj(z) + C/(-B)
    across the line's vertical axis.
    """
    return MobiusMap(-spec.B, -spec.C, spec.A, spec.B, anticonformal=True)


# --- integer generator matrices ----------------------------------------------


@dataclass(frozen=True)
class GeneratorMatrix:
    """2x2 integer matrix with determinant +/-1."""

    entries: tuple[tuple[int, int], tuple[int, int]]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError("expected a 2x2 matrix")
        object.__setattr__(self, "entries", rows)
        if self.det not in (-1, 1):
            raise ValueError(f"determinant must be +/-1, got {self.det}")

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.entries
        return a * d - b * c

    def __matmul__(self, other: "GeneratorMatrix") -> "GeneratorMatrix":
        (a, b), (c, d) = self.entries
        (e, f), (g, h) = other.entries
        return GeneratorMatrix(
            ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))
        )

    def is_identity_up_to_sign(self) -> bool:
        return self.entries in (((1, 0), (0, 1)), ((-1, 0), (0, -1)))


@dataclass(frozen=True)
class RelationReport:
    word: str
    matrix: tuple[tuple[int, int], tuple[int, int]]
    holds: bool
    sign: int | None  # +1 / -1 when the word equals sign * identity


def _parse_word(word: str, n_gens: int) -> list[int]:
    """Token list of 0-based generator indices from e.g. "(R1R2)^3"."""
    s = word.replace(" ", "")
    pos = 0

    def parse_seq(stop_at_paren: bool) -> list[int]:
        nonlocal pos
        out: list[int] = []
        while pos < len(s):
            ch = s[pos]
            if ch == ")":
                if not stop_at_paren:
                    raise ValueError(f"unmatched ')' at position {pos}")
                return out
            if ch == "(":
                pos += 1
                inner = parse_seq(True)
                if pos >= len(s) or s[pos] != ")":
                    raise ValueError(f"missing ')' at position {pos}")
                pos += 1
                out.extend(inner * _parse_power())
            elif ch in "Rr":
                pos += 1
                start = pos
                while pos < len(s) and s[pos].isdigit():
                    pos += 1
                if start == pos:
                    raise ValueError(f"expected generator index at position {pos}")
                idx = int(s[start:pos]) - 1
                if not 0 <= idx < n_gens:
                    raise ValueError(f"generator R{idx + 1} out of range")
                out.extend([idx] * _parse_power())
            else:
                raise ValueError(f"unexpected character {ch!r} at position {pos}")
        return out

    def _parse_power() -> int:
        nonlocal pos
        if pos < len(s) and s[pos] == "^":
            pos += 1
            start = pos
            while pos < len(s) and s[pos].isdigit():
                pos += 1
            if start == pos:
                raise ValueError(f"expected exponent at position {pos}")
            return int(s[start:pos])
        return 1

    seq = parse_seq(False)
    if not seq:
        raise ValueError("empty word")
    return seq


def check_generator_relations(
    generators: Sequence[GeneratorMatrix],
    relations: Iterable[str | Sequence[int]],
) -> list[RelationReport]:
    """Evaluate relation words over the generators and report whether each
    product equals +/-identity (projective equality).

    Words are either strings like "R1R2", "(R1R2)^3" (1-based indices)
    or sequences of 0-based indices.
    """
    reports = []
    for rel in relations:
        if isinstance(rel, str):
            word, indices = rel, _parse_word(rel, len(generators))
        else:
            indices = list(rel)
            word = "".join(f"R{i + 1}" for i in indices)
            if not indices:
                raise ValueError("empty word")
        m = generators[indices[0]]
        for i in indices[1:]:
            m = m @ generators[i]
        holds = m.is_identity_up_to_sign()
        sign = m.entries[0][0] if holds else None
        reports.append(RelationReport(word, m.entries, holds, sign))
    return reports


def euler_phi(n: int) -> int:
    """Euler totient by trial factorization."""
    if n < 1:
        raise ValueError("n must be positive")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1 if p == 2 else 2
    if m > 1:
        result -= result // m
    return result
