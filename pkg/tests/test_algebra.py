import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasisym.algebra import (
    INFINITY,
    CircleSpec,
    GeneratorMatrix,
    MetallicMean,
    MobiusMap,
    QuadraticInteger,
    check_generator_relations,
    circle_inversion,
    euler_phi,
    is_infinity,
    metallic_power,
    metallic_power_pair,
    mobius_apply,
    mobius_compose,
    mobius_decompose,
    quad_mul,
    recurrence_sequence,
)

TAU, RHO, ETA = MetallicMean.TAU, MetallicMean.RHO, MetallicMean.ETA


# --- metallic means and power tables -------------------------------------------


POWER_TABLE = {
    TAU: [(1, 0), (1, 1), (2, 1), (3, 2), (5, 3), (8, 5)],
    RHO: [(1, 0), (2, 1), (5, 2), (12, 5), (29, 12), (70, 29)],
    ETA: [(1, 0), (2, 2), (6, 4), (16, 12), (44, 32), (120, 88)],
}


@pytest.mark.parametrize("mean", [TAU, RHO, ETA])
def test_power_table_first_six(mean):
    for n, pair in enumerate(POWER_TABLE[mean], start=1):
        assert metallic_power_pair(mean, n) == pair


def test_power_specific_values():
    assert metallic_power_pair(TAU, 6) == (8, 5)
    assert metallic_power_pair(RHO, 3) == (5, 2)
    assert metallic_power_pair(ETA, 0) == (0, 1)
    assert metallic_power_pair(TAU, -1) == (1, -1)  # 1/tau = tau - 1


def test_metallic_power_returns_quadratic_integer():
    x = metallic_power(TAU, 6)
    assert isinstance(x, QuadraticInteger)
    assert (x.a, x.b) == (8, 5)
    assert abs(x.embed() - TAU.value() ** 6) < 1e-9


@pytest.mark.parametrize("mean", [TAU, RHO, ETA])
def test_power_recurrence_holds_to_30(mean):
    p, q = mean.p, mean.q
    for n in range(0, 29):
        a0, b0 = metallic_power_pair(mean, n)
        a1, b1 = metallic_power_pair(mean, n + 1)
        a2, b2 = metallic_power_pair(mean, n + 2)
        assert a2 == p * a1 + q * a0
        assert b2 == p * b1 + q * b0


@pytest.mark.parametrize("mean", [TAU, RHO, ETA])
def test_power_embedding_matches_float_power(mean):
    v = mean.value()
    for n in range(21):
        a, b = metallic_power_pair(mean, n)
        assert abs((a * v + b) - v**n) < 1e-9 * v**n


@pytest.mark.parametrize("mean", [TAU, RHO])
def test_unit_means_have_exact_inverse_powers(mean):
    for n in range(1, 12):
        pos = metallic_power(mean, n)
        neg = metallic_power(mean, -n)
        prod = pos * neg
        assert (prod.a, prod.b) == (0, 1)


def test_eta_negative_power_rejected():
    with pytest.raises(ValueError, match="not a unit"):
        metallic_power(ETA, -1)
    with pytest.raises(ValueError, match="not a unit"):
        metallic_power(ETA, -4)


def test_recurrence_sequences():
    assert recurrence_sequence(TAU, 11) == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    assert recurrence_sequence(RHO, 10) == [0, 1, 2, 5, 12, 29, 70, 169, 408, 985]
    assert recurrence_sequence(ETA, 10) == [0, 1, 2, 6, 16, 44, 120, 328, 896, 2448]
    assert recurrence_sequence(TAU, 0) == []
    assert recurrence_sequence(TAU, 1) == [0]


def test_minimal_polynomials():
    for mean in (TAU, RHO, ETA):
        v = mean.value()
        assert abs(v * v - (mean.p * v + mean.q)) < 1e-12


# --- quadratic integer ring ----------------------------------------------------


def test_quad_mul_examples():
    rho = QuadraticInteger(1, 1, 2)  # 1 + sqrt(2)
    sq = quad_mul(rho, rho)
    assert (sq.a, sq.b) == (2, 3)  # 3 + 2*sqrt(2)
    eta = QuadraticInteger(1, 1, 3)
    sq3 = quad_mul(eta, eta)
    assert (sq3.a, sq3.b) == (2, 4)  # 4 + 2*sqrt(3)
    one = QuadraticInteger(0, 1, 2)
    assert quad_mul(rho, one) == rho


def test_quad_mul_mismatched_rings_rejected():
    with pytest.raises(ValueError):
        quad_mul(QuadraticInteger(1, 0, 2), QuadraticInteger(1, 0, 3))


@given(
    st.integers(-50, 50), st.integers(-50, 50),
    st.integers(-50, 50), st.integers(-50, 50),
    st.integers(-50, 50), st.integers(-50, 50),
    st.sampled_from([2, 3, 5]),
)
@settings(max_examples=150, deadline=None)
def test_ring_axioms(a1, b1, a2, b2, a3, b3, d):
    x = QuadraticInteger(a1, b1, d)
    y = QuadraticInteger(a2, b2, d)
    z = QuadraticInteger(a3, b3, d)
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert x - x == QuadraticInteger(0, 0, d)


@given(
    st.integers(-30, 30), st.integers(-30, 30),
    st.integers(-30, 30), st.integers(-30, 30),
    st.sampled_from([2, 3, 5]),
)
@settings(max_examples=150, deadline=None)
def test_norm_is_multiplicative(a1, b1, a2, b2, d):
    x = QuadraticInteger(a1, b1, d)
    y = QuadraticInteger(a2, b2, d)
    assert (x * y).norm() == x.norm() * y.norm()


@given(st.integers(-30, 30), st.integers(-30, 30), st.sampled_from([2, 3, 5]))
@settings(max_examples=150, deadline=None)
def test_embedding_is_a_ring_morphism(a, b, d):
    x = QuadraticInteger(a, b, d)
    y = QuadraticInteger(b, a, d)
    scale = max(1.0, abs(x.embed() * y.embed()))
    assert abs((x * y).embed() - x.embed() * y.embed()) < 1e-9 * scale


def test_unit_inverse_round_trip():
    rho = QuadraticInteger(1, 1, 2)
    assert rho.is_unit()
    inv = rho.inverse()
    assert rho * inv == QuadraticInteger(0, 1, 2)
    tau = QuadraticInteger(1, 0, 5)
    assert tau * tau.inverse() == QuadraticInteger(0, 1, 5)


def test_non_unit_inverse_rejected():
    eta = QuadraticInteger(1, 1, 3)
    assert not eta.is_unit()
    with pytest.raises(ValueError, match="not a unit"):
        eta.inverse()


def test_conjugate_norm_identity():
    for a, b, d in [(3, -2, 2), (1, 4, 3), (2, 5, 5)]:
        x = QuadraticInteger(a, b, d)
        prod = x * x.conjugate()
        assert (prod.a, prod.b) == (0, x.norm())


def test_integer_power_operator():
    rho = QuadraticInteger(1, 1, 2)
    assert rho**6 == metallic_power(RHO, 6)
    assert rho**0 == QuadraticInteger(0, 1, 2)
    assert rho**-2 == metallic_power(RHO, -2)


# --- Mobius maps ----------------------------------------------------------------


def test_apply_identity_and_reciprocal():
    ident = MobiusMap.identity()
    assert mobius_apply(ident, 3 + 4j) == 3 + 4j
    rec = MobiusMap.reciprocal()
    assert abs(mobius_apply(rec, 2 + 0j) - 0.5) < 1e-15
    assert is_infinity(mobius_apply(rec, 0j))
    assert abs(mobius_apply(rec, INFINITY) - 0.0) < 1e-15


def test_apply_anticonformal_is_inverse_radius():
    inv = MobiusMap.unit_circle_inversion()
    assert inv.anticonformal
    for z in (2 + 0j, 1 + 1j, -0.3 + 0.7j):
        w = mobius_apply(inv, z)
        expect = z / (abs(z) ** 2)
        assert abs(w - expect) < 1e-15


def test_degenerate_map_rejected():
    with pytest.raises(ValueError):
        MobiusMap(1, 2, 2, 4)


def test_compose_with_identity_and_involutions():
    m = MobiusMap(1 + 1j, 2, 1, 3 - 1j)
    mi = mobius_compose(m, MobiusMap.identity())
    for z in (0j, 1 + 2j, -3j):
        assert abs(mobius_apply(mi, z) - mobius_apply(m, z)) < 1e-12
    # inversion twice = identity, conformal again
    inv = MobiusMap.unit_circle_inversion()
    double = mobius_compose(inv, inv)
    assert not double.anticonformal
    for z in (2 + 0j, 1 + 1j, -0.5 + 0.25j):
        assert abs(mobius_apply(double, z) - z) < 1e-12
    rec2 = mobius_compose(MobiusMap.reciprocal(), MobiusMap.reciprocal())
    for z in (2 + 0j, 1j, 0.5 - 0.5j):
        assert abs(mobius_apply(rec2, z) - z) < 1e-12


def test_compose_matches_sequential_application():
    rng = np.random.default_rng(5)
    for _ in range(50):
        m1 = _random_map(rng)
        m2 = _random_map(rng)
        both = mobius_compose(m1, m2)
        assert both.anticonformal == (m1.anticonformal ^ m2.anticonformal)
        for _ in range(10):
            z = complex(*rng.normal(size=2))
            w_seq = mobius_apply(m1, mobius_apply(m2, z))
            w_one = mobius_apply(both, z)
            if is_infinity(w_seq) or is_infinity(w_one):
                continue
            assert abs(w_seq - w_one) < 1e-9 * max(1.0, abs(w_seq))


def test_compose_is_projectively_associative():
    rng = np.random.default_rng(6)
    for _ in range(30):
        m1, m2, m3 = (_random_map(rng) for _ in range(3))
        left = mobius_compose(mobius_compose(m1, m2), m3)
        right = mobius_compose(m1, mobius_compose(m2, m3))
        assert left.anticonformal == right.anticonformal
        ratios = []
        for u, v in [(left.a, right.a), (left.b, right.b),
                     (left.c, right.c), (left.d, right.d)]:
            if abs(v) > 1e-9:
                ratios.append(u / v)
        assert ratios
        assert max(abs(r - ratios[0]) for r in ratios) < 1e-9


def _random_map(rng, anticonformal_allowed=True):
    while True:
        a, b, c, d = (complex(*rng.normal(size=2)) for _ in range(4))
        if abs(a * d - b * c) > 0.1:
            break
    flag = anticonformal_allowed and bool(rng.integers(2))
    return MobiusMap(a, b, c, d, anticonformal=flag)


def test_decompose_worked_examples():
    rec = MobiusMap.reciprocal()
    w = mobius_decompose(rec)
    assert len(w) == 4
    assert (w[0].a, w[0].b, w[0].c, w[0].d) == (1, 0, 0, 1)
    assert (w[1].a, w[1].b, w[1].c, w[1].d) == (0, 1, 1, 0)
    assert (w[2].a, w[2].b, w[2].c, w[2].d) == (1, 0, 0, 1)
    assert (w[3].a, w[3].b, w[3].c, w[3].d) == (1, 0, 0, 1)
    m = MobiusMap(1, 1, 1, 0)
    w = mobius_decompose(m)
    assert (w[0].a, w[0].b) == (1, 0)          # z + 0
    assert (w[1].a, w[1].b, w[1].c, w[1].d) == (0, 1, 1, 0)
    assert (w[2].a, w[2].b) == (1, 0)          # 1 * z
    assert (w[3].a, w[3].b) == (1, 1)          # z + 1


def test_decompose_recomposes_everywhere():
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(100):
        m = _random_map(rng, anticonformal_allowed=False)
        if abs(m.c) < 0.1:
            continue
        parts = mobius_decompose(m)
        pole = m.pole()
        for _ in range(20):
            z = complex(*rng.normal(size=2)) * 2
            if abs(z - pole) < 0.1:
                continue
            w = z
            for p in parts:
                w = mobius_apply(p, w)
            worst = max(worst, abs(w - mobius_apply(m, z)))
    assert worst < 1e-12


def test_decompose_rejects_affine_and_anticonformal():
    with pytest.raises(ValueError, match="affine"):
        mobius_decompose(MobiusMap(2, 1, 0, 1))
    with pytest.raises(ValueError):
        mobius_decompose(MobiusMap(0, 1, 1, 0, anticonformal=True))


# --- circle inversions ----------------------------------------------------------


def test_circle_spec_geometry():
    c = CircleSpec(A=1.0, B=0.0, C=-1.0)
    assert c.center == 0j and abs(c.radius - 1.0) < 1e-15
    c2 = CircleSpec(A=2.0, B=-2.0, C=0.0)
    assert abs(c2.center - 1.0) < 1e-15 and abs(c2.radius - 1.0) < 1e-15


def test_circle_spec_validation():
    with pytest.raises(ValueError):
        CircleSpec(A=-1.0, B=0.0, C=-1.0)
    with pytest.raises(ValueError):
        CircleSpec(A=1.0, B=0.0, C=1.0)   # imaginary radius
    with pytest.raises(ValueError):
        CircleSpec(A=0.0, B=0.0, C=1.0)   # degenerate


def test_unit_circle_inversion_map():
    m = circle_inversion(CircleSpec(A=1.0, B=0.0, C=-1.0))
    assert m.anticonformal
    assert (m.a, m.b, m.c, m.d) == (0, 1, 1, 0)
    assert abs(mobius_apply(m, 2 + 0j) - 0.5) < 1e-15
    for theta in (0.0, 0.7, 2.5):
        z = complex(math.cos(theta), math.sin(theta))
        assert abs(mobius_apply(m, z) - z) < 1e-15


def test_line_reflection_as_degenerate_circle():
    # A=0: 2Bx + C = 0 is the vertical line x = -C/(2B)
    spec = CircleSpec(A=0.0, B=-1.0, C=4.0)   # line x = 2
    m = circle_inversion(spec)
    assert m.anticonformal
    for z in (0j, 1 + 1j, 3 - 2j):
        w = mobius_apply(m, z)
        expect = complex(4 - z.real, z.imag)   # mirror across x = 2
        assert abs(w - expect) < 1e-12


def test_every_circle_inversion_is_involutive():
    rng = np.random.default_rng(8)
    for _ in range(20):
        A = float(rng.uniform(0.5, 2.0))
        B = float(rng.normal())
        C = float(-rng.uniform(0.5, 4.0))
        if B * B - A * C <= 0:
            continue
        m = circle_inversion(CircleSpec(A=A, B=B, C=C))
        for _ in range(10):
            z = complex(*rng.normal(size=2)) * 3
            w = mobius_apply(m, mobius_apply(m, z))
            if is_infinity(w):
                continue
            assert abs(w - z) < 1e-12 * max(1.0, abs(z))


def test_inversion_fixes_its_circle():
    spec = CircleSpec(A=1.0, B=-1.5, C=1.0)
    m = circle_inversion(spec)
    c, r = spec.center, spec.radius
    for theta in np.linspace(0, 2 * math.pi, 11):
        z = c + r * complex(math.cos(theta), math.sin(theta))
        assert abs(mobius_apply(m, z) - z) < 1e-12


# --- generator matrices ---------------------------------------------------------


R1 = GeneratorMatrix(((0, 1), (1, 0)))
R2 = GeneratorMatrix(((-1, 0), (1, 1)))
R3 = GeneratorMatrix(((-1, 0), (0, 1)))


def test_generator_involutions_hold():
    reports = check_generator_relations(
        [R1, R2, R3], ["R1R1", "R2R2", "R3R3", "(R1R3)^2"]
    )
    assert all(r.holds for r in reports)


def test_braid_relation_reported_as_computed():
    reports = check_generator_relations([R1, R2], ["(R1R2)^2", "(R1R2)^3"])
    sq, cube = reports
    assert not sq.holds                      # [[0,1],[-1,-1]] is not +/- identity
    assert sq.matrix == ((0, 1), (-1, -1))
    assert cube.holds and cube.sign == -1    # (R1R2)^3 = -identity


def test_relations_accept_index_words():
    reports = check_generator_relations([R1, R3], [(0, 0), (0, 1, 0, 1)])
    assert reports[0].holds
    assert reports[1].holds


def test_non_involutive_determinant_rejected():
    with pytest.raises(ValueError):
        GeneratorMatrix(((2, 0), (0, 1)))


def test_bad_word_rejected():
    with pytest.raises(ValueError):
        check_generator_relations([R1], ["R2R2"])


# --- Euler totient --------------------------------------------------------------


@pytest.mark.parametrize(
    "n,phi", [(1, 1), (2, 1), (14, 6), (16, 8), (18, 6), (97, 96), (360, 96)]
)
def test_euler_phi(n, phi):
    assert euler_phi(n) == phi


def test_euler_phi_rejects_nonpositive():
    with pytest.raises(ValueError):
        euler_phi(0)
