import math

import numpy as np
import pytest

from quasisym.symmetry import (
    Similarity2D,
    Similarity3D,
    SimilarityGroup,
    SymbolParseError,
    apply_similarity2d,
    apply_similarity3d,
    compose_similarity2d,
    compose_similarity3d,
    default_coefficient,
    fixed_point_check,
    inverse_similarity2d,
    orbit,
    parse_symbol,
    random_words,
)

TAU = (1 + math.sqrt(5)) / 2


# --- planar similarity operations ------------------------------------------------


def test_homothety_doubles_displacement():
    K = Similarity2D(center=0j, k=2.0)
    assert abs(apply_similarity2d(K, 1 + 1j) - (2 + 2j)) < 1e-15
    assert K.kind == "K"


def test_every_operation_fixes_its_center():
    ops = [
        Similarity2D(center=1 + 2j, k=3.0),
        Similarity2D(center=1 + 2j, k=0.5, phi=1.1),
        Similarity2D(center=1 + 2j, k=2.0, reflect=True, axis_angle=0.6),
    ]
    for op in ops:
        assert abs(apply_similarity2d(op, 1 + 2j) - (1 + 2j)) < 1e-15


def test_spiral_applies_scale_and_turn():
    L = Similarity2D(center=0j, k=TAU, phi=-math.pi / 5)
    w = apply_similarity2d(L, 1 + 0j)
    assert abs(w - TAU * np.exp(-1j * math.pi / 5)) < 1e-15
    assert L.kind == "L"


def test_kind_classification():
    assert Similarity2D(center=0j, k=1.0).kind == "identity"
    assert Similarity2D(center=0j, k=2.0).kind == "K"
    assert Similarity2D(center=0j, k=1.0, phi=0.3).kind == "L"
    assert Similarity2D(center=0j, k=2.0, reflect=True).kind == "M"


def test_nonpositive_coefficient_rejected():
    with pytest.raises(ValueError):
        Similarity2D(center=0j, k=0.0)
    with pytest.raises(ValueError):
        Similarity2D(center=0j, k=-1.0)


def test_compose_spirals_multiplies_k_adds_phi():
    L1 = Similarity2D(center=0j, k=2.0, phi=math.pi / 2)
    L2 = Similarity2D(center=0j, k=3.0, phi=math.pi / 2)
    out = compose_similarity2d(L1, L2)
    assert abs(out.k - 6.0) < 1e-12
    assert abs(abs(out.phi) - math.pi) < 1e-12
    assert not out.reflect


def test_compose_reflection_with_itself_is_homothety():
    M = Similarity2D(center=0j, k=1.5, reflect=True, axis_angle=0.3)
    out = compose_similarity2d(M, M)
    assert out.kind == "K"
    assert abs(out.k - 2.25) < 1e-12
    assert abs(out.phi) < 1e-12


def test_compose_agrees_with_sequential_application():
    rng = np.random.default_rng(9)
    center = 0.5 - 0.25j
    for _ in range(50):
        op1 = _random_op(rng, center)
        op2 = _random_op(rng, center)
        both = compose_similarity2d(op1, op2)
        for _ in range(10):
            z = complex(*rng.normal(size=2))
            w_seq = apply_similarity2d(op1, apply_similarity2d(op2, z))
            w_one = apply_similarity2d(both, z)
            assert abs(w_seq - w_one) < 1e-12 * max(1.0, abs(w_seq))


def _random_op(rng, center):
    return Similarity2D(
        center=center,
        k=float(rng.uniform(0.5, 2.0)),
        phi=float(rng.uniform(-math.pi, math.pi)),
        reflect=bool(rng.integers(2)),
        axis_angle=float(rng.uniform(0, math.pi)),
    )


def test_compose_rejects_distinct_centers():
    a = Similarity2D(center=0j, k=2.0)
    b = Similarity2D(center=1j, k=2.0)
    with pytest.raises(ValueError, match="special points differ"):
        compose_similarity2d(a, b)


def test_inverse_round_trips_to_identity():
    rng = np.random.default_rng(10)
    for _ in range(30):
        op = _random_op(rng, 1 + 1j)
        ident = compose_similarity2d(op, inverse_similarity2d(op))
        assert abs(ident.k - 1.0) < 1e-12
        assert abs(ident.phi) < 1e-12
        assert not ident.reflect
        for _ in range(5):
            z = complex(*rng.normal(size=2))
            w = apply_similarity2d(
                inverse_similarity2d(op), apply_similarity2d(op, z)
            )
            assert abs(w - z) < 1e-12 * max(1.0, abs(z))


# --- 3D operations ----------------------------------------------------------------


def test_scaling_reflection_in_plane():
    M = Similarity3D(center=(0, 0, 0), axis=(0, 0, 1), k=2.0, phi=0.0, reflect=True)
    out = apply_similarity3d(M, (1, 1, 1))
    assert np.allclose(out, (2, 2, -2), atol=1e-15)


def test_double_scaling_reflection_is_squared_homothety():
    M = Similarity3D(center=(0, 0, 0), axis=(0, 0, 1), k=2.0, phi=0.0, reflect=True)
    MM = compose_similarity3d(M, M)
    assert not MM.reflect
    assert abs(MM.k - 4.0) < 1e-12
    out = apply_similarity3d(MM, (1, 1, 1))
    assert np.allclose(out, (4, 4, 4), atol=1e-12)


def test_double_spiral_reflection_equals_double_spiral():
    L_bar = Similarity3D(
        center=(0, 0, 0), axis=(0, 0, 1), k=1.3, phi=0.7, reflect=True
    )
    L = Similarity3D(center=(0, 0, 0), axis=(0, 0, 1), k=1.3, phi=0.7)
    left = compose_similarity3d(L_bar, L_bar)
    right = compose_similarity3d(L, L)
    assert abs(left.k - right.k) < 1e-12
    assert abs(left.phi - right.phi) < 1e-12
    assert left.reflect == right.reflect == False  # noqa: E712
    assert abs(left.k - 1.3**2) < 1e-12
    assert abs(left.phi - 1.4) < 1e-12
    rng = np.random.default_rng(12)
    for p in rng.normal(size=(100, 3)):
        a = apply_similarity3d(L_bar, apply_similarity3d(L_bar, p))
        b = apply_similarity3d(L, apply_similarity3d(L, p))
        assert np.linalg.norm(a - b) < 1e-12


def test_rotation_part_uses_rodrigues_formula():
    L = Similarity3D(
        center=(0, 0, 0), axis=(0, 1, 0), k=1.0, phi=math.pi / 2
    )
    out = apply_similarity3d(L, (1, 0, 0))
    assert np.allclose(out, (0, 0, -1), atol=1e-12)


def test_3d_center_offset_and_fixed_point():
    op = Similarity3D(center=(1, 2, 3), axis=(0, 0, 1), k=2.0, phi=1.0, reflect=True)
    assert np.allclose(apply_similarity3d(op, (1, 2, 3)), (1, 2, 3), atol=1e-15)


def test_3d_axis_must_be_unit():
    with pytest.raises(ValueError):
        Similarity3D(center=(0, 0, 0), axis=(0, 0, 2), k=1.0, phi=0.0)


def test_3d_compose_rejects_mismatched_frames():
    a = Similarity3D(center=(0, 0, 0), axis=(0, 0, 1), k=2.0, phi=0.0)
    b = Similarity3D(center=(0, 0, 1), axis=(0, 0, 1), k=2.0, phi=0.0)
    with pytest.raises(ValueError):
        compose_similarity3d(a, b)
    c = Similarity3D(center=(0, 0, 0), axis=(0, 1, 0), k=2.0, phi=0.0)
    with pytest.raises(ValueError):
        compose_similarity3d(a, c)


# --- orbits -------------------------------------------------------------------------


def test_single_spiral_orbit_is_geometric_ladder():
    g = SimilarityGroup(
        generators=(Similarity2D(center=0j, k=TAU, phi=math.pi / 5),),
        annulus=(TAU**-3 - 1e-9, TAU**3 + 1e-9),
    )
    pts = orbit(g, [1 + 0j])
    assert len(pts) == 7
    expected = sorted(
        (TAU**n * np.exp(1j * n * math.pi / 5) for n in range(-3, 4)), key=abs
    )
    got = sorted(pts, key=abs)
    assert max(abs(a - b) for a, b in zip(got, expected)) < 1e-9


def test_wheel_orbit_size_is_spokes_times_shells():
    g = parse_symbol("10L(phi=-pi/5)")
    pts = orbit(g, [1 + 0j])
    radii = sorted({round(abs(z), 6) for z in pts})
    assert len(pts) == 10 * len(radii)
    assert len(radii) >= 3


def test_empty_seed_gives_empty_orbit():
    g = parse_symbol("8K")
    assert len(orbit(g, [])) == 0


def test_orbit_outside_annulus_is_empty():
    g = parse_symbol("8K", annulus=(0.5, 2.0))
    assert len(orbit(g, [100 + 0j])) == 0


def test_non_discrete_orbit_exhausts_budget():
    g = SimilarityGroup(
        generators=(Similarity2D(center=0j, k=1.0, phi=1.0),),
        annulus=(0.5, 2.0),
    )
    with pytest.raises(RuntimeError, match="not discrete"):
        orbit(g, [1 + 0j], budget=64)


def test_orbit_output_is_deterministic():
    g = parse_symbol("10L(phi=-pi/5)")
    a = orbit(g, [1 + 0j])
    b = orbit(g, [1 + 0j])
    assert np.array_equal(a, b)


def test_orbit_is_rotation_invariant_for_wheel():
    g = parse_symbol("10L(phi=-pi/5)")
    pts = orbit(g, [1 + 0j])
    rotated = pts * np.exp(2j * np.pi / 10)
    from quasisym.quasilattice import sets_match

    assert sets_match(pts, rotated, 1e-9)


# --- symbols -------------------------------------------------------------------------


def test_parse_plain_wheel_symbol():
    g = parse_symbol("10L(phi=-pi/5)")
    assert len(g.generators) == 2
    rot, spiral = g.generators
    assert abs(rot.k - 1.0) < 1e-15 and abs(rot.phi - 2 * math.pi / 10) < 1e-15
    assert abs(spiral.k - TAU) < 1e-12
    assert abs(spiral.phi + math.pi / 5) < 1e-15


def test_parse_mirrored_symbol_adds_reflection():
    g = parse_symbol("10mL(phi=pi/5)")
    mirrors = [op for op in g.generators if op.reflect]
    assert len(mirrors) == 1
    assert abs(mirrors[0].k - 1.0) < 1e-15
    assert len(g.generators) == 3


def test_parse_homothety_symbols():
    g8 = parse_symbol("8K")
    assert abs(g8.generators[-1].k - (1 + math.sqrt(2))) < 1e-12
    g1 = parse_symbol("1K")
    assert len(g1.generators) == 2  # trivial rotation + homothety
    g12 = parse_symbol("12K")
    assert abs(g12.generators[-1].k - (1 + math.sqrt(3))) < 1e-12


def test_parse_unicode_angle_forms():
    g1 = parse_symbol("10L(φ=−π/5)")
    g2 = parse_symbol("10L(phi=-pi/5)")
    assert abs(g1.generators[1].phi - g2.generators[1].phi) < 1e-15


def test_parse_angle_expressions():
    assert abs(parse_symbol("5L(phi=-2pi/5)").generators[1].phi + 2 * math.pi / 5) < 1e-15
    assert abs(parse_symbol("4L(phi=0.25)").generators[1].phi - 0.25) < 1e-15
    assert abs(parse_symbol("4L(phi=pi)").generators[1].phi - math.pi) < 1e-15


def test_parse_reports_error_position():
    cases = {
        "L(phi=pi/5)": 0,
        "10X": 2,
        "10L": 3,
        "10L(phi=pi/5)x": 13,
    }
    for text, pos in cases.items():
        with pytest.raises(SymbolParseError) as err:
            parse_symbol(text)
        assert err.value.position == pos


def test_default_coefficients_by_order():
    assert abs(default_coefficient(5) - TAU) < 1e-12
    assert abs(default_coefficient(10) - TAU) < 1e-12
    assert abs(default_coefficient(8) - (1 + math.sqrt(2))) < 1e-12
    assert abs(default_coefficient(12) - (1 + math.sqrt(3))) < 1e-12
    assert default_coefficient(7) == 2.0


def test_symbol_annulus_and_coefficient_overrides():
    g = parse_symbol("8K", annulus=(0.25, 8.0), coefficient=3.0)
    assert g.annulus == (0.25, 8.0)
    assert abs(g.generators[-1].k - 3.0) < 1e-15


# --- fixed point of the special center ----------------------------------------------


@pytest.mark.parametrize(
    "symbol", ["10L(phi=-pi/5)", "5L(phi=-2pi/5)", "10mL(phi=pi/5)", "8K"]
)
def test_words_over_generators_fix_the_center(symbol):
    g = parse_symbol(symbol, center=0.75 - 0.5j)
    words = random_words(len(g.generators), count=100, max_length=8, seed=21)
    assert fixed_point_check(g, words) < 1e-12


def test_random_words_are_reproducible_and_bounded():
    w1 = random_words(3, count=50, max_length=8, seed=1)
    w2 = random_words(3, count=50, max_length=8, seed=1)
    assert w1 == w2
    assert all(1 <= len(w) <= 8 for w in w1)
    assert all(1 <= abs(t) <= 3 for w in w1 for t in w)


def test_fixed_point_check_rejects_zero_token():
    g = parse_symbol("8K")
    with pytest.raises(ValueError):
        fixed_point_check(g, [(0,)])
