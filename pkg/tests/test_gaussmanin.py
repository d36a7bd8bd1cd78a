"""Exact symbolic identities over Q(t0..t6) plus their negative controls."""

import pytest

from mirrorquintic.errors import IdentityFails
from mirrorquintic.fixtures import (
    NVARS,
    SPOT_POINTS,
    de_rham_intersection,
    flow_components,
    gauss_manin_dt0,
    gauss_manin_dt4,
    normal_form_b,
    normalizing_one_form,
)
from mirrorquintic.gaussmanin import (
    _triangular_connection,
    audit_weighted_degrees,
    derivation_images,
    symbolic_suite,
    verify_compatibility,
    verify_constant_matrices,
    verify_hat_basis,
    verify_ra_annihilation,
    verify_triangular_basis,
    verify_yukawa_closed_form,
)
from mirrorquintic.linalg import Matrix
from mirrorquintic.multipoly import MultiRat, poly
from mirrorquintic.rational import rat


def test_compatibility_holds_with_recorded_convention():
    out = verify_compatibility()
    assert out.passed and out.convention == "right-transpose"


def test_compatibility_negative_control():
    a0, a4 = gauss_manin_dt0(), gauss_manin_dt4()
    rows = [list(r) for r in a4.rows]
    rows[3][3] = rows[3][3] + MultiRat.constant(1, NVARS)
    with pytest.raises(IdentityFails):
        verify_compatibility(connection=(a0, Matrix(rows)))


def test_intersection_entry_matches_displayed_value():
    gram = de_rham_intersection()
    assert gram[0, 3] == MultiRat(poly("1", 7), poly("625*t4 - 625*t0^5", 7))


def test_ra_annihilation():
    assert verify_ra_annihilation().passed


def test_ra_annihilation_negative_control():
    crippled = list(flow_components())
    crippled[4] = crippled[4] * 0
    with pytest.raises(IdentityFails):
        verify_ra_annihilation(flow=tuple(crippled))


def test_normalizing_form_pairs_to_one_with_flow():
    vec = [MultiRat(p) for p in flow_components()]
    assert normalizing_one_form().pair(vec) == MultiRat.constant(1, NVARS)


def test_triangular_basis_normal_form():
    assert verify_triangular_basis().passed


def test_contracted_entries_are_the_b_polynomials():
    _, contracted, _ = _triangular_connection()
    b2, b3, b4 = normal_form_b()
    assert contracted[2, 1] == MultiRat(b2)
    assert contracted[2, 2] == MultiRat(b3)
    assert contracted[2, 3] == MultiRat(b4)
    for j in range(4):
        assert contracted[3, j] == MultiRat.constant(0, NVARS)


def test_tilde_intersection_is_unimodular_in_the_corner():
    # <w~_1, w~_4> = 1 and <w~_2, w~_3> = (t4 - t0^5)^2 / 5^7
    _, _, gram = _triangular_connection()
    assert gram[0, 3] == MultiRat.constant(1, NVARS)
    assert gram[1, 2] == MultiRat(poly("t4^2 - 2*t0^5*t4 + t0^10", 7)) / rat(5 ** 7)


def test_hat_basis():
    assert verify_hat_basis().passed


def test_constant_matrices():
    out = verify_constant_matrices()
    assert out.passed and out.convention == "rows"


def test_yukawa_closed_form():
    assert verify_yukawa_closed_form().passed


def test_yukawa_closed_form_numeric_spot_oracle():
    """Independent numeric evaluation of both sides at the fixed points."""
    images = derivation_images()
    t0 = MultiRat.variable(0, NVARS)
    t4 = MultiRat.variable(4, NVARS)
    t5 = MultiRat.variable(5, NVARS)
    z = t4 / t0 ** 5
    dz = z.derive(images)
    lhs = -(dz ** 3) / (z ** 3 * (z - MultiRat.constant(1, NVARS)) * t0 ** 2 * 625)
    rhs = -((t4 - t0 ** 5) ** 2) / (t5 ** 3 * 625)
    for pt in SPOT_POINTS:
        assert lhs.evaluate(pt) == rhs.evaluate(pt)


def test_weighted_degree_audit():
    assert audit_weighted_degrees().passed


def test_flow_fixture_spot_values():
    """Three independent spot checks of the transcribed vector field."""
    f = flow_components()
    # num_0 at t0 = 1, t3 = 0, t4 = 0 is 6/5
    p = [rat(1)] + [rat(0)] * 6
    assert f[0].evaluate(p) == rat(6, 5)
    # num_4 = t4 (5 t0^4 + t3/625) at t0 = 2, t3 = 625, t4 = 3
    p = [rat(2), rat(0), rat(0), rat(625), rat(3), rat(0), rat(0)]
    assert f[4].evaluate(p) == rat(3) * (rat(80) + rat(1))
    # num_1 at the all-ones point: -125 + 1 + 125 + 1/3125
    p = [rat(1)] * 7
    assert f[1].evaluate(p) == rat(1) + rat(1, 3125)


def test_alternate_cycle_basis_is_a_basis():
    from mirrorquintic.fixtures import ALTERNATE_CYCLE_BASIS

    assert ALTERNATE_CYCLE_BASIS.det() != rat(0)


def test_symbolic_suite_all_pass():
    entries = symbolic_suite()
    assert len(entries) == 7
    assert all(e["passed"] for e in entries)
    conventions = {e["name"]: e["convention"] for e in entries}
    assert conventions["verify_compatibility"] == "right-transpose"
    assert conventions["verify_constant_matrices"] == "rows"
