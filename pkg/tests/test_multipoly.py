"""Sparse polynomials, rational functions, exact matrices, and 1-forms."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mirrorquintic.errors import DivisionByZeroPolynomial, SingularMatrix
from mirrorquintic.fixtures import (
    CYCLE_INTERSECTION,
    NILPOTENT_SHIFT,
    NVARS,
    normal_form_b,
    triangular_transition,
    unipotent_frame,
)
from mirrorquintic.linalg import Matrix, OneForm
from mirrorquintic.multipoly import (
    MultiPoly,
    MultiRat,
    poly,
    rational_roots,
)
from mirrorquintic.rational import rat

# -- polynomial arithmetic ----------------------------------------------------


def test_parser_and_partial_derivative():
    p = poly("t0^5 - t4", 7)
    assert p.diff(0) == poly("5*t0^4", 7)
    assert p.diff(4) == MultiPoly.constant(-1, 7)
    assert p.diff(1).is_zero


def test_cross_multiplication_equality():
    w = poly("t4 - t0^5", 7)
    assert MultiRat(w, w) == MultiRat.constant(1, 7)
    assert MultiRat(w * 2, w * 2) == MultiRat(w, w)


def test_b4_expansion_term_map():
    # -(1/5^7)(t0^5 - t4)^2 expanded
    _, _, b4 = normal_form_b()
    expected = poly("t0^10", 7) * rat(-1, 78125) + poly("t0^5*t4", 7) * rat(
        2, 78125
    ) + poly("t4^2", 7) * rat(-1, 78125)
    assert b4 == expected


exps = st.tuples(*(st.integers(0, 3) for _ in range(3)))
coeffs = st.fractions(min_value=-20, max_value=20, max_denominator=6).map(
    lambda f: rat(f.numerator, f.denominator)
)


def _mk(terms):
    out = MultiPoly(3)
    for e, c in terms:
        out = out + MultiPoly(3, {e: c})
    return out


polys = st.lists(st.tuples(exps, coeffs), min_size=0, max_size=5).map(_mk)


@settings(max_examples=40)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=40)
@given(polys)
def test_mixed_partials_commute(p):
    assert p.diff(0).diff(1) == p.diff(1).diff(0)
    assert p.diff(1).diff(2) == p.diff(2).diff(1)


def test_zero_denominator_rejected():
    with pytest.raises(DivisionByZeroPolynomial):
        MultiRat(MultiPoly.one(3), MultiPoly.zero(3))
    with pytest.raises(DivisionByZeroPolynomial):
        MultiRat.constant(1, 3) / MultiRat.constant(0, 3)


def test_rational_function_arithmetic_and_evaluation():
    t0 = MultiRat.variable(0, 2)
    t1 = MultiRat.variable(1, 2)
    f = (t0 + t1) / (t0 - t1)
    g = f - 1  # = 2 t1 / (t0 - t1)
    assert g == (t1 * 2) / (t0 - t1)
    assert g.evaluate((rat(3), rat(1))) == rat(1)


def test_derive_with_custom_images():
    # D(t0) = t1, D(t1) = 1: then D(t0/t1) = t1/t1 - t0/t1^2
    t0 = MultiRat.variable(0, 2)
    t1 = MultiRat.variable(1, 2)
    images = (t1, MultiRat.constant(1, 2))
    got = (t0 / t1).derive(images)
    assert got == MultiRat.constant(1, 2) - t0 / (t1 * t1)


def test_weighted_homogeneity():
    p = poly("6/5*t0^5 + 1/3125*t0*t3 - 1/5*t4", 7)
    ok, deg = p.is_weighted_homogeneous((3, 6, 9, 12, 15, 11, 23))
    assert ok and deg == 15
    ok, _ = (p + poly("t1", 7)).is_weighted_homogeneous((3, 6, 9, 12, 15, 11, 23))
    assert not ok


def test_rational_roots():
    # (x)(x + 1/3125)(x - 2): roots 0, -1/3125, 2
    coeffs = [rat(0), rat(-2, 3125), rat(1, 3125) - 2, rat(1)]
    # expand: x (x^2 + (1/3125 - 2) x - 2/3125)
    assert rational_roots(coeffs) == sorted([rat(0), rat(-1, 3125), rat(2)])
    assert rational_roots([rat(1), rat(0), rat(1)]) == []  # x^2 + 1


# -- matrices -----------------------------------------------------------------


def test_cycle_intersection_inverse_contract():
    psi = CYCLE_INTERSECTION
    ident = Matrix.identity(4, rat(1), rat(0))
    assert psi.inverse() * psi == ident
    assert psi * psi.inverse() == ident


def test_unipotent_frame_shift_identity():
    z = unipotent_frame()
    z_dot = z.map(lambda e: e.diff(0))
    d = NILPOTENT_SHIFT.map(lambda v: MultiRat.constant(v, 1))
    assert z.inverse() * z_dot == d


def test_companion_determinant_structural():
    # det [[0,1,0,0],[0,0,1,0],[0,0,0,1],[a1,a2,a3,a4]] = -a1
    a = [MultiRat.variable(i, 4) for i in range(4)]
    zero, one = MultiRat.constant(0, 4), MultiRat.constant(1, 4)
    m = Matrix(
        [
            [zero, one, zero, zero],
            [zero, zero, one, zero],
            [zero, zero, zero, one],
            [a[0], a[1], a[2], a[3]],
        ]
    )
    assert m.det() == -a[0]


def test_inverse_is_an_involution_on_rational_matrices():
    b = triangular_transition()
    binv = b.inverse()
    assert binv.inverse() == b
    ident = Matrix.identity(4, MultiRat.constant(1, NVARS), MultiRat.constant(0, NVARS))
    assert b * binv == ident


def test_singular_matrix_raises():
    one = rat(1)
    m = Matrix([[one, one], [one, one]])
    with pytest.raises(SingularMatrix):
        m.inverse()


def test_matrix_dimension_checks():
    with pytest.raises(ValueError):
        Matrix([[rat(1)], [rat(1), rat(2)]])
    with pytest.raises(ValueError):
        Matrix([[rat(1)]]) * Matrix([[rat(1), rat(2)], [rat(3), rat(4)]])


# -- one-forms ----------------------------------------------------------------


def test_one_form_pairing_is_componentwise():
    comps = [MultiRat.variable(i, NVARS) for i in range(5)]
    form = OneForm(comps)
    vec = [MultiRat.constant(i + 1, NVARS) for i in range(5)]
    expected = sum(
        (comps[i] * (i + 1) for i in range(1, 5)), comps[0]
    )
    assert form.pair(vec) == expected


def test_one_form_needs_five_components():
    with pytest.raises(ValueError):
        OneForm([MultiRat.constant(1, NVARS)] * 4)
