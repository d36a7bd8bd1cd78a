"""Truncated-series arithmetic: frozen examples and ring properties."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mirrorquintic import _kernels_py, kernels
from mirrorquintic.errors import (
    BadLowOrderTerms,
    NonUnitConstantTerm,
    NonzeroConstantTerm,
)
from mirrorquintic.rational import RAT_ONE, RAT_ZERO, rat
from mirrorquintic.series import TruncatedSeries


def S(*values):
    return TruncatedSeries.from_ints(values)


rationals = st.fractions(min_value=-30, max_value=30, max_denominator=12).map(
    lambda f: rat(f.numerator, f.denominator)
)


def series_strategy(min_len=1, max_len=6):
    return st.lists(rationals, min_size=min_len, max_size=max_len).map(TruncatedSeries)


# -- multiplication -----------------------------------------------------------


def test_mul_difference_of_squares():
    a, b = S(1, 1, 0), S(1, -1, 0)
    assert a * b == S(1, 0, -1)


def test_mul_psi0_square_leading_terms():
    # (1 + 120 z)^2 = 1 + 240 z at order 1
    psi0 = S(1, 120)
    assert psi0 * psi0 == S(1, 240)


def test_mul_identity():
    a = S(3, -7, rat(1, 2))
    assert a * TruncatedSeries.one(2) == a


def test_mul_min_order_propagation():
    assert (S(1, 2, 3) * S(1, 1)).order == 1


@settings(max_examples=40)
@given(series_strategy(3, 5), series_strategy(3, 5), series_strategy(3, 5))
def test_mul_associative_distributive(a, b, c):
    assert ((a * b) * c) == (a * (b * c))
    assert (a * (b + c)) == (a * b + a * c)


# -- inversion ----------------------------------------------------------------


def test_inv_geometric():
    assert S(1, -1, 0, 0).inverse() == S(1, 1, 1, 1)


def test_inv_zero_constant_term_raises():
    with pytest.raises(NonUnitConstantTerm):
        S(0, 1, -170).inverse()


def test_inv_constant():
    assert S(2, 0).inverse() == TruncatedSeries([rat(1, 2), RAT_ZERO])


@settings(max_examples=40)
@given(series_strategy(2, 6))
def test_inv_involution(a):
    if a.coeffs[0] == RAT_ZERO:
        a = a + 1
    assert a.inverse().inverse() == a
    assert a * a.inverse() == TruncatedSeries.one(a.order)


# -- theta derivation ---------------------------------------------------------


def test_theta_kills_constants():
    assert TruncatedSeries.constant(rat(7), 3).theta(rat(5)) == TruncatedSeries.zero(3)


def test_theta_termwise_scale_5():
    assert S(0, 1, -170).theta(rat(5)) == S(0, 5, -1700)


def test_theta_scale_12():
    assert S(0, 1).theta(rat(12)) == S(0, 12)


@settings(max_examples=40)
@given(series_strategy(2, 5), series_strategy(2, 5))
def test_theta_leibniz(a, b):
    lam = rat(5)
    n = min(a.order, b.order)
    lhs = (a * b).theta(lam)
    rhs = a.theta(lam).truncate(n) * b + a * b.theta(lam).truncate(n)
    assert lhs == rhs


# -- exp / log ----------------------------------------------------------------


def test_exp_zero():
    assert TruncatedSeries.zero(4).exp() == TruncatedSeries.one(4)


def test_exp_linear_term():
    # 770^2 / 2 = 296450
    assert S(0, 770, 0).exp() == S(1, 770, 296450)


def test_exp_needs_zero_constant():
    with pytest.raises(NonzeroConstantTerm):
        S(1, 1).exp()


def test_log_needs_unit_constant():
    with pytest.raises(NonzeroConstantTerm):
        S(2, 1).log()


@settings(max_examples=30)
@given(series_strategy(2, 6))
def test_log_exp_roundtrip(a):
    a = TruncatedSeries([RAT_ZERO] + list(a.coeffs[1:]))
    assert a.exp().log() == a


@settings(max_examples=30)
@given(series_strategy(2, 6))
def test_exp_log_roundtrip(a):
    a = TruncatedSeries([RAT_ONE] + list(a.coeffs[1:]))
    assert a.log().exp() == a


def test_exp_inverse_is_exp_of_negation():
    a = S(0, 3, rat(-1, 2), 5)
    assert a.exp() * (-a).exp() == TruncatedSeries.one(3)


# -- reversion and composition ------------------------------------------------


def test_revert_identity():
    x = TruncatedSeries.identity(5)
    assert x.revert() == x


def test_revert_quadratic_perturbation():
    # inverse of z + 770 z^2 starts q - 770 q^2
    g = S(0, 1, 770).revert()
    assert g.coeffs[:3] == (RAT_ZERO, RAT_ONE, rat(-770))


def test_revert_preconditions():
    with pytest.raises(BadLowOrderTerms):
        S(1, 1).revert()
    with pytest.raises(BadLowOrderTerms):
        S(0, 0, 1).revert()


@settings(max_examples=30)
@given(series_strategy(3, 6))
def test_revert_composition_contract(a):
    coeffs = [RAT_ZERO, RAT_ONE] + list(a.coeffs[2:])
    f = TruncatedSeries(coeffs)
    assert f.compose(f.revert()) == TruncatedSeries.identity(f.order)
    assert f.revert().compose(f) == TruncatedSeries.identity(f.order)


def test_compose_needs_zero_inner_constant():
    with pytest.raises(NonzeroConstantTerm):
        S(1, 2).compose(S(1, 1))


def test_compose_against_direct_expansion():
    f, g = S(2, 1, 3), S(0, 1, 1)
    # 2 + g + 3 g^2 with g = q + q^2: 2 + q + q^2 + 3(q^2 + 2 q^3 + ...) -> [2, 1, 4]
    assert f.compose(g) == S(2, 1, 4)


# -- structural ---------------------------------------------------------------


def test_truncate_and_matches():
    a = S(1, 2, 3, 4)
    assert a.truncate(1) == S(1, 2)
    assert a.matches(S(1, 2, 99), through=1)
    with pytest.raises(ValueError):
        a.matches(S(1, 2), through=3)


def test_shift():
    assert S(1, 2, 3).shift(1) == S(0, 1, 2)


def test_coefficient_lengths_are_checked():
    with pytest.raises(ValueError):
        TruncatedSeries([])


def test_pow_matches_repeated_mul():
    a = S(1, 1, 1, 0)
    assert a ** 3 == a * a * a
    assert a ** 0 == TruncatedSeries.one(3)


# -- kernel backends stay bit-exact -------------------------------------------


@settings(max_examples=30)
@given(
    st.lists(rationals, min_size=1, max_size=7),
    st.lists(rationals, min_size=1, max_size=7),
)
def test_compiled_and_pure_kernels_agree(a, b):
    order = min(len(a), len(b)) - 1
    assert kernels.mul_trunc(a, b, order, RAT_ZERO) == _kernels_py.mul_trunc(
        a, b, order, RAT_ZERO
    )
    if a[0] != RAT_ZERO:
        assert kernels.inv_trunc(a, order, RAT_ONE) == _kernels_py.inv_trunc(
            a, order, RAT_ONE
        )
    a0 = [RAT_ZERO] + a[1:]
    assert kernels.exp_trunc(a0, order, RAT_ZERO, RAT_ONE) == _kernels_py.exp_trunc(
        a0, order, RAT_ZERO, RAT_ONE
    )
    a1 = [RAT_ONE] + a[1:]
    assert kernels.log_trunc(a1, order, RAT_ZERO) == _kernels_py.log_trunc(
        a1, order, RAT_ZERO
    )
