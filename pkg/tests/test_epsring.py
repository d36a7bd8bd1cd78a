"""The ring Q[eps]/(eps^4) and the deformed hypergeometric coefficients."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mirrorquintic.epsring import (
    EPS,
    EPS_ONE,
    EPS_ZERO,
    EpsElement,
    frobenius_coefficient,
    frobenius_coefficients,
)
from mirrorquintic.errors import NonUnitConstantTerm
from mirrorquintic.rational import rat

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=8).map(
    lambda f: rat(f.numerator, f.denominator)
)
elements = st.tuples(rationals, rationals, rationals, rationals).map(
    lambda c: EpsElement(*c)
)


def test_eps_is_nilpotent_of_order_four():
    assert EPS ** 3 != EPS_ZERO
    assert EPS ** 4 == EPS_ZERO
    assert EPS * EPS * EPS * EPS == EPS_ZERO


def test_inverse_of_unit():
    x = EPS_ONE + EPS
    assert x * x.inverse() == EPS_ONE
    # geometric series: (1 + e)^-1 = 1 - e + e^2 - e^3
    assert x.inverse() == EpsElement(1, -1, 1, -1)


def test_inverse_requires_unit_degree_zero_part():
    with pytest.raises(NonUnitConstantTerm):
        EPS.inverse()


@settings(max_examples=40)
@given(elements)
def test_inverse_is_an_involution(x):
    if x.coeff(0) == rat(0):
        x = x + 1
    assert x.inverse().inverse() == x


@settings(max_examples=40)
@given(elements, elements, elements)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a


def test_division():
    assert (EPS_ONE + EPS) / (EPS_ONE + EPS) == EPS_ONE
    assert EpsElement(1) / 2 == EpsElement(rat(1, 2))
    assert 1 / (EPS_ONE - EPS) == EpsElement(1, 1, 1, 1)


def test_frobenius_coefficient_empty_products():
    assert frobenius_coefficient(0) == EPS_ONE


def test_frobenius_coefficient_degree_one():
    # direct expansion of (1+5e)(2+5e)(3+5e)(4+5e)(5+5e) / (1+e)^5
    c1 = frobenius_coefficient(1)
    assert c1.coeff(0) == rat(120)  # 5!/1
    assert c1.coeff(1) == rat(770)
    assert c1.coeff(2) == rat(575)
    assert c1.coeff(3) == rat(-1150)


def test_degree_one_log_part_against_harmonic_oracle():
    # the eps part must equal 5 * (psi1-tilde coefficient) with the latter
    # evaluated from its closed form: 120 * (1/2 + 1/3 + 1/4 + 1/5) = 154
    harmonic = sum((rat(1, k) for k in range(2, 6)), rat(0))
    assert rat(120) * harmonic == rat(154)
    assert frobenius_coefficient(1).coeff(1) == 5 * rat(154)


@pytest.mark.parametrize("n", [0, 1, 2, 3, 7, 12])
def test_incremental_coefficients_match_direct_products(n):
    assert frobenius_coefficients(n)[n] == frobenius_coefficient(n)


def test_degree_zero_parts_are_the_hypergeometric_numbers():
    from math import factorial

    cs = frobenius_coefficients(6)
    for m, c in enumerate(cs):
        assert c.coeff(0) == rat(factorial(5 * m), factorial(m) ** 5)
