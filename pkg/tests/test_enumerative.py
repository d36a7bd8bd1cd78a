"""Instanton extraction, multiple-cover sums, the j-expansion, and the
integrality/positivity report."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mirrorquintic.enumerative import (
    InstantonTable,
    conjecture_check,
    gw_from_instanton,
    instanton_from_gw,
    j_expansion,
    lambert_compose,
    lambert_extract,
)
from mirrorquintic.errors import BadPoleStructure
from mirrorquintic.odesolve import SeriesSolution
from mirrorquintic.pipeline import quintic_solution
from mirrorquintic.rational import RAT_ZERO, rat
from mirrorquintic.series import TruncatedSeries


def test_first_instanton_number():
    y = TruncatedSeries.from_ints([5, 2875])
    assert lambert_extract(y).n[1] == rat(2875)


def test_second_instanton_number_by_hand_inversion():
    # a_2 = n_1 + 8 n_2 = 2875 + 609250 * 8 = 4876875
    y = TruncatedSeries.from_ints([5, 2875, 4876875])
    table = lambert_extract(y)
    assert table.n[2] == rat(609250)
    assert table.constant == rat(5)


def test_zero_series_extracts_zero_table():
    y = TruncatedSeries.zero(6)
    assert all(v == RAT_ZERO for v in lambert_extract(y).n.values())


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=8).map(
    lambda f: rat(f.numerator, f.denominator)
)


@settings(max_examples=40)
@given(st.lists(rationals, min_size=2, max_size=8), rationals)
def test_lambert_roundtrip(values, constant):
    table = InstantonTable(
        constant=constant,
        n={d + 1: v for d, v in enumerate(values)},
        max_degree=len(values),
    )
    assert lambert_extract(lambert_compose(table)).n == table.n


@settings(max_examples=40)
@given(st.lists(rationals, min_size=2, max_size=8))
def test_moebius_inversion_recovers_instanton_numbers(values):
    table = InstantonTable(
        constant=rat(5),
        n={d + 1: v for d, v in enumerate(values)},
        max_degree=len(values),
    )
    assert instanton_from_gw(gw_from_instanton(table)) == table.n


def test_gw_values():
    sol = quintic_solution(12)
    y = -((sol["t4"] - sol["t0"] ** 5) ** 2) * ((sol["t5"] ** 3) * 625).inverse()
    gw = gw_from_instanton(lambert_extract(y))
    assert gw.N[1] == rat(2875)
    assert gw.N[2] == rat(4876875, 8)
    assert gw.N[3] == rat(317206375) + rat(2875, 27)


def test_j_leading_coefficients():
    sol = quintic_solution(12)
    pole, reg = j_expansion(sol["t0"], sol["t4"], 2)
    assert pole == rat(1)
    assert reg.coeffs[:2] == (rat(770), rat(421375))


def test_j_bad_pole_structure():
    t0 = TruncatedSeries.from_ints([1, 1, 1])
    with pytest.raises(BadPoleStructure):
        j_expansion(t0, TruncatedSeries.from_ints([1, 1, 1]))
    with pytest.raises(BadPoleStructure):
        j_expansion(t0, TruncatedSeries.from_ints([0, 0, 1]))


def test_conjecture_report_known_exceptions_only():
    sol = quintic_solution(10)
    report = conjecture_check(sol, 10)
    assert report.violations["(1/24)t0 - 1/120"] is None
    assert report.violations["(-1/750)t1 - 1/30"] is None
    assert report.violations["(-1/50)t2 - 7/10"] is None
    assert report.violations["(-1/5)t3 - 6/5"] is None
    assert report.violations["25t5 + 1/125"] is None
    assert report.violations["-t4"] == (1, rat(-1), "non-positive coefficient")
    assert report.violations["15625t6"] == (1, rat(-15), "non-positive coefficient")
    assert not report.all_pass


def test_conjecture_detects_injected_non_integer():
    sol = quintic_solution(8)
    coeffs = list(sol["t0"].coeffs)
    coeffs[4] = coeffs[4] + rat(1, 7)
    series = list(sol.series)
    series[0] = TruncatedSeries(coeffs)
    tampered = SeriesSolution(sol.instance_name, sol.names, tuple(series))
    report = conjecture_check(tampered, 8)
    order, _value, reason = report.violations["(1/24)t0 - 1/120"]
    assert order == 4 and reason == "non-integer coefficient"


def test_instanton_numbers_agree_between_routes():
    from mirrorquintic.pipeline import instanton_table

    ode = instanton_table(10, route="ode")
    periods = instanton_table(10, route="periods")
    assert ode.constant == periods.constant
    assert ode.n == periods.n
    assert (ode.source, periods.source) == ("ode", "periods")


def test_instanton_table_recomposition_invariant():
    sol = quintic_solution(10)
    y = -((sol["t4"] - sol["t0"] ** 5) ** 2) * ((sol["t5"] ** 3) * 625).inverse()
    table = lambert_extract(y, source="ode")
    assert lambert_compose(table) == y
    assert table.source == "ode"
