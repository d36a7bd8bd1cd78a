"""Acceptance criteria, one test per criterion, every comparison at exact
rational equality (tolerance zero).

Run with ``pytest tests/test_acceptance.py -v -s`` to see one line per
criterion.  Two sub-assertions are strict-xfail because the reference data
contradicts itself there (details in the test docstrings); the
verified-content twins of those criteria pass.
"""

import time

import pytest

from mirrorquintic.enumerative import conjecture_check, j_expansion, lambert_extract
from mirrorquintic.gaussmanin import symbolic_suite
from mirrorquintic.instances import (
    eisenstein_series,
    quintic_instance,
    ramanujan_instance,
)
from mirrorquintic.odesolve import check_weighted_homogeneity, residual_check
from mirrorquintic.periods import (
    pf_annihilation_check,
    q31_q14_check,
    t0_t4_from_periods,
    yukawa_from_periods,
)
from mirrorquintic.pipeline import (
    KNOWN_POSITIVITY_EXCEPTIONS,
    period_bundle,
    quintic_solution,
    ramanujan_solution,
    yukawa_of,
)
from mirrorquintic.rational import rat
from mirrorquintic.refdata import (
    INSTANTON_REFERENCE,
    J_POLE_REFERENCE,
    J_REGULAR_REFERENCE,
    J_REGULAR_Q9_COMPUTED,
    NORMALIZATION_SCALES,
    NORMALIZED_TABLES,
)


def _report(criterion: str, detail: str = "") -> None:
    suffix = f"  ({detail})" if detail else ""
    print(f"ACCEPTANCE {criterion}: PASS{suffix}")


def test_c01_printed_tables_order_10():
    """All eleven printed coefficients of each of the seven normalized series."""
    start = time.perf_counter()
    sol = quintic_solution(10)
    for label, (scale, idx) in NORMALIZATION_SCALES.items():
        got = (sol.series[idx] * scale).coeffs
        want = tuple(rat(v) for v in NORMALIZED_TABLES[label])
        assert got == want, f"{label} differs from the printed table"
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    _report("C01 normalized series tables", f"{elapsed:.2f}s, 7 series x 11 coefficients")


def test_c02_instanton_list():
    """Constant 5 plus n_1..n_10, exactly."""
    table = lambert_extract(yukawa_of(quintic_solution(10)), source="ode")
    assert table.constant == rat(INSTANTON_REFERENCE[0])
    for d in range(1, 11):
        assert table.n[d] == rat(INSTANTON_REFERENCE[d]), f"n_{d} differs"
    _report("C02 instanton numbers n_1..n_10")


def test_c03_yukawa_dual_route_order_20():
    basis, mmap = period_bundle(20)
    y_per = yukawa_from_periods(basis, mmap, 20)
    y_ode = yukawa_of(quintic_solution(20))
    assert y_per == y_ode
    _report("C03 Yukawa coupling dual route", "coefficients 0..20 equal")


def test_c04_partial_period_formulas():
    """t0, t4 match the period route through order 50; t5 via the cube
    identity through order 20; t6 via t6 = t5 theta(t5)."""
    sol50 = quintic_solution(50)
    basis, mmap = period_bundle(50)
    p0, p4 = t0_t4_from_periods(basis, mmap, 50)
    assert sol50["t0"] == p0
    assert sol50["t4"] == p4
    sol20 = quintic_solution(20)
    basis20, mmap20 = period_bundle(20)
    y_per = yukawa_from_periods(basis20, mmap20, 20)
    q0, q4 = t0_t4_from_periods(basis20, mmap20, 20)
    cube = -((q4 - q0 ** 5) ** 2) * (y_per * 625).inverse()
    assert sol20["t5"] ** 3 == cube
    assert sol50["t6"] == sol50["t5"] * sol50["t5"].theta(rat(5))
    _report("C04 period formulas for t0, t4 (order 50), t5 cube, t6")


def test_c05_accessory_identities_order_15():
    """Both psi-ratio identities hold through order 15 with the extracted
    instanton numbers (the second with the sign its own definitions force)."""
    basis, mmap = period_bundle(15)
    table = lambert_extract(yukawa_of(quintic_solution(15)), source="ode")
    assert q31_q14_check(basis, mmap, table, 15)
    _report("C05 accessory period identities through q^15")


def test_c05_second_identity_printed_sign_fails():
    """Negative control pinning the documented sign erratum of the second
    identity's displayed right-hand side."""
    basis, mmap = period_bundle(6)
    psi0 = basis.psi0.truncate(6)
    r = [s.truncate(6).div_series(psi0) for s in basis.solutions]
    lhs3 = ((r[1] * r[1] * r[1]).scale(rat(1, 3)) - r[1] * r[2] + r[3]).part(0)
    got = lhs3.compose(mmap.z_of_q.truncate(6))
    assert got.coeffs[1] == rat(-2, 5) * rat(2875)  # not +(2/5) * 2875
    _report("C05 erratum control: printed q14 sign indeed fails")


def test_c06_j_expansion_both_routes_printed_digits_through_q8():
    sol = quintic_solution(12)
    pole_o, reg_o = j_expansion(sol["t0"], sol["t4"], 9)
    basis, mmap = period_bundle(12)
    p0, p4 = t0_t4_from_periods(basis, mmap, 12)
    pole_p, reg_p = j_expansion(p0, p4, 9)
    assert pole_o == pole_p == rat(J_POLE_REFERENCE)
    for n in range(9):
        assert reg_o.coeffs[n] == rat(J_REGULAR_REFERENCE[n]), f"q^{n} differs"
        assert reg_p.coeffs[n] == rat(J_REGULAR_REFERENCE[n]), f"q^{n} differs"
    assert reg_o.coeffs[9] == reg_p.coeffs[9] == rat(J_REGULAR_Q9_COMPUTED)
    _report(
        "C06 j-expansion",
        "printed digits through q^8 from both routes; routes agree at q^9",
    )


@pytest.mark.xfail(
    strict=True,
    reason=(
        "the printed q^9 digit string of 3125 j disagrees with three "
        "independent routes, which all give 1251589997037399017354527578093; "
        "recorded as a reference-data erratum (see refdata.J_REGULAR_Q9_COMPUTED)"
    ),
)
def test_c06_j_expansion_literal_q9_digit():
    sol = quintic_solution(12)
    _, reg = j_expansion(sol["t0"], sol["t4"], 9)
    assert reg.coeffs[9] == rat(J_REGULAR_REFERENCE[9])


def test_c07_eisenstein_anchor_order_50():
    sol = ramanujan_solution(50)
    closed = eisenstein_series(50)
    for k in range(3):
        assert sol.series[k] == closed[k]
    assert residual_check(ramanujan_instance(), sol) == [None, None, None]
    _report("C07 Eisenstein closed forms through q^50")


def test_c08_conjecture_verified_content_order_50():
    """Integrality everywhere, positivity except exactly the two q^1 values
    the reference tables themselves contain (-1 for -t4, -15 for 15625 t6)."""
    sol = quintic_solution(50)
    report = conjecture_check(sol, 50)
    expected = {
        label: (n, value, "non-positive coefficient")
        for label, n, value in KNOWN_POSITIVITY_EXCEPTIONS
    }
    for label, violation in report.violations.items():
        assert violation == expected.get(label), f"{label}: {violation}"
    # beyond the first violation: full positivity/integrality scan
    from mirrorquintic.enumerative import CONJECTURE_NORMALIZATIONS

    for label, var, scale, _shift in CONJECTURE_NORMALIZATIONS:
        s = sol[var] * scale
        for m in range(1, 51):
            c = s.coeffs[m]
            assert c.denominator == 1, f"{label} q^{m} is not an integer"
            if (label, m) not in {(l, n) for l, n, _ in KNOWN_POSITIVITY_EXCEPTIONS}:
                assert c > 0, f"{label} q^{m} = {c} is not positive"
    _report(
        "C08 integrality/positivity through q^50",
        "two printed q^1 exceptions: -t4 -> -1, 15625t6 -> -15",
    )


@pytest.mark.xfail(
    strict=True,
    reason=(
        "literal positivity fails at exactly the two q^1 coefficients the "
        "reference tables themselves contain (-1 for -t4, -15 for 15625 t6); the "
        "verified-content twin of this criterion passes"
    ),
)
def test_c08_conjecture_literal():
    assert conjecture_check(quintic_solution(50), 50).all_pass


def test_c09_pf_annihilation_order_12():
    basis, _ = period_bundle(14)
    assert pf_annihilation_check(basis, 12) == [12, 12, 12, 12]
    _report("C09 Picard-Fuchs annihilation of all four solutions through q^12")


def test_c10_symbolic_suite():
    entries = symbolic_suite()
    failed = [e["name"] for e in entries if not e["passed"]]
    assert not failed, f"failed symbolic checks: {failed}"
    ok, degree = check_weighted_homogeneity(quintic_instance())
    assert ok and degree == 1
    _report("C10 symbolic suite", f"{len(entries)} identity checks + homogeneity audit")


def test_residuals_clean_through_order_20():
    """Every solved series really satisfies its cleared equation."""
    sol = quintic_solution(20)
    assert residual_check(quintic_instance(), sol) == [None] * 7
    _report("residual audit", "den_i theta(t_i) - num_i = 0 through q^20")
