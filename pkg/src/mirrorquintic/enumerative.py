"""Instanton numbers, Gromov-Witten invariants, the j-expansion and the
integrality/positivity check on the normalized series.

Instanton numbers are stored as exact rationals, never coerced to int: their
integrality is conjectural and is asserted only inside the dedicated checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import BadPoleStructure
from .rational import RAT_ZERO, Rational, rat
from .series import TruncatedSeries

LAMBERT_WEIGHT = 3


@dataclass(frozen=True)
class InstantonTable:
    """Degree-indexed coefficients of the Lambert form
    constant + sum_d n_d d^3 q^d/(1-q^d), with extraction provenance."""

    constant: Rational
    n: dict
    max_degree: int
    source: str = ""

    def gw(self) -> "GWTable":
        return gw_from_instanton(self)


@dataclass(frozen=True)
class GWTable:
    N: dict
    max_degree: int


def lambert_extract(y: TruncatedSeries, weight: int = LAMBERT_WEIGHT, source: str = "") -> InstantonTable:
    """Invert a_m = sum_{d|m} n_d d^weight by the triangular divisor recursion
    n_m = (a_m - sum_{d|m, d<m} n_d d^weight) / m^weight."""
    if y.order < 1:
        raise ValueError("need at least the q^1 coefficient")
    n: dict = {}
    for m in range(1, y.order + 1):
        partial = sum(
            (n[d] * rat(d) ** weight for d in range(1, m) if m % d == 0),
            RAT_ZERO,
        )
        n[m] = (y.coeffs[m] - partial) / rat(m) ** weight
    return InstantonTable(constant=y.coeffs[0], n=n, max_degree=y.order, source=source)


def lambert_compose(table: InstantonTable, order: Optional[int] = None,
                    weight: int = LAMBERT_WEIGHT) -> TruncatedSeries:
    """Reassemble constant + sum_d n_d d^weight q^d/(1-q^d) as a power series."""
    order = table.max_degree if order is None else order
    coeffs = [table.constant] + [RAT_ZERO] * order
    for d, nd in table.n.items():
        if d > order:
            continue
        term = nd * rat(d) ** weight
        for m in range(d, order + 1, d):
            coeffs[m] = coeffs[m] + term
    return TruncatedSeries(coeffs)


def gw_from_instanton(table: InstantonTable) -> GWTable:
    """N_d = sum_{k|d} n_{d/k} / k^3 (multiple-cover sum)."""
    N = {
        d: sum(
            (table.n[d // k] / rat(k) ** 3 for k in range(1, d + 1) if d % k == 0),
            RAT_ZERO,
        )
        for d in range(1, table.max_degree + 1)
    }
    return GWTable(N=N, max_degree=table.max_degree)


def _mobius(k: int) -> int:
    out, p, m = 1, 2, k
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    if m > 1:
        out = -out
    return out


def instanton_from_gw(gw: GWTable) -> dict:
    """Moebius inversion n_d = sum_{k|d} mu(k) N_{d/k} / k^3."""
    return {
        d: sum(
            (rat(_mobius(k)) * gw.N[d // k] / rat(k) ** 3
             for k in range(1, d + 1) if d % k == 0),
            RAT_ZERO,
        )
        for d in range(1, gw.max_degree + 1)
    }


def j_expansion(t0: TruncatedSeries, t4: TruncatedSeries, order: Optional[int] = None):
    """3125 * t0^5 / t4 as (pole coefficient, regular part):
    pole/q + c_0 + c_1 q + ... with the regular part through q^order.

    t4 must have a simple zero at q = 0 (else BadPoleStructure)."""
    if t4.coeffs[0] != RAT_ZERO or t4.order < 1 or t4.coeffs[1] == RAT_ZERO:
        raise BadPoleStructure("t4 must vanish to exactly first order at q = 0")
    work = min(t0.order, t4.order)
    if order is not None and order > work - 2:
        raise ValueError("series too short for the requested j order")
    unit = TruncatedSeries(t4.coeffs[1 : work + 1])  # t4 / q, invertible
    r = (t0.truncate(work - 1) ** 5) * unit.inverse() * 3125
    pole = r.coeffs[0]
    regular = TruncatedSeries(r.coeffs[1:])
    if order is not None:
        regular = regular.truncate(order)
    return pole, regular


#: The seven normalizations: (label, variable, scale, constant shift) with
#: shifted series scale * t_i + shift conjectured to have positive integer
#: q-coefficients.
CONJECTURE_NORMALIZATIONS = (
    ("(1/24)t0 - 1/120", "t0", rat(1, 24), rat(-1, 120)),
    ("(-1/750)t1 - 1/30", "t1", rat(-1, 750), rat(-1, 30)),
    ("(-1/50)t2 - 7/10", "t2", rat(-1, 50), rat(-7, 10)),
    ("(-1/5)t3 - 6/5", "t3", rat(-1, 5), rat(-6, 5)),
    ("-t4", "t4", rat(-1), RAT_ZERO),
    ("25t5 + 1/125", "t5", rat(25), rat(1, 125)),
    ("15625t6", "t6", rat(15625), RAT_ZERO),
)


@dataclass(frozen=True)
class ConjectureReport:
    order: int
    #: per-series first violation: label -> (order, coefficient, reason) or None
    violations: dict

    @property
    def all_pass(self) -> bool:
        return all(v is None for v in self.violations.values())


def conjecture_check(solution, order: Optional[int] = None) -> ConjectureReport:
    """Integrality and positivity of the coefficients of q^1..q^order of the
    seven normalized, shifted series; reports the first violation per series.

    Also insists that the constant shift cancels the constant term exactly (a
    transcription guard on the branch data)."""
    order = solution.order if order is None else order
    violations = {}
    for label, var, scale, shift in CONJECTURE_NORMALIZATIONS:
        s = solution[var] * scale
        first = None
        if s.coeffs[0] + shift != RAT_ZERO:
            first = (0, s.coeffs[0] + shift, "constant shift fails to cancel")
        else:
            for m in range(1, order + 1):
                c = s.coeffs[m]
                if c.denominator != 1:
                    first = (m, c, "non-integer coefficient")
                    break
                if c <= RAT_ZERO:
                    first = (m, c, "non-positive coefficient")
                    break
        violations[label] = first
    return ConjectureReport(order=order, violations=violations)
