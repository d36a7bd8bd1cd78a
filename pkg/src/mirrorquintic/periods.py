"""The period route: Frobenius basis of the quintic Picard-Fuchs operator,
mirror map, and the period-side expressions for t0, t4 and the Yukawa
coupling.

Normalization: the overall period scale (a power of 2*pi*i/5 per weighted
degree) is set to 1 throughout, so every series here has rational
coefficients and all cross-route comparisons are exact identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .epsring import frobenius_coefficient, frobenius_coefficients
from .errors import IdentityFails
from .logseries import LogSeries
from .rational import RAT_ZERO, rat
from .series import TruncatedSeries

__all__ = [
    "FrobeniusBasis",
    "MirrorMap",
    "build_frobenius",
    "pf_annihilation_check",
    "apply_pf_operator",
    "build_mirror_map",
    "t0_t4_from_periods",
    "yukawa_from_periods",
    "q31_q14_check",
    "frobenius_coefficient",
]


@dataclass(frozen=True)
class FrobeniusBasis:
    """The four solutions psi_0..psi_3 around the maximal unipotent point,
    plus the closed-form power-series companions psi_0 and psi1_tilde."""

    solutions: tuple  # four LogSeries in the rescaled coordinate zt = z / 5^5
    psi0: TruncatedSeries
    psi1_tilde: TruncatedSeries

    @property
    def order(self) -> int:
        return self.psi0.order


@dataclass(frozen=True)
class MirrorMap:
    q_of_z: TruncatedSeries  # q as a series in zt, vanishing constant term
    z_of_q: TruncatedSeries  # its compositional inverse

    @property
    def order(self) -> int:
        return self.q_of_z.order


def _psi0_closed(order: int) -> TruncatedSeries:
    """sum_m (5m)!/(m!)^5 zt^m."""
    return TruncatedSeries(
        [rat(factorial(5 * m), factorial(m) ** 5) for m in range(order + 1)]
    )


def _psi1_tilde_closed(order: int) -> TruncatedSeries:
    """sum_{m>=1} (5m)!/(m!)^5 (sum_{k=m+1..5m} 1/k) zt^m."""
    coeffs = [RAT_ZERO]
    for m in range(1, order + 1):
        h = sum((rat(1, k) for k in range(m + 1, 5 * m + 1)), RAT_ZERO)
        coeffs.append(rat(factorial(5 * m), factorial(m) ** 5) * h)
    return TruncatedSeries(coeffs)


def build_frobenius(order: int) -> FrobeniusBasis:
    """Build psi_0..psi_3 from the eps-ring route and force the power-series
    parts to agree with the closed forms of psi_0 and psi1_tilde.

    Expanding zt^eps = exp(eps log zt) gives psi_i = sum_{k<=i} (log zt)^k/k!
    times g_{i-k}, where g_j collects the eps^j parts of the deformed
    hypergeometric coefficients.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    eps_coeffs = frobenius_coefficients(order)
    g = [
        TruncatedSeries([c.coeff(j) for c in eps_coeffs]) for j in range(4)
    ]
    zero = TruncatedSeries.zero(order)
    solutions = tuple(
        LogSeries([g[i - k] if k <= i else zero for k in range(4)])
        for i in range(4)
    )
    psi0 = _psi0_closed(order)
    psi1t = _psi1_tilde_closed(order)
    if g[0] != psi0:
        raise IdentityFails("eps-route psi0 disagrees with its closed form")
    if g[1] != psi1t * 5:
        raise IdentityFails("eps-route log companion disagrees with 5 * psi1_tilde")
    return FrobeniusBasis(solutions, psi0, psi1t)


# -- Picard-Fuchs annihilation ------------------------------------------------

# The operator, written in the z coordinate (z = 5^5 zt, derivative D = d/dz):
#   D^4 I = a1 I + a2 D I + a3 D^2 I + a4 D^3 I,
#   a1 = -24/(625 z^3 (z-1)),        a2 = (-24 z + 5)/(5 z^3 (z-1)),
#   a3 = (-72 z + 35)/(5 z^2 (z-1)), a4 = (-8 z + 6)/(z (z-1)).
# Multiplying through by 625 z^4 (z-1) clears every denominator and leaves a
# combination of z^k D^k, which the Euler operator expresses pole-free:
#   625 (z-1) th4 + (5000 z - 3750) th3 + (9000 z - 4375) th2
#     + (3000 z - 625) th + 24 z,     th_k = th (th-1) ... (th-k+1).
_PF_FALLING = (
    (rat(625), rat(-625), 4),  # (coeff of z, constant coeff, falling-factorial depth)
    (rat(5000), rat(-3750), 3),
    (rat(9000), rat(-4375), 2),
    (rat(3000), rat(-625), 1),
    (rat(24), RAT_ZERO, 0),
)


def apply_pf_operator(sol: LogSeries) -> LogSeries:
    """Apply the denominator-cleared Picard-Fuchs operator; the result is the
    zero log-series exactly when the operator annihilates ``sol``."""
    # f[k] = th_k sol; the factor (th - (k-1)) applies first, th last.
    f = [sol]
    for k in range(1, 5):
        g = sol
        for j in range(k - 1, -1, -1):
            g = g.theta() - g.scale(rat(j)) if j else g.theta()
        f.append(g)
    acc = None
    for zc, cc, depth in _PF_FALLING:
        term = f[depth]
        part = term.shift_x(1).scale(zc * 3125)  # z * term, z = 5^5 zt
        if cc != RAT_ZERO:
            part = part + term.scale(cc)
        acc = part if acc is None else acc + part
    return acc


def pf_annihilation_check(basis: FrobeniusBasis, order: int | None = None):
    """Per-solution verified order: the largest n <= order through which the
    cleared operator kills the solution (the full order when the residual is
    identically zero there, reported as that order)."""
    order = basis.order if order is None else min(order, basis.order)
    out = []
    for sol in basis.solutions:
        resid = apply_pf_operator(sol)
        first = resid.first_nonzero_order(order)
        out.append(order if first is None else first - 1)
    return out


# -- mirror map and period-side series ---------------------------------------


def build_mirror_map(basis: FrobeniusBasis, order: int | None = None) -> MirrorMap:
    """q(zt) = zt * exp(5 psi1_tilde / psi0) and its reversion."""
    order = basis.order if order is None else order
    g = (basis.psi1_tilde.truncate(order) * 5) * basis.psi0.truncate(order).inverse()
    q_of_z = g.exp().shift(1)
    return MirrorMap(q_of_z=q_of_z, z_of_q=q_of_z.revert())


def t0_t4_from_periods(
    basis: FrobeniusBasis, mmap: MirrorMap, order: int | None = None
):
    """Period-side t0 = psi0/5 and t4 = zt * psi0^5, rewritten in q."""
    order = mmap.order if order is None else order
    z_of_q = mmap.z_of_q.truncate(order)
    psi0 = basis.psi0.truncate(order)
    t0 = psi0.compose(z_of_q) * rat(1, 5)
    t4 = (psi0 ** 5).shift(1).compose(z_of_q)
    return t0, t4


def yukawa_from_periods(
    basis: FrobeniusBasis, mmap: MirrorMap, order: int | None = None
) -> TruncatedSeries:
    """Normalization-free Yukawa coupling
    Y = 5 / ((1 - 5^5 zt) psi0^2) * (theta log q(zt))^-3, rewritten in q.

    The constant term is 5, the degree of the quintic."""
    order = mmap.order if order is None else order
    psi0 = basis.psi0.truncate(order)
    g = (basis.psi1_tilde.truncate(order) * 5) * psi0.inverse()
    theta_log_q = TruncatedSeries.one(order) + g.theta()
    one_minus = TruncatedSeries.one(order) - TruncatedSeries.identity(order) * 3125
    y_z = (
        (one_minus.inverse() * (psi0 ** 2).inverse() * (theta_log_q ** 3).inverse())
        * 5
    )
    return y_z.compose(mmap.z_of_q.truncate(order))


def q31_q14_check(basis, mmap, instanton, order: int) -> bool:
    """The two accessory period identities tying psi-ratios to instanton
    divisor sums:

      psi2/psi0 - (1/2)(psi1/psi0)^2           =  (1/5) sum_n c_n q^n / n^2,
      (1/3)(psi1/psi0)^3 - (psi1/psi0)(psi2/psi0) + psi3/psi0
                                               = -(2/5) sum_n c_n q^n / n^3,

    with c_n = sum_{d|n} n_d d^3.  The sign of the second right-hand side is
    forced by the eps-ring definition of the basis (the eps^3 part of the
    degree-1 deformed coefficient is -1150 = -(2/5) * 2875 * 1^3).  The
    log-degree bookkeeping must cancel identically (the combinations are
    monodromy invariant); this is asserted, not assumed."""
    if instanton.max_degree < order:
        raise ValueError("instanton table too short for the requested order")
    psi0 = basis.psi0.truncate(order)
    r = [sol.truncate(order).div_series(psi0) for sol in basis.solutions[:4]]
    lhs2 = r[2] - (r[1] * r[1]).scale(rat(1, 2))
    lhs3 = (r[1] * r[1] * r[1]).scale(rat(1, 3)) - r[1] * r[2] + r[3]
    for name, comb in (("first", lhs2), ("second", lhs3)):
        for j in range(1, 4):
            if any(c != RAT_ZERO for c in comb.part(j).coeffs):
                raise IdentityFails(
                    f"log terms fail to cancel in the {name} accessory identity"
                )
    z_of_q = mmap.z_of_q.truncate(order)
    got2 = lhs2.part(0).compose(z_of_q)
    got3 = lhs3.part(0).compose(z_of_q)
    c = [RAT_ZERO] * (order + 1)
    for n in range(1, order + 1):
        c[n] = sum(
            (instanton.n[d] * d ** 3 for d in range(1, n + 1) if n % d == 0),
            RAT_ZERO,
        )
    want2 = TruncatedSeries(
        [RAT_ZERO] + [c[n] * rat(1, 5 * n * n) for n in range(1, order + 1)]
    )
    want3 = TruncatedSeries(
        [RAT_ZERO] + [c[n] * rat(-2, 5 * n ** 3) for n in range(1, order + 1)]
    )
    return got2 == want2 and got3 == want3
