"""The two shipped differential-system instances and their seeds.

Both systems are stored denominator-cleared: den_i(t) * theta(t_i) = num_i(t)
with theta = lam * q * d/dq.  The quintic system clears every line by t5 (the
t6/t5 term of the last line then becomes polynomial); the Eisenstein system
needs no clearing.
"""

from __future__ import annotations

from .fixtures import QUINTIC_WEIGHTS, flow_components, normal_form_b
from .multipoly import MultiPoly, poly
from .odesolve import SeedData, VectorFieldInstance
from .rational import rat
from .series import TruncatedSeries


def quintic_instance() -> VectorFieldInstance:
    t5 = poly("t5", 7)
    t6 = poly("t6", 7)
    b2, b3, _ = normal_form_b()
    nums = tuple(flow_components()) + (t6, t5 * b2 + t6 * b3)
    return VectorFieldInstance(
        name="quintic",
        nvars=7,
        lam=rat(5),
        names=("t0", "t1", "t2", "t3", "t4", "t5", "t6"),
        dens=(t5,) * 7,
        nums=nums,
        weights=QUINTIC_WEIGHTS,
    )


def quintic_seed() -> SeedData:
    return SeedData(
        pinned={(0, 0): rat(1, 5), (0, 1): rat(24), (4, 0): rat(0)},
        nonzero=frozenset({5}),
    )


def ramanujan_instance() -> VectorFieldInstance:
    names = ("t1", "t2", "t3")
    one = MultiPoly.one(3)
    return VectorFieldInstance(
        name="ramanujan",
        nvars=3,
        lam=rat(12),
        names=names,
        dens=(one, one, one),
        nums=(
            poly("t1^2 - 1/12*t2", 3, names),
            poly("4*t1*t2 - 6*t3", 3, names),
            poly("6*t1*t3 - 1/3*t2^2", 3, names),
        ),
        weights=(2, 4, 6),
    )


def ramanujan_seed() -> SeedData:
    return SeedData(pinned={(0, 0): rat(1), (0, 1): rat(-24)}, nonzero=frozenset())


def _sigma(k: int, n: int) -> int:
    return sum(d ** k for d in range(1, n + 1) if n % d == 0)


def eisenstein_series(order: int) -> tuple[TruncatedSeries, ...]:
    """Closed forms solving the Eisenstein system:
    t_k = a_k (1 + b_k sum_n sigma_{2k-1}(n) q^n) with
    (a_1, a_2, a_3) = (1, 12, 8) and (b_1, b_2, b_3) = (-24, 240, -504)."""
    out = []
    for a, b, k in ((1, -24, 1), (12, 240, 2), (8, -504, 3)):
        coeffs = [rat(a)]
        for n in range(1, order + 1):
            coeffs.append(rat(a * b * _sigma(2 * k - 1, n)))
        out.append(TruncatedSeries(coeffs))
    return tuple(out)
