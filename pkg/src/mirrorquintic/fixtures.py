"""Frozen symbolic data for the mirror-quintic moduli identities.

Everything the identity checks consume is transcribed here once, in one
reviewable place: the polynomial vector field on the five-dimensional moduli
chart, the Gauss-Manin connection in the derivative basis, the de Rham and
topological intersection forms, the two basis changes (Hodge-triangular and
constant-intersection), the monodromy matrices and the normal-form
coefficients b2, b3, b4.

Conventions: seven variables t0..t6; connection matrices act on column vectors
of basis forms, nabla omega_i = sum_j A[i][j] omega_j; A is split into its
dt0- and dt4-components.
"""

from __future__ import annotations

from functools import lru_cache

from .linalg import Matrix, OneForm
from .multipoly import MultiPoly, MultiRat, poly
from .rational import rat

NVARS = 7
VAR_NAMES = ("t0", "t1", "t2", "t3", "t4", "t5", "t6")

QUINTIC_WEIGHTS = (3, 6, 9, 12, 15, 11, 23)
QUINTIC_DERIVATION_SCALE = rat(5)


def _p(text: str) -> MultiPoly:
    return poly(text, NVARS, VAR_NAMES)


def _r(num: str, den: str | None = None) -> MultiRat:
    return MultiRat(_p(num), _p(den) if den is not None else None)


def _zero() -> MultiRat:
    return MultiRat.constant(0, NVARS)


@lru_cache(maxsize=None)
def flow_components() -> tuple[MultiPoly, ...]:
    """Polynomial components of the vector field on (t0..t4); the full system
    reads theta(t_i) = component_i / t5 for i <= 4."""
    return (
        _p("6/5*t0^5 + 1/3125*t0*t3 - 1/5*t4"),
        _p("-125*t0^6 + t0^4*t1 + 125*t0*t4 + 1/3125*t1*t3"),
        _p(
            "-1875*t0^7 - 1/5*t0^5*t1 + 2*t0^4*t2 + 1875*t0^2*t4"
            " + 1/5*t1*t4 + 2/3125*t2*t3"
        ),
        _p(
            "-3125*t0^8 - 1/5*t0^5*t2 + 3*t0^4*t3 + 3125*t0^3*t4"
            " + 1/5*t2*t4 + 3/3125*t3^2"
        ),
        _p("5*t0^4*t4 + 1/625*t3*t4"),
    )


@lru_cache(maxsize=None)
def normal_form_b() -> tuple[MultiPoly, MultiPoly, MultiPoly]:
    """The polynomials b2, b3, b4 of the triangular connection normal form;
    b2 and b3 also drive the t6 line of the differential system."""
    b2 = _p("-72/5*t0^8 - 24/3125*t0^4*t3 - 3/5*t0^3*t4 - 2/1953125*t3^2")
    b3 = _p("12*t0^4 + 2/625*t3")
    b4 = (_p("t0^5 - t4") ** 2) * rat(-1, 5 ** 7)
    return b2, b3, b4


@lru_cache(maxsize=None)
def normalizing_one_form() -> OneForm:
    """alpha = (t0 dt4 - 5 t4 dt0) / ((t4 - t0^5) t4); pairs to 1 with the flow."""
    den = "t4^2 - t0^5*t4"
    return OneForm(
        [
            _r("-5*t4", den),
            _zero(),
            _zero(),
            _zero(),
            _r("t0", den),
        ]
    )


@lru_cache(maxsize=None)
def gauss_manin_dt0() -> Matrix:
    """dt0-component of the connection in the derivative basis omega_i."""
    z = _zero()
    one = MultiRat.constant(1, NVARS)
    den = "t0^5 - t4"
    return Matrix(
        [
            [z, one, z, z],
            [z, z, one, z],
            [z, z, z, one],
            [
                _r("-t0", den),
                _r("-15*t0^2", den),
                _r("-25*t0^3", den),
                _r("-10*t0^4", den),
            ],
        ]
    )


@lru_cache(maxsize=None)
def gauss_manin_dt4() -> Matrix:
    """dt4-component of the connection in the derivative basis omega_i."""
    z = _zero()
    a = _r("-1", "5*t4")
    b = _r("-t0", "5*t4")
    return Matrix(
        [
            [a, b, z, z],
            [z, a * 2, b, z],
            [z, z, a * 3, b],
            [
                _r("t0^2", "5*t0^5*t4 - 5*t4^2"),
                _r("3*t0^3", "t0^5*t4 - t4^2"),
                _r("5*t0^4", "t0^5*t4 - t4^2"),
                _r("6*t0^5 + 4*t4", "5*t0^5*t4 - 5*t4^2"),
            ],
        ]
    )


@lru_cache(maxsize=None)
def de_rham_intersection() -> Matrix:
    """Intersection pairing of the derivative basis; antisymmetric with the
    (1,4) entry 5^-4 / (t4 - t0^5)."""
    z = _zero()
    w = "t4 - t0^5"
    w2 = "t4^2 - 2*t0^5*t4 + t0^10"
    e14 = _r("1/625", w)
    e24 = _r("-1/125*t0^4", w2)
    e34 = _r("1/125*t0^3", w2)
    return Matrix(
        [
            [z, z, z, e14],
            [z, z, -e14, e24],
            [z, e14, z, e34],
            [-e14, -e24, -e34, z],
        ]
    )


@lru_cache(maxsize=None)
def triangular_transition() -> Matrix:
    """Row i expresses the i-th Hodge-triangular basis form in the derivative
    basis; the last row is the marked section t1 w1 + t2 w2 + t3 w3 +
    625 (t4 - t0^5) w4."""
    z = _zero()
    return Matrix(
        [
            [MultiRat.constant(1, NVARS), z, z, z],
            [_r("-t0^4 - 1/3125*t3"), _r("1/5*t0^5 - 1/5*t4"), z, z],
            [
                _r(
                    "-14/5*t0^8 + 1/15625*t0^5*t2 - 1/625*t0^4*t3"
                    " - 1/5*t0^3*t4 - 1/15625*t2*t4 - 2/9765625*t3^2"
                ),
                _r("3/5*t0^9 + 2/15625*t0^5*t3 - 3/5*t0^4*t4 - 2/15625*t3*t4"),
                _r("1/25*t0^10 - 2/25*t0^5*t4 + 1/25*t4^2"),
                z,
            ],
            [_r("t1"), _r("t2"), _r("t3"), _r("625*t4 - 625*t0^5")],
        ]
    )


@lru_cache(maxsize=None)
def hat_transition() -> Matrix:
    """Rescaling of the triangular basis that makes the intersection form the
    constant symplectic-style matrix; uses t5 and t6."""
    z = _zero()
    one = MultiRat.constant(1, NVARS)
    w2 = "t4^2 - 2*t0^5*t4 + t0^10"
    return Matrix(
        [
            [one, z, z, z],
            [z, _r("1", "t5"), z, z],
            [z, _r("-78125*t6", w2), _r("78125*t5", w2), z],
            [z, z, z, one],
        ]
    )


def _qmatrix(rows) -> Matrix:
    return Matrix([[rat(x) if not isinstance(x, tuple) else rat(*x) for x in row] for row in rows])


#: Intersection numbers of the distinguished homology basis (antisymmetric).
CYCLE_INTERSECTION = _qmatrix(
    [
        [0, 0, 0, (-6, 5)],
        [0, 0, (2, 5), 0],
        [0, (-2, 5), 0, 2],
        [(6, 5), 0, -2, 0],
    ]
)

#: Monodromy at the maximal unipotent point, acting on the homology basis.
MONODROMY_MAX_UNIPOTENT = _qmatrix(
    [
        [1, 0, 0, 0],
        [1, 1, 0, 0],
        [1, 2, 1, 0],
        [1, 3, 3, 1],
    ]
)

#: Monodromy around the conifold fibre in the same basis.
MONODROMY_CONIFOLD = _qmatrix(
    [
        [1, (-25, 6), 0, (-5, 6)],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
    ]
)

#: Transition to an alternative published integral homology basis.
ALTERNATE_CYCLE_BASIS = _qmatrix(
    [
        [0, (25, 6), 0, (5, 6)],
        [(25, 6), 0, (5, 2), 0],
        [0, 5, 0, 0],
        [5, 0, 0, 0],
    ]
)

#: Period normalization vector C of the distinguished flow leaf:
#: [<delta~_i, delta~_j>] C = e1.
LEAF_PERIOD_VECTOR = (rat(0), rat(0), rat(0), rat(-6, 5))

#: Constant intersection matrix reached in the rescaled basis.
CONSTANT_INTERSECTION = _qmatrix(
    [
        [0, 0, 0, 1],
        [0, 0, 1, 0],
        [0, -1, 0, 0],
        [-1, 0, 0, 0],
    ]
)

#: Nilpotent shift D = Z^{-1} dZ/dtau of the unipotent period frame.
NILPOTENT_SHIFT = _qmatrix(
    [
        [0, 0, 0, 0],
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
    ]
)


@lru_cache(maxsize=None)
def unipotent_frame() -> Matrix:
    """The tau-unipotent frame Z over Q(tau) (one formal variable)."""

    def tau_poly(coeffs):  # coeffs[k] multiplies tau^k
        return MultiRat(
            MultiPoly(1, {(k,): rat(c) for k, c in enumerate(coeffs) if c})
            if any(coeffs)
            else MultiPoly.zero(1)
        )

    return Matrix(
        [
            [tau_poly([1]), tau_poly([0]), tau_poly([0]), tau_poly([0])],
            [tau_poly([0, 1]), tau_poly([1]), tau_poly([0]), tau_poly([0])],
            [tau_poly([0, 0, 1]), tau_poly([0, 2]), tau_poly([2]), tau_poly([0])],
            [tau_poly([0, 0, 0, 1]), tau_poly([0, 0, 3]), tau_poly([0, 6]), tau_poly([6])],
        ]
    )


#: Rational points used as an independent evaluation oracle for every symbolic
#: identity; all avoid the discriminant locus t4 (t4 - t0^5) t5 = 0.
SPOT_POINTS = (
    tuple(rat(v) for v in (2, 3, 5, 7, 11, 13, 17)),
    tuple(rat(v) for v in (1, 2, -1, 3, 2, 1, 4)),
    (rat(3), rat(1, 2), rat(2), rat(-5), rat(1), rat(-2), rat(7)),
)
