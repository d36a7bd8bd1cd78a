"""Symbolic verification, over Q(t0..t6), of the connection and intersection
identities of the mirror-quintic moduli family.

Every check is an exact polynomial identity (cross-multiplied difference equals
the zero polynomial); as an independent oracle against transcription slips,
each identity is additionally evaluated at three fixed rational points away
from the discriminant locus t4 (t4 - t0^5) t5 = 0.

Where the transcribed data leaves a convention ambiguous (row versus column
action), a check
tries the bounded set of variants, requires exactly one to succeed, and
records which; nothing is guessed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import IdentityFails
from .fixtures import (
    CONSTANT_INTERSECTION,
    CYCLE_INTERSECTION,
    LEAF_PERIOD_VECTOR,
    MONODROMY_CONIFOLD,
    MONODROMY_MAX_UNIPOTENT,
    NILPOTENT_SHIFT,
    NVARS,
    QUINTIC_WEIGHTS,
    SPOT_POINTS,
    de_rham_intersection,
    flow_components,
    gauss_manin_dt0,
    gauss_manin_dt4,
    hat_transition,
    normal_form_b,
    normalizing_one_form,
    triangular_transition,
    unipotent_frame,
)
from .linalg import Matrix, OneForm
from .multipoly import MultiPoly, MultiRat
from .rational import rat


@dataclass(frozen=True)
class VerifyOutcome:
    name: str
    passed: bool
    convention: str | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.passed


def _const(v) -> MultiRat:
    return MultiRat.constant(v, NVARS)


def _zero_matrix(n=4) -> Matrix:
    return Matrix([[_const(0)] * n for _ in range(n)])


def _spot_equal(lhs: MultiRat, rhs: MultiRat, label: str) -> None:
    for pt in SPOT_POINTS:
        if lhs.evaluate(pt) != rhs.evaluate(pt):
            raise IdentityFails(f"{label}: numeric spot check fails at {pt}")


def _rat_equal(lhs: MultiRat, rhs: MultiRat, label: str) -> None:
    if not lhs == rhs:
        raise IdentityFails(f"{label}: polynomial identity fails")
    _spot_equal(lhs, rhs, label)


def _mat_equal(a: Matrix, b: Matrix, label: str) -> None:
    for i in range(a.nrows):
        for j in range(a.ncols):
            _rat_equal(a[i, j], b[i, j], f"{label}, entry ({i + 1},{j + 1})")


def _flow_rat():
    return [MultiRat(p) for p in flow_components()]


@lru_cache(maxsize=None)
def derivation_images():
    """Images of t0..t6 under the system derivation, as rational functions:
    the five moduli components divided by t5, then t5 -> t6/t5 and
    t6 -> b2 + (t6/t5) b3."""
    t5 = MultiRat.variable(5, NVARS)
    t6 = MultiRat.variable(6, NVARS)
    b2, b3, _ = normal_form_b()
    images = [MultiRat(p) / t5 for p in flow_components()]
    images.append(t6 / t5)
    images.append(MultiRat(b2) + t6 * MultiRat(b3) / t5)
    return tuple(images)


# ---------------------------------------------------------------------------
# intersection-form compatibility with the connection


def verify_compatibility(connection=None) -> VerifyOutcome:
    """d<w_i, w_j> = <nabla w_i, w_j> + <w_i, nabla w_j> in matrix form:
    the k-derivative of the intersection matrix must equal A_k G + G A_k^T
    (with the transpose convention discovered, not assumed).

    ``connection`` may override the (dt0, dt4) component pair, which the
    negative-control tests use."""
    gram = de_rham_intersection()
    if connection is None:
        connection = (gauss_manin_dt0(), gauss_manin_dt4())
    components = {0: connection[0], 4: connection[1]}
    conventions = {
        "right-transpose": lambda a, g: a * g + g * a.transpose(),
        "left-transpose": lambda a, g: a.transpose() * g + g * a,
    }
    passing = []
    for name, combine in conventions.items():
        try:
            for k, a_k in components.items():
                d_gram = gram.map(lambda e: e.diff(k))
                _mat_equal(d_gram, combine(a_k, gram), f"compatibility[{name}] dt{k}")
            passing.append(name)
        except IdentityFails:
            continue
    if len(passing) != 1:
        raise IdentityFails(
            "compatibility: %d transpose conventions pass (expected exactly 1)"
            % len(passing)
        )
    return VerifyOutcome("compatibility", True, convention=passing[0])


# ---------------------------------------------------------------------------
# the flow is the kernel of the marked-section connection forms


def _marked_section_coefficients():
    """The marked section is t1 w1 + t2 w2 + t3 w3 + 625 (t4 - t0^5) w4."""
    return (
        MultiRat.variable(1, NVARS),
        MultiRat.variable(2, NVARS),
        MultiRat.variable(3, NVARS),
        MultiRat(MultiPoly(NVARS, {(0, 0, 0, 0, 1, 0, 0): rat(625)})
                 - MultiPoly(NVARS, {(5, 0, 0, 0, 0, 0, 0): rat(625)})),
    )


def _exterior_derivative(f: MultiRat) -> OneForm:
    return OneForm([f.diff(k) for k in range(5)])


def connection_forms_of_marked_section():
    """The four 1-forms alpha_i with nabla(section) = sum_i alpha_i w_i."""
    a0, a4 = gauss_manin_dt0(), gauss_manin_dt4()
    c = _marked_section_coefficients()
    forms = []
    for i in range(4):
        form = _exterior_derivative(c[i])
        for j in range(4):
            entry = OneForm(
                [a0[j, i], _const(0), _const(0), _const(0), a4[j, i]]
            ).scale(c[j])
            form = form + entry
        forms.append(form)
    return forms


def verify_ra_annihilation(flow=None) -> VerifyOutcome:
    """All four connection forms of the marked section kill the flow, and the
    normalizing 1-form pairs to exactly 1 with it."""
    vec = [MultiRat(p) for p in (flow or flow_components())]
    for i, form in enumerate(connection_forms_of_marked_section()):
        _rat_equal(form.pair(vec), _const(0), f"marked-section form {i + 1} on flow")
    _rat_equal(
        normalizing_one_form().pair(vec), _const(1), "normalizing form on flow"
    )
    return VerifyOutcome("ra-annihilation", True)


# ---------------------------------------------------------------------------
# triangular (Hodge-compatible) basis normal form


@lru_cache(maxsize=None)
def _triangular_connection():
    """Connection components and flow contraction in the triangular basis:
    A~_k = (d_k B + B A_k) B^{-1} for k = 0..4, plus the intersection matrix
    B G B^T."""
    b = triangular_transition()
    b_inv = b.inverse()
    base = {0: gauss_manin_dt0(), 4: gauss_manin_dt4()}
    tilde = []
    for k in range(5):
        a_k = base.get(k, _zero_matrix())
        d_b = b.map(lambda e: e.diff(k))
        tilde.append((d_b + b * a_k) * b_inv)
    flow = _flow_rat()
    contracted = None
    for k in range(5):
        term = tilde[k].scale(flow[k])
        contracted = term if contracted is None else contracted + term
    gram = b * de_rham_intersection() * b.transpose()
    return tuple(tilde), contracted, gram


def verify_triangular_basis() -> VerifyOutcome:
    """Normal form of the connection in the Hodge-triangular basis: the (1,2) and (2,3)
    entries are the normalizing form, (3,4) is b4 times it, the strictly-upper
    remainder vanishes, and contracting with the flow gives
    [[0,1,0,0],[0,0,1,0],[0,b2,b3,b4],[0,0,0,0]]."""
    tilde, contracted, _ = _triangular_connection()
    alpha = normalizing_one_form()
    b2, b3, b4 = normal_form_b()
    b4_alpha = alpha.scale(MultiRat(b4))
    for k in range(5):
        a_k = tilde[k]
        _rat_equal(a_k[0, 1], alpha.components[k], f"triangular (1,2) dt{k}")
        _rat_equal(a_k[1, 2], alpha.components[k], f"triangular (2,3) dt{k}")
        _rat_equal(a_k[2, 3], b4_alpha.components[k], f"triangular (3,4) dt{k}")
        for i, j in ((0, 2), (0, 3), (1, 3)):
            _rat_equal(
                a_k[i, j], _const(0), f"triangular ({i + 1},{j + 1}) dt{k}"
            )
    z, one = _const(0), _const(1)
    expected = Matrix(
        [
            [z, one, z, z],
            [z, z, one, z],
            [z, MultiRat(b2), MultiRat(b3), MultiRat(b4)],
            [z, z, z, z],
        ]
    )
    _mat_equal(contracted, expected, "triangular flow contraction")
    return VerifyOutcome("triangular-basis", True)


def verify_hat_basis() -> VerifyOutcome:
    """In the rescaled basis the intersection matrix becomes the constant
    symplectic-style matrix, and the flow contraction of the connection is
    [[0,1,0,0],[0,0,Y,0],[0,0,0,-1],[0,0,0,0]] with
    Y = (t4 - t0^5)^2 / (5^7 t5^3) (the Yukawa coupling up to -1/125)."""
    _, contracted, gram_tilde = _triangular_connection()
    h = hat_transition()
    h_inv = h.inverse()
    images = derivation_images()
    gram_hat = h * gram_tilde * h.transpose()
    _mat_equal(
        gram_hat,
        CONSTANT_INTERSECTION.map(lambda v: _const(v)),
        "constant intersection form",
    )
    t5_inv = _const(1) / MultiRat.variable(5, NVARS)
    d_h = h.map(lambda e: e.derive(images))
    a_hat = (d_h + h * contracted.scale(t5_inv)) * h_inv
    z, one = _const(0), _const(1)
    yuk = MultiRat(
        (MultiPoly.variable(4, NVARS) - MultiPoly.variable(0, NVARS) ** 5) ** 2
    ) / MultiRat(MultiPoly(NVARS, {(0, 0, 0, 0, 0, 3, 0): rat(5 ** 7)}))
    expected = Matrix(
        [
            [z, one, z, z],
            [z, z, yuk, z],
            [z, z, z, -one],
            [z, z, z, z],
        ]
    )
    _mat_equal(a_hat, expected, "rescaled flow contraction")
    return VerifyOutcome("hat-basis", True)


# ---------------------------------------------------------------------------
# constant matrices


def _q_mat_equal(a: Matrix, b: Matrix) -> bool:
    return a == b


def verify_constant_matrices() -> VerifyOutcome:
    """Antisymmetry of the cycle intersection matrix, preservation of it by
    both monodromies under one common convention, the leaf period vector
    relation, and the nilpotent-shift identity of the unipotent frame."""
    psi = CYCLE_INTERSECTION
    if not _q_mat_equal(psi.transpose(), -psi):
        raise IdentityFails("cycle intersection matrix is not antisymmetric")
    conventions = {
        "rows": lambda x: x * psi * x.transpose(),
        "columns": lambda x: x.transpose() * psi * x,
    }
    passing = [
        name
        for name, combine in conventions.items()
        if _q_mat_equal(combine(MONODROMY_MAX_UNIPOTENT), psi)
        and _q_mat_equal(combine(MONODROMY_CONIFOLD), psi)
    ]
    if len(passing) != 1:
        raise IdentityFails(
            "monodromy preservation: %d conventions pass (expected exactly 1)"
            % len(passing)
        )
    c_col = Matrix([[v] for v in LEAF_PERIOD_VECTOR])
    e1 = Matrix([[rat(1)], [rat(0)], [rat(0)], [rat(0)]])
    if not _q_mat_equal(psi.inverse().transpose() * c_col, e1):
        raise IdentityFails("leaf period vector relation fails")
    z = unipotent_frame()
    z_dot = z.map(lambda e: e.diff(0))
    shift = NILPOTENT_SHIFT.map(lambda v: MultiRat.constant(v, 1))
    if not (z.inverse() * z_dot) == shift:
        raise IdentityFails("unipotent frame does not satisfy the shift identity")
    return VerifyOutcome("constant-matrices", True, convention=passing[0])


# ---------------------------------------------------------------------------
# the closed-form Yukawa simplification


def verify_yukawa_closed_form() -> VerifyOutcome:
    """Substituting the system's derivatives into the period form of the
    coupling collapses it to -(1/625) (t4 - t0^5)^2 / t5^3:

      t0 D(t4) - 5 D(t0) t4 = t4 (t4 - t0^5) / t5          (key factorization)
      -(1/625) (Dz)^3 / (z^3 (z - 1) t0^2) = -(1/625) (t4 - t0^5)^2 / t5^3,
                                              z = t4 / t0^5.
    """
    images = derivation_images()
    t0 = MultiRat.variable(0, NVARS)
    t4 = MultiRat.variable(4, NVARS)
    t5 = MultiRat.variable(5, NVARS)
    w = t4 - t0 ** 5
    key = t0 * images[4] - images[0] * t4 * 5
    _rat_equal(key, t4 * w / t5, "coupling numerator factorization")
    z = t4 / t0 ** 5
    dz = z.derive(images)
    lhs = -(dz ** 3) / (z ** 3 * (z - _const(1)) * t0 ** 2 * 625)
    rhs = -(w ** 2) / (t5 ** 3 * 625)
    _rat_equal(lhs, rhs, "coupling closed form")
    return VerifyOutcome("yukawa-closed-form", True)


# ---------------------------------------------------------------------------
# weighted-degree audit


def audit_weighted_degrees() -> VerifyOutcome:
    """Every fixture polynomial is homogeneous for the weights
    (3, 6, 9, 12, 15, 11, 23): the flow components exceed their variable's
    weight by the common derivation step 12 (= 11 + 1, the t5 weight plus the
    derivation degree), and b2, b3, b4 have degrees 24, 12, 30."""
    w = QUINTIC_WEIGHTS
    for i, p in enumerate(flow_components()):
        ok, deg = p.is_weighted_homogeneous(w)
        if not ok or deg - w[i] != 12:
            raise IdentityFails(f"flow component {i} fails the weight audit")
    b2, b3, b4 = normal_form_b()
    for p, want in ((b2, 24), (b3, 12), (b4, 30)):
        ok, deg = p.is_weighted_homogeneous(w)
        if not ok or deg != want:
            raise IdentityFails(f"normal-form coefficient of degree {want} fails audit")
    return VerifyOutcome("weighted-degrees", True)


ALL_CHECKS = (
    verify_compatibility,
    verify_ra_annihilation,
    verify_triangular_basis,
    verify_hat_basis,
    verify_constant_matrices,
    verify_yukawa_closed_form,
    audit_weighted_degrees,
)


def symbolic_suite():
    """Run every symbolic check, returning a list of outcome records
    (IdentityFails is converted into a failed record, not propagated)."""
    out = []
    for check in ALL_CHECKS:
        name = check.__name__
        try:
            outcome = check()
            out.append(
                {
                    "name": name,
                    "passed": True,
                    "convention": outcome.convention,
                    "detail": outcome.detail,
                }
            )
        except IdentityFails as exc:
            out.append(
                {"name": name, "passed": False, "convention": None, "detail": str(exc)}
            )
    return out
