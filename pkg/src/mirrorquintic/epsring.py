"""The truncated polynomial ring Q[eps]/(eps^4) and the deformed hypergeometric
coefficients that seed the Frobenius basis of the quintic Picard-Fuchs operator.
"""

from __future__ import annotations

from .errors import NonUnitConstantTerm
from .rational import RAT_ONE, RAT_ZERO, Rational, rat
from .series import CoefficientRing


class EpsElement:
    """c0 + c1*eps + c2*eps^2 + c3*eps^3 with eps^4 = 0; coefficients exact rationals."""

    __slots__ = ("c",)

    def __init__(self, c0=RAT_ZERO, c1=RAT_ZERO, c2=RAT_ZERO, c3=RAT_ZERO):
        self.c = (Rational(c0), Rational(c1), Rational(c2), Rational(c3))

    @classmethod
    def from_rational(cls, value) -> "EpsElement":
        return cls(Rational(value))

    def __repr__(self):
        return "EpsElement(%s)" % ", ".join(str(x) for x in self.c)

    def __eq__(self, other):
        if isinstance(other, EpsElement):
            return self.c == other.c
        if isinstance(other, int) or type(other) is type(RAT_ZERO):
            return self.c == (Rational(other), RAT_ZERO, RAT_ZERO, RAT_ZERO)
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def _coerce(self, other):
        if isinstance(other, EpsElement):
            return other
        return EpsElement(Rational(other))

    def __add__(self, other):
        o = self._coerce(other)
        return EpsElement(*(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        return EpsElement(*(-a for a in self.c))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, EpsElement):
            r = Rational(other)
            return EpsElement(*(a * r for a in self.c))
        a, b = self.c, other.c
        return EpsElement(
            a[0] * b[0],
            a[0] * b[1] + a[1] * b[0],
            a[0] * b[2] + a[1] * b[1] + a[2] * b[0],
            a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0],
        )

    __rmul__ = __mul__

    def inverse(self) -> "EpsElement":
        """Inverse exists iff the degree-0 part is nonzero (geometric series in
        the nilpotent part, cut at eps^4)."""
        if self.c[0] == RAT_ZERO:
            raise NonUnitConstantTerm("eps-ring element with zero degree-0 part")
        inv0 = 1 / self.c[0]
        n = EpsElement(RAT_ZERO, *(x * inv0 for x in self.c[1:]))  # nilpotent part / c0
        n2 = n * n
        geom = EpsElement(RAT_ONE) - n + n2 - n2 * n
        return geom * inv0

    def __truediv__(self, other):
        if isinstance(other, EpsElement):
            return self * other.inverse()
        return self * (RAT_ONE / Rational(other))

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("eps-ring powers take non-negative integer exponents")
        out = EpsElement(RAT_ONE)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def coeff(self, j: int):
        """Coefficient of eps^j, 0 <= j <= 3."""
        return self.c[j]


EPS_ZERO = EpsElement()
EPS_ONE = EpsElement(RAT_ONE)
EPS = EpsElement(RAT_ZERO, RAT_ONE)

EPS_RING = CoefficientRing("Q[eps]/(eps^4)", EPS_ZERO, EPS_ONE, EpsElement.from_rational)


def frobenius_coefficient(n: int) -> EpsElement:
    """prod_{j=1..5n} (j + 5 eps) / (prod_{k=1..n} (k + eps))^5 in Q[eps]/(eps^4).

    Degree-0 part is (5n)!/(n!)^5; higher eps-degrees carry the logarithmic
    companions of the hypergeometric solution.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    num = EPS_ONE
    for j in range(1, 5 * n + 1):
        num = num * EpsElement(rat(j), rat(5))
    den = EPS_ONE
    for k in range(1, n + 1):
        den = den * EpsElement(rat(k), RAT_ONE)
    return num * (den ** 5).inverse()


def frobenius_coefficients(up_to: int) -> list[EpsElement]:
    """All coefficients 0..up_to via the term ratio
    c_n = c_{n-1} * prod_{j=5n-4..5n} (j + 5 eps) / (n + eps)^5."""
    out = [EPS_ONE]
    for n in range(1, up_to + 1):
        step = EPS_ONE
        for j in range(5 * n - 4, 5 * n + 1):
            step = step * EpsElement(rat(j), rat(5))
        out.append(out[-1] * step * (EpsElement(rat(n), RAT_ONE) ** 5).inverse())
    return out
