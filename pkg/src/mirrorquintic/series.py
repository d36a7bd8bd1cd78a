"""Dense truncated power series over an exact coefficient ring.

A series of order N stores exactly the coefficients 0..N; binary operations
truncate to the minimum order, so a result never claims coefficients that were
not actually determined.  All values are immutable; every operation returns a
new series.

The default coefficient ring is Q.  Any commutative ring whose elements
support +, -, * (and, where an operation needs it, /) can be used by passing a
``CoefficientRing`` handle with its zero and one.
"""

from __future__ import annotations

from typing import Callable, NamedTuple, Sequence

from . import kernels
from .errors import BadLowOrderTerms, NonUnitConstantTerm, NonzeroConstantTerm
from .rational import RAT_ONE, RAT_ZERO, rat


class CoefficientRing(NamedTuple):
    name: str
    zero: object
    one: object
    from_rational: Callable


QQ = CoefficientRing("QQ", RAT_ZERO, RAT_ONE, rat)


class TruncatedSeries:
    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs: Sequence, ring: CoefficientRing = QQ):
        if not coeffs:
            raise ValueError("a truncated series needs at least the constant term")
        self.coeffs = tuple(coeffs)
        self.ring = ring

    @classmethod
    def from_ints(cls, values: Sequence, ring: CoefficientRing = QQ) -> "TruncatedSeries":
        """Convenience constructor coercing ints/fraction strings through the ring."""
        return cls([ring.from_rational(v) for v in values], ring)

    @classmethod
    def constant(cls, value, order: int, ring: CoefficientRing = QQ) -> "TruncatedSeries":
        return cls([value] + [ring.zero] * order, ring)

    @classmethod
    def zero(cls, order: int, ring: CoefficientRing = QQ) -> "TruncatedSeries":
        return cls.constant(ring.zero, order, ring)

    @classmethod
    def one(cls, order: int, ring: CoefficientRing = QQ) -> "TruncatedSeries":
        return cls.constant(ring.one, order, ring)

    @classmethod
    def identity(cls, order: int, ring: CoefficientRing = QQ) -> "TruncatedSeries":
        """The series x (requires order >= 1)."""
        if order < 1:
            raise ValueError("identity needs order >= 1")
        coeffs = [ring.zero, ring.one] + [ring.zero] * (order - 1)
        return cls(coeffs, ring)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def coefficient(self, n: int):
        """Coefficient of x^n; raises IndexError beyond the truncation order."""
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:6])
        ell = ", ..." if len(self.coeffs) > 6 else ""
        return f"TruncatedSeries([{shown}{ell}], order={self.order})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def matches(self, other: "TruncatedSeries", through: int | None = None) -> bool:
        """Coefficientwise equality up to ``through`` (default: the common order)."""
        n = min(self.order, other.order) if through is None else through
        if n > min(self.order, other.order):
            raise ValueError("comparison order exceeds a truncation order")
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1], self.ring)

    # -- ring operations ---------------------------------------------------

    def _coerce_scalar(self, value):
        if isinstance(value, int):
            return self.ring.from_rational(value)
        return value

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            return TruncatedSeries(
                [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], self.ring
            )
        c = self._coerce_scalar(other)
        coeffs = list(self.coeffs)
        coeffs[0] = coeffs[0] + c
        return TruncatedSeries(coeffs, self.ring)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.ring)

    def __sub__(self, other):
        return self + (-other if isinstance(other, TruncatedSeries) else -self._coerce_scalar(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            return TruncatedSeries(
                kernels.mul_trunc(list(self.coeffs), list(other.coeffs), n, self.ring.zero),
                self.ring,
            )
        c = self._coerce_scalar(other)
        return TruncatedSeries([a * c for a in self.coeffs], self.ring)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        c = self._coerce_scalar(other)
        return TruncatedSeries([a / c for a in self.coeffs], self.ring)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("series powers take non-negative integer exponents")
        result = TruncatedSeries.one(self.order, self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be a unit."""
        zero = self.ring.zero
        if self.coeffs[0] == zero:
            raise NonUnitConstantTerm("series has zero constant term")
        try:
            coeffs = kernels.inv_trunc(list(self.coeffs), self.order, self.ring.one)
        except ZeroDivisionError as exc:
            raise NonUnitConstantTerm(str(exc)) from exc
        return TruncatedSeries(coeffs, self.ring)

    def exp(self) -> "TruncatedSeries":
        if self.coeffs[0] != self.ring.zero:
            raise NonzeroConstantTerm("exp needs a vanishing constant term")
        return TruncatedSeries(
            kernels.exp_trunc(list(self.coeffs), self.order, self.ring.zero, self.ring.one),
            self.ring,
        )

    def log(self) -> "TruncatedSeries":
        if self.coeffs[0] != self.ring.one:
            raise NonzeroConstantTerm("log needs constant term 1")
        return TruncatedSeries(
            kernels.log_trunc(list(self.coeffs), self.order, self.ring.zero), self.ring
        )

    def theta(self, lam=1) -> "TruncatedSeries":
        """The scaled Euler derivation lam * x * d/dx: coefficient n maps to lam*n*a_n."""
        lam = self._coerce_scalar(lam)
        return TruncatedSeries(
            [(lam * n) * c for n, c in enumerate(self.coeffs)], self.ring
        )

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by x^k (k >= 0): low coefficients become zero, order unchanged."""
        if k < 0:
            raise ValueError("negative shifts are handled by the caller after pole factoring")
        if k == 0:
            return self
        coeffs = [self.ring.zero] * k + list(self.coeffs[: self.order + 1 - k])
        return TruncatedSeries(coeffs, self.ring)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """Substitution self(inner); inner must have zero constant term."""
        if inner.coeffs[0] != inner.ring.zero:
            raise NonzeroConstantTerm("composition needs a vanishing inner constant term")
        order = min(self.order, inner.order)
        zero = self.ring.zero
        g = list(inner.coeffs[: order + 1])
        acc = [self.coeffs[order]] + [zero] * order
        for k in range(order - 1, -1, -1):
            acc = kernels.mul_trunc(acc, g, order, zero)
            acc[0] = acc[0] + self.coeffs[k]
        return TruncatedSeries(acc, self.ring)

    def revert(self) -> "TruncatedSeries":
        """Compositional inverse g with self(g(x)) = x, exact order by order.

        Needs zero constant term and an invertible linear term.  Coefficient n
        solves a1*g[n] + [x^n] sum_{k>=2} a_k g^k = 0; the bracketed term only
        involves g[m] with m < n because g has positive valuation.
        """
        zero, one = self.ring.zero, self.ring.one
        if self.coeffs[0] != zero:
            raise BadLowOrderTerms("reversion needs zero constant term")
        if self.order < 1 or self.coeffs[1] == zero:
            raise BadLowOrderTerms("reversion needs an invertible linear term")
        try:
            a1inv = one / self.coeffs[1]
        except ZeroDivisionError as exc:
            raise BadLowOrderTerms("linear term is not a unit") from exc
        order = self.order
        g = [zero, a1inv]
        powers = {1: g}
        for n in range(2, order + 1):
            for k in range(2, n + 1):
                prev = powers.get(k)
                if prev is None:
                    prev = powers[k] = []
                while len(prev) <= n:
                    i = len(prev)
                    prev.append(kernels.mul_coeff(powers[k - 1], g, i, zero))
            s = zero
            for k in range(2, n + 1):
                ak = self.coeffs[k]
                if ak != zero:
                    s = s + ak * powers[k][n]
            g.append(-(s * a1inv))
            # powers[k][n] for k >= 2 never involves g[n]; no fix-up needed.
        return TruncatedSeries(g, self.ring)
