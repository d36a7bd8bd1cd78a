"""Series with logarithmic parts: f0 + f1*L + f2*L^2/2! + f3*L^3/3!, L = log x.

The parts f_j are truncated series over Q with a common truncation order.
Log-degree is capped at 3 (the deepest solution of a 4th-order operator with
maximal unipotent monodromy); products that would push nonzero content past
the cap raise instead of silently truncating.
"""

from __future__ import annotations

from math import comb

from .series import QQ, TruncatedSeries

LOG_DEGREE_CAP = 3


class LogSeries:
    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(parts)
        if len(parts) != LOG_DEGREE_CAP + 1:
            raise ValueError("a log-series carries exactly %d parts" % (LOG_DEGREE_CAP + 1))
        orders = {p.order for p in parts}
        if len(orders) != 1:
            raise ValueError("log-series parts must share one truncation order")
        self.parts = parts

    @classmethod
    def from_series(cls, f: TruncatedSeries) -> "LogSeries":
        z = TruncatedSeries.zero(f.order, f.ring)
        return cls((f, z, z, z))

    @classmethod
    def zero(cls, order: int) -> "LogSeries":
        z = TruncatedSeries.zero(order, QQ)
        return cls((z, z, z, z))

    @property
    def order(self) -> int:
        return self.parts[0].order

    def part(self, j: int) -> TruncatedSeries:
        """The series multiplying L^j/j!."""
        return self.parts[j]

    def __repr__(self):
        return "LogSeries(order=%d, parts=%s)" % (
            self.order,
            [p.coeffs[:3] for p in self.parts],
        )

    def __eq__(self, other):
        if not isinstance(other, LogSeries):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def truncate(self, order: int) -> "LogSeries":
        return LogSeries(tuple(p.truncate(order) for p in self.parts))

    def __add__(self, other: "LogSeries") -> "LogSeries":
        return LogSeries(tuple(a + b for a, b in zip(self.parts, other.parts)))

    def __sub__(self, other: "LogSeries") -> "LogSeries":
        return LogSeries(tuple(a - b for a, b in zip(self.parts, other.parts)))

    def __neg__(self) -> "LogSeries":
        return LogSeries(tuple(-a for a in self.parts))

    def scale(self, c) -> "LogSeries":
        return LogSeries(tuple(p * c for p in self.parts))

    def mul_series(self, f: TruncatedSeries) -> "LogSeries":
        return LogSeries(tuple(p * f for p in self.parts))

    def div_series(self, f: TruncatedSeries) -> "LogSeries":
        finv = f.inverse()
        return LogSeries(tuple(p * finv for p in self.parts))

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.mul_series(other)
        if not isinstance(other, LogSeries):
            return NotImplemented
        order = min(self.order, other.order)
        a = [p.truncate(order) for p in self.parts]
        b = [p.truncate(order) for p in other.parts]
        zero = TruncatedSeries.zero(order, QQ)
        out = []
        for m in range(2 * LOG_DEGREE_CAP + 1):
            s = zero
            for j in range(m + 1):
                k = m - j
                if j <= LOG_DEGREE_CAP and k <= LOG_DEGREE_CAP:
                    s = s + (a[j] * b[k]) * comb(m, j)
            if m <= LOG_DEGREE_CAP:
                out.append(s)
            elif s != zero:
                raise ValueError("log-degree overflow beyond %d" % LOG_DEGREE_CAP)
        return LogSeries(tuple(out))

    def theta(self) -> "LogSeries":
        """Euler derivation x d/dx; theta(L^j/j!) = L^{j-1}/(j-1)!, so the new
        part j is theta(f_j) + f_{j+1}.  No poles are introduced."""
        out = []
        for j in range(LOG_DEGREE_CAP + 1):
            term = self.parts[j].theta()
            if j + 1 <= LOG_DEGREE_CAP:
                term = term + self.parts[j + 1]
            out.append(term)
        return LogSeries(tuple(out))

    def shift_x(self, k: int) -> "LogSeries":
        """Multiply by x^k, k >= 0."""
        return LogSeries(tuple(p.shift(k) for p in self.parts))

    def log_shift(self, c) -> "LogSeries":
        """Substitute L -> L + c for a scalar c: part j becomes
        sum_m f_{j+m} c^m / m!."""
        out = []
        for j in range(LOG_DEGREE_CAP + 1):
            term = self.parts[j]
            cpow = None
            fact = 1
            for m in range(1, LOG_DEGREE_CAP + 1 - j):
                cpow = c if cpow is None else cpow * c
                fact *= m
                term = term + self.parts[j + m] * (cpow / fact)
            out.append(term)
        return LogSeries(tuple(out))

    def is_zero_through(self, order: int) -> bool:
        return self.first_nonzero_order(order) is None

    def first_nonzero_order(self, order: int | None = None):
        """Smallest n <= order with a nonzero coefficient in some part, or None."""
        order = self.order if order is None else order
        zero = QQ.zero
        for n in range(order + 1):
            for p in self.parts:
                if p.coeffs[n] != zero:
                    return n
        return None
