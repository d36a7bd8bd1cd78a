"""Sparse multivariate polynomials and rational functions over Q.

Polynomials map exponent tuples to nonzero rational coefficients, with a fixed
variable count per value (seven variables t0..t6 for the moduli identities; a
one-variable instance is reused wherever a single formal parameter is needed).

Rational functions are deliberately *not* kept gcd-reduced: every identity in
scope is an equality test, which cross-multiplication decides exactly.  A cheap
normalization (integer content and common monomial factors) keeps operands
from growing needlessly.
"""

from __future__ import annotations

import re
from math import gcd

from .errors import DivisionByZeroPolynomial
from .rational import RAT_ONE, RAT_ZERO, Rational, rat


class MultiPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exps, c in terms.items():
                if len(exps) != nvars:
                    raise ValueError("exponent tuple length mismatch")
                if c != RAT_ZERO:
                    clean[tuple(exps)] = Rational(c)
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, value, nvars: int) -> "MultiPoly":
        value = Rational(value)
        if value == RAT_ZERO:
            return cls(nvars)
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "MultiPoly":
        exps = [0] * nvars
        exps[i] = 1
        return cls(nvars, {tuple(exps): RAT_ONE})

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "MultiPoly":
        return cls.constant(RAT_ONE, nvars)

    # -- structure ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * self.nvars, RAT_ZERO)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, int) or type(other) is type(RAT_ZERO):
            return self.terms == MultiPoly.constant(other, self.nvars).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"MultiPoly({self.as_str()})"

    def as_str(self, names=None) -> str:
        if not self.terms:
            return "0"
        names = names or tuple(f"t{i}" for i in range(self.nvars))
        bits = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            mono = "*".join(
                f"{names[i]}^{e}" if e > 1 else names[i]
                for i, e in enumerate(exps)
                if e
            )
            if mono:
                lead = "" if c == RAT_ONE else ("-" if c == -RAT_ONE else f"{c}*")
                bits.append(f"{lead}{mono}")
            else:
                bits.append(str(c))
        out = " + ".join(bits)
        return out.replace("+ -", "- ")

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable-count mismatch")
            return other
        return MultiPoly.constant(other, self.nvars)

    def __add__(self, other):
        o = self._coerce(other)
        terms = dict(self.terms)
        for exps, c in o.terms.items():
            s = terms.get(exps, RAT_ZERO) + c
            if s == RAT_ZERO:
                terms.pop(exps, None)
            else:
                terms[exps] = s
        out = MultiPoly(self.nvars)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MultiPoly(self.nvars)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = Rational(other)
            if c == RAT_ZERO:
                return MultiPoly(self.nvars)
            out = MultiPoly(self.nvars)
            out.terms = {e: v * c for e, v in self.terms.items()}
            return out
        o = self._coerce(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, RAT_ZERO) + c1 * c2
                if s == RAT_ZERO:
                    terms.pop(e, None)
                else:
                    terms[e] = s
        out = MultiPoly(self.nvars)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers take non-negative integer exponents")
        out = MultiPoly.one(self.nvars)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __truediv__(self, other):
        if isinstance(other, (MultiPoly, MultiRat)):
            return MultiRat(self, MultiPoly.one(self.nvars)) / other
        return self * (RAT_ONE / Rational(other))

    def diff(self, i: int) -> "MultiPoly":
        """Partial derivative with respect to variable i."""
        terms: dict = {}
        for exps, c in self.terms.items():
            e = exps[i]
            if e == 0:
                continue
            new = list(exps)
            new[i] = e - 1
            key = tuple(new)
            s = terms.get(key, RAT_ZERO) + c * e
            if s == RAT_ZERO:
                terms.pop(key, None)
            else:
                terms[key] = s
        out = MultiPoly(self.nvars)
        out.terms = terms
        return out

    def evaluate(self, point):
        """Exact evaluation at a rational point (sequence of nvars values)."""
        if len(point) != self.nvars:
            raise ValueError("point length mismatch")
        total = RAT_ZERO
        for exps, c in self.terms.items():
            v = c
            for x, e in zip(point, exps):
                if e:
                    v = v * Rational(x) ** e
            total = total + v
        return total

    def max_exponents(self):
        out = [0] * self.nvars
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e > out[i]:
                    out[i] = e
        return tuple(out)

    def weighted_degrees(self, weights) -> set[int]:
        """Set of weighted total degrees appearing among the terms."""
        return {sum(w * e for w, e in zip(weights, exps)) for exps in self.terms}

    def is_weighted_homogeneous(self, weights):
        """(True, degree) when all terms share one weighted degree; (False, None)
        otherwise.  The zero polynomial counts as homogeneous of any degree."""
        degs = self.weighted_degrees(weights)
        if len(degs) == 0:
            return True, None
        if len(degs) == 1:
            return True, degs.pop()
        return False, None

    def integer_content_and_denominator(self):
        """(g, l): gcd of numerators and lcm of denominators over all terms."""
        g, l = 0, 1
        for c in self.terms.values():
            g = gcd(g, int(c.numerator))
            d = int(c.denominator)
            l = l // gcd(l, d) * d
        return g, l


_TOKEN = re.compile(r"\s*([+-]|[0-9]+(?:/[0-9]+)?|[A-Za-z_][A-Za-z_0-9]*|\^|\*\*|\*)")


def poly(text: str, nvars: int = 7, names=None) -> MultiPoly:
    """Parse "6/5*t0^5 + 1/3125*t0*t3 - 1/5*t4" into a MultiPoly.

    Grammar: sign-separated monomials; each monomial is an optional rational
    coefficient and '*'-separated var^exp factors ('^' or '**').
    """
    names = list(names or (f"t{i}" for i in range(nvars)))
    index = {n: i for i, n in enumerate(names)}
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError(f"cannot tokenize {text[pos:]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    result = MultiPoly.zero(nvars)
    i = 0
    while i < len(tokens):
        sign = RAT_ONE
        while i < len(tokens) and tokens[i] in "+-":
            if tokens[i] == "-":
                sign = -sign
            i += 1
        if i >= len(tokens):
            if sign != RAT_ONE:
                raise ValueError("dangling sign")
            break
        coeff = RAT_ONE
        exps = [0] * nvars
        expect_factor = True
        while i < len(tokens):
            tok = tokens[i]
            if tok in "+-" and not expect_factor:
                break
            if tok in ("*", "**", "^"):
                raise ValueError(f"unexpected operator {tok!r}")
            if re.fullmatch(r"[0-9]+(?:/[0-9]+)?", tok):
                coeff = coeff * rat(tok)
                i += 1
            else:
                if tok not in index:
                    raise ValueError(f"unknown variable {tok!r}")
                v = index[tok]
                i += 1
                power = 1
                if i < len(tokens) and tokens[i] in ("^", "**"):
                    i += 1
                    power = int(tokens[i])
                    i += 1
                exps[v] += power
            expect_factor = False
            if i < len(tokens) and tokens[i] == "*":
                i += 1
                expect_factor = True
        result = result + MultiPoly(nvars, {tuple(exps): sign * coeff})
    return result


class MultiRat:
    """Quotient of MultiPoly values; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None, normalize=True):
        if den is None:
            den = MultiPoly.one(num.nvars)
        if num.nvars != den.nvars:
            raise ValueError("variable-count mismatch")
        if den.is_zero:
            raise DivisionByZeroPolynomial("zero denominator polynomial")
        if normalize:
            num, den = _strip_common(num, den)
        self.num = num
        self.den = den

    @classmethod
    def constant(cls, value, nvars: int) -> "MultiRat":
        return cls(MultiPoly.constant(value, nvars))

    @classmethod
    def variable(cls, i: int, nvars: int) -> "MultiRat":
        return cls(MultiPoly.variable(i, nvars))

    @property
    def nvars(self) -> int:
        return self.num.nvars

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __repr__(self):
        if self.den == MultiPoly.one(self.nvars):
            return f"MultiRat({self.num.as_str()})"
        return f"MultiRat(({self.num.as_str()}) / ({self.den.as_str()}))"

    def _coerce(self, other) -> "MultiRat":
        if isinstance(other, MultiRat):
            if other.nvars != self.nvars:
                raise ValueError("variable-count mismatch")
            return other
        if isinstance(other, MultiPoly):
            return MultiRat(other, normalize=False)
        return MultiRat.constant(other, self.nvars)

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return (self.num * o.den - o.num * self.den).is_zero

    def __hash__(self):  # pragma: no cover - unreduced values hash unreliably
        raise TypeError("MultiRat is unhashable (kept unreduced)")

    def __add__(self, other):
        o = self._coerce(other)
        return MultiRat(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return MultiRat(-self.num, self.den, normalize=False)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        return MultiRat(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.num.is_zero:
            raise DivisionByZeroPolynomial("division by the zero rational function")
        return MultiRat(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if n == 0:
            return MultiRat.constant(RAT_ONE, self.nvars)
        if n < 0:
            return (MultiRat.constant(RAT_ONE, self.nvars) / self) ** (-n)
        return MultiRat(self.num ** n, self.den ** n)

    def diff(self, i: int) -> "MultiRat":
        """Partial derivative: (num' den - num den') / den^2."""
        return MultiRat(
            self.num.diff(i) * self.den - self.num * self.den.diff(i),
            self.den * self.den,
        )

    def derive(self, images) -> "MultiRat":
        """Derivation D with D(variable i) = images[i] (MultiRat), extended by
        the Leibniz and quotient rules."""
        dnum = _poly_derive(self.num, images)
        dden = _poly_derive(self.den, images)
        den_rat = MultiRat(self.den, normalize=False)
        return dnum / den_rat - MultiRat(self.num, normalize=False) * dden / (den_rat * den_rat)

    def evaluate(self, point):
        d = self.den.evaluate(point)
        if d == RAT_ZERO:
            raise ZeroDivisionError("denominator vanishes at the evaluation point")
        return self.num.evaluate(point) / d


def _poly_derive(p: MultiPoly, images) -> MultiRat:
    out = MultiRat.constant(RAT_ZERO, p.nvars)
    for i in range(p.nvars):
        di = p.diff(i)
        if not di.is_zero:
            out = out + images[i] * MultiRat(di, normalize=False)
    return out


def _strip_common(num: MultiPoly, den: MultiPoly):
    """Remove the common integer content and common monomial factor."""
    if num.is_zero:
        return num, MultiPoly.one(den.nvars)
    # common monomial factor
    nmin = [min(e[i] for e in num.terms) for i in range(num.nvars)]
    dmin = [min(e[i] for e in den.terms) for i in range(den.nvars)]
    shift = tuple(min(a, b) for a, b in zip(nmin, dmin))
    if any(shift):
        num = _shift_down(num, shift)
        den = _shift_down(den, shift)
    # rational content: scale both by the same unit so coefficients are
    # integers with no common integer factor across the pair
    gn, ln = num.integer_content_and_denominator()
    gd, ld = den.integer_content_and_denominator()
    lden = ln * ld // gcd(ln, ld)
    scale = rat(lden, gcd(gn, gd))
    if scale != RAT_ONE:
        num = num * scale
        den = den * scale
    return num, den


def _shift_down(p: MultiPoly, shift) -> MultiPoly:
    out = MultiPoly(p.nvars)
    out.terms = {
        tuple(e - s for e, s in zip(exps, shift)): c for exps, c in p.terms.items()
    }
    return out


def rational_roots(coeffs) -> list:
    """All rational roots of sum_k coeffs[k] x^k (exact; coeffs rational).

    Clears denominators and enumerates divisors of the trailing/leading
    integer coefficients.  Returns distinct roots, sorted.
    """
    coeffs = [Rational(c) for c in coeffs]
    while coeffs and coeffs[-1] == RAT_ZERO:
        coeffs.pop()
    if not coeffs:
        raise ValueError("the zero polynomial has every root")
    roots = []
    low = 0
    while coeffs[low] == RAT_ZERO:
        low += 1
    if low > 0:
        roots.append(RAT_ZERO)
        coeffs = coeffs[low:]
    if len(coeffs) > 1:
        l = 1
        for c in coeffs:
            d = int(c.denominator)
            l = l // gcd(l, d) * d
        ints = [int(c * l) for c in coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        ints = [v // g for v in ints]
        a0, an = abs(ints[0]), abs(ints[-1])
        if max(a0, an) > 10 ** 12:
            raise ValueError("rational-root enumeration bound exceeded")
        for p in _divisors(a0):
            for q in _divisors(an):
                for cand in (rat(p, q), rat(-p, q)):
                    if cand in roots:
                        continue
                    if sum(c * cand ** k for k, c in enumerate(ints)) == RAT_ZERO:
                        roots.append(cand)
    return sorted(roots)


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)
