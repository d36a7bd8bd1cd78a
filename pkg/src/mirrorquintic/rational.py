"""Exact rational scalars.

Every coefficient in this package is an arbitrary-precision fraction kept in
canonical form (positive denominator, gcd(|num|, den) = 1).  The stdlib
``fractions.Fraction`` already guarantees exactly that; ``gmpy2.mpq`` has the
same contract and is considerably faster on large operands, so it is preferred
when importable.  Set ``MIRRORQUINTIC_FRACTIONS=1`` to force the stdlib
implementation.
"""

from __future__ import annotations

import os
from fractions import Fraction

if os.environ.get("MIRRORQUINTIC_FRACTIONS"):
    Rational = Fraction
    RATIONAL_BACKEND = "fractions"
else:
    try:
        from gmpy2 import mpq as Rational

        RATIONAL_BACKEND = "gmpy2"
    except ImportError:  # pragma: no cover - gmpy2 is normally present
        Rational = Fraction
        RATIONAL_BACKEND = "fractions"

RAT_ZERO = Rational(0)
RAT_ONE = Rational(1)


def rat(num, den=1):
    """Exact fraction num/den (num may be a canonical "p/q" string)."""
    if isinstance(num, str):
        value = Rational(num)
        return value if den == 1 else value / Rational(den)
    return Rational(num, den)


def parse_rat(text: str):
    """Parse the canonical string form "p/q" (or "p") back into a fraction."""
    return Rational(text.strip())


def rat_str(x) -> str:
    """Canonical string form: "p/q" with positive q, or plain "p" for integers."""
    return str(x)


def numerator(x) -> int:
    return int(x.numerator)


def denominator(x) -> int:
    return int(x.denominator)
