"""Pure-Python implementations of the dense truncated-series kernels.

These are the inner loops everything else sits on.  Coefficients are opaque
ring elements (exact fractions, eps-ring elements, polynomials, ...) accessed
only through ``+``, ``-``, ``*`` and ``/``; the zero element of the ring is
passed in explicitly so empty sums have a well-defined value.

A Cython twin of this module (``mirrorquintic._fastkernels``) is built at
install time; ``mirrorquintic.kernels`` picks whichever is available.
"""

BACKEND = "python"


def mul_trunc(a, b, order, zero):
    """Cauchy product of coefficient lists, truncated at ``order``."""
    la, lb = len(a), len(b)
    out = [zero] * (order + 1)
    for i in range(min(la - 1, order) + 1):
        ai = a[i]
        if ai == zero:
            continue
        jmax = min(order - i, lb - 1)
        for j in range(jmax + 1):
            bj = b[j]
            if bj == zero:
                continue
            out[i + j] = out[i + j] + ai * bj
    return out


def mul_coeff(a, b, n, zero):
    """Single coefficient of a Cauchy product: sum_m a[m] * b[n-m]."""
    lo = max(0, n - (len(b) - 1))
    hi = min(n, len(a) - 1)
    s = zero
    for m in range(lo, hi + 1):
        am = a[m]
        if am == zero:
            continue
        s = s + am * b[n - m]
    return s


def inv_trunc(a, order, one):
    """Multiplicative inverse: b[0] = 1/a[0], b[n] = -(sum_{k>=1} a[k] b[n-k]) / a[0]."""
    a0inv = one / a[0]
    out = [a0inv]
    la = len(a)
    for n in range(1, order + 1):
        s = None
        for k in range(1, min(n, la - 1) + 1):
            t = a[k] * out[n - k]
            s = t if s is None else s + t
        out.append(-(s * a0inv) if s is not None else a0inv - a0inv)
    return out


def exp_trunc(a, order, zero, one):
    """exp of a constant-term-zero series via f' = a' f:
    f[0] = 1, f[n] = (1/n) * sum_{k=1..n} k a[k] f[n-k]."""
    out = [one]
    la = len(a)
    for n in range(1, order + 1):
        s = zero
        for k in range(1, min(n, la - 1) + 1):
            ak = a[k]
            if ak == zero:
                continue
            s = s + (k * ak) * out[n - k]
        out.append(s / n)
    return out


def log_trunc(a, order, zero):
    """log of a constant-term-one series via a' = a g':
    g[0] = 0, g[n] = a[n] - (1/n) * sum_{k=1..n-1} k g[k] a[n-k]."""
    out = [zero]
    la = len(a)
    for n in range(1, order + 1):
        s = zero
        for k in range(1, n):
            gk = out[k]
            if gk == zero:
                continue
            if n - k <= la - 1:
                s = s + (k * gk) * a[n - k]
        an = a[n] if n <= la - 1 else zero
        out.append(an - s / n)
    return out
