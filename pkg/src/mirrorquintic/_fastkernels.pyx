# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the truncated-series kernels in ``_kernels_py``.

Coefficients stay generic Python objects (exact fractions, eps-ring elements,
polynomials); Cython removes the interpreter overhead of the loop machinery,
which dominates while the operands are still small.  The algorithms are
identical to the pure implementations and must stay bit-exact with them.
"""

BACKEND = "cython"


def mul_trunc(list a, list b, Py_ssize_t order, zero):
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef Py_ssize_t i, j, jmax
    cdef list out = [zero] * (order + 1)
    cdef object ai, bj
    cdef Py_ssize_t imax = la - 1
    if order < imax:
        imax = order
    for i in range(imax + 1):
        ai = a[i]
        if ai == zero:
            continue
        jmax = order - i
        if lb - 1 < jmax:
            jmax = lb - 1
        for j in range(jmax + 1):
            bj = b[j]
            if bj == zero:
                continue
            out[i + j] = out[i + j] + ai * bj
    return out


def mul_coeff(list a, list b, Py_ssize_t n, zero):
    cdef Py_ssize_t lo = n - (len(b) - 1)
    if lo < 0:
        lo = 0
    cdef Py_ssize_t hi = len(a) - 1
    if n < hi:
        hi = n
    cdef object s = zero
    cdef object am
    cdef Py_ssize_t m
    for m in range(lo, hi + 1):
        am = a[m]
        if am == zero:
            continue
        s = s + am * b[n - m]
    return s


def inv_trunc(list a, Py_ssize_t order, one):
    cdef object a0inv = one / a[0]
    cdef list out = [a0inv]
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t n, k, kmax
    cdef object s, t
    for n in range(1, order + 1):
        s = None
        kmax = la - 1
        if n < kmax:
            kmax = n
        for k in range(1, kmax + 1):
            t = a[k] * out[n - k]
            s = t if s is None else s + t
        out.append(-(s * a0inv) if s is not None else a0inv - a0inv)
    return out


def exp_trunc(list a, Py_ssize_t order, zero, one):
    cdef list out = [one]
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t n, k, kmax
    cdef object s, ak
    for n in range(1, order + 1):
        s = zero
        kmax = la - 1
        if n < kmax:
            kmax = n
        for k in range(1, kmax + 1):
            ak = a[k]
            if ak == zero:
                continue
            s = s + (k * ak) * out[n - k]
        out.append(s / n)
    return out


def log_trunc(list a, Py_ssize_t order, zero):
    cdef list out = [zero]
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t n, k
    cdef object s, gk, an
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
