# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of _purekernel.

Beyond running the index bookkeeping in C, this kernel unpacks the exact
rationals into numerator/denominator integer pairs and accumulates with
plain integer arithmetic (gcd-trimmed at each addition), rebuilding
canonical Fraction objects only for the final table.  Results are
bit-identical to the pure kernel: same values, same type, zeros shared.
"""

from fractions import Fraction
from math import gcd as _gcd

_ZERO = Fraction(0)


cdef object _build_fraction(object num, object den):
    if num == 0:
        return _ZERO
    g = _gcd(num, den)
    if g != 1:
        num //= g
        den //= g
    f = Fraction.__new__(Fraction)
    f._numerator = num
    f._denominator = den
    return f


def insert(f_coeffs, f_sizes, Py_ssize_t f_cod,
           g_coeffs, g_sizes, Py_ssize_t g_cod, Py_ssize_t slot):
    cdef Py_ssize_t m = len(f_sizes)
    cdef Py_ssize_t n = len(g_sizes)
    cdef Py_ssize_t g_rows = 1, post = 1, f_rows = 1
    cdef Py_ssize_t i, k, grow, frow, pre, rem, tail, oi, c, idx, base
    cdef Py_ssize_t k_size, kpost, out_size
    for i in range(n):
        g_rows *= <Py_ssize_t> g_sizes[i]
    for i in range(slot + 1, m):
        post *= <Py_ssize_t> f_sizes[i]
    for i in range(m):
        f_rows *= <Py_ssize_t> f_sizes[i]
    k_size = <Py_ssize_t> f_sizes[slot]
    kpost = k_size * post
    out_size = (f_rows // k_size) * g_rows * f_cod

    # nonzero entries of g, grouped by codomain index, as (row, num, den)
    by_k = [[] for _ in range(g_cod)]
    idx = 0
    for grow in range(g_rows):
        for k in range(g_cod):
            v = g_coeffs[idx]
            idx += 1
            if v:
                (<list> by_k[k]).append(
                    (grow, v.numerator, v.denominator))

    cdef list out_n = [0] * out_size
    cdef list out_d = [1] * out_size

    idx = 0
    for frow in range(f_rows):
        pre = frow // kpost
        rem = frow - pre * kpost
        k = rem // post
        tail = rem - k * post
        col = <list> by_k[k]
        base = pre * g_rows
        for c in range(f_cod):
            fv = f_coeffs[idx]
            idx += 1
            if not fv or not col:
                continue
            fn = fv.numerator
            fd = fv.denominator
            for tup in col:
                grow = <Py_ssize_t> (<tuple> tup)[0]
                num = (<tuple> tup)[1] * fn
                den = (<tuple> tup)[2] * fd
                oi = ((base + grow) * post + tail) * f_cod + c
                on = out_n[oi]
                if on == 0:
                    out_n[oi] = num
                    out_d[oi] = den
                else:
                    od = out_d[oi]
                    g = _gcd(od, den)
                    if g == 1:
                        out_n[oi] = on * den + num * od
                        out_d[oi] = od * den
                    else:
                        dq = den // g
                        out_n[oi] = on * dq + num * (od // g)
                        out_d[oi] = od * dq
    return [_build_fraction(out_n[i], out_d[i]) for i in range(out_size)]


def axpy(list target, scalar, source):
    cdef Py_ssize_t j, ln
    if not scalar:
        return
    ln = len(source)
    sn = scalar.numerator
    sd = scalar.denominator
    for j in range(ln):
        v = source[j]
        if not v:
            continue
        num = sn * v.numerator
        den = sd * v.denominator
        t = target[j]
        if t:
            num = num * t.denominator + t.numerator * den
            den = den * t.denominator
        target[j] = _build_fraction(num, den)
