# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for truncated jet arithmetic.

Mirrors mdkin._jet_pure exactly, including the guarantee that
coefficient 0 of every kernel matches the plain scalar evaluation bit
for bit.  Jets are tuples of at most 7 coefficients (order <= 6).
"""

from libc.math cimport sin as csin, cos as ccos, exp as cexp
from libc.math cimport sqrt as csqrt, atan as catan, asin as casin
from libc.math cimport atan2 as catan2, fabs

DEF MAXN = 8

cdef double[7] _FACT = [1.0, 1.0, 2.0, 6.0, 24.0, 120.0, 720.0]


cdef inline int _unpack(object a, double* buf) except -1:
    cdef int n = len(a)
    cdef int i
    if n > MAXN:
        raise ValueError("jet too long")
    for i in range(n):
        buf[i] = a[i]
    return n


cdef inline object _pack(double* buf, int n):
    cdef int i
    return tuple([buf[i] for i in range(n)])


def add(a, b):
    cdef double[MAXN] x, y
    cdef int n = _unpack(a, x)
    _unpack(b, y)
    cdef int i
    for i in range(n):
        x[i] += y[i]
    return _pack(x, n)


def sub(a, b):
    cdef double[MAXN] x, y
    cdef int n = _unpack(a, x)
    _unpack(b, y)
    cdef int i
    for i in range(n):
        x[i] -= y[i]
    return _pack(x, n)


def neg(a):
    cdef double[MAXN] x
    cdef int n = _unpack(a, x)
    cdef int i
    for i in range(n):
        x[i] = -x[i]
    return _pack(x, n)


def scale(a, s):
    cdef double[MAXN] x
    cdef int n = _unpack(a, x)
    cdef double ss = s
    cdef int i
    for i in range(n):
        x[i] *= ss
    return _pack(x, n)


cdef void _mul(double* a, double* b, double* out, int n):
    cdef int k, i
    cdef double acc
    for k in range(n):
        acc = 0.0
        for i in range(k + 1):
            acc += a[i] * b[k - i]
        out[k] = acc
    out[0] = a[0] * b[0]


def mul(a, b):
    cdef double[MAXN] x, y, z
    cdef int n = _unpack(a, x)
    _unpack(b, y)
    _mul(x, y, z, n)
    return _pack(z, n)


cdef int _div(double* a, double* b, double* out, int n) except -1:
    cdef int k, i
    cdef double acc
    if b[0] == 0.0:
        raise ZeroDivisionError("jet division by a jet with zero real part")
    for k in range(n):
        acc = a[k]
        for i in range(k):
            acc -= out[i] * b[k - i]
        out[k] = acc / b[0]
    return 0


def div(a, b):
    cdef double[MAXN] x, y, z
    cdef int n = _unpack(a, x)
    _unpack(b, y)
    _div(x, y, z, n)
    return _pack(z, n)


cdef void _compose(double* x, double* f, double* out, int n):
    # Horner evaluation of sum_k f[k]/k! * delta**k with delta nilpotent.
    cdef double[MAXN] acc, nxt
    cdef int i, j, k
    for i in range(n):
        acc[i] = 0.0
    acc[0] = f[n - 1] / _FACT[n - 1]
    for k in range(n - 2, -1, -1):
        for i in range(n):
            nxt[i] = 0.0
        for i in range(n):
            if acc[i] == 0.0:
                continue
            for j in range(1, n - i):
                nxt[i + j] += acc[i] * x[j]
        nxt[0] += f[k] / _FACT[k]
        for i in range(n):
            acc[i] = nxt[i]
    acc[0] = f[0]
    for i in range(n):
        out[i] = acc[i]


def compose(x, fders):
    cdef double[MAXN] xx, ff, out
    cdef int n = _unpack(x, xx)
    _unpack(fders, ff)
    _compose(xx, ff, out, n)
    return _pack(out, n)


def sin(x):
    cdef double[MAXN] xx, f, out
    cdef int n = _unpack(x, xx)
    cdef double s = csin(xx[0]), c = ccos(xx[0])
    cdef double[7] tab = [s, c, -s, -c, s, c, -s]
    cdef int i
    for i in range(n):
        f[i] = tab[i]
    _compose(xx, f, out, n)
    return _pack(out, n)


def cos(x):
    cdef double[MAXN] xx, f, out
    cdef int n = _unpack(x, xx)
    cdef double s = csin(xx[0]), c = ccos(xx[0])
    cdef double[7] tab = [c, -s, -c, s, c, -s, -c]
    cdef int i
    for i in range(n):
        f[i] = tab[i]
    _compose(xx, f, out, n)
    return _pack(out, n)


def tan(x):
    cdef double[MAXN] xx, fs, fc, s, c, out
    cdef int n = _unpack(x, xx)
    cdef double sv = csin(xx[0]), cv = ccos(xx[0])
    cdef double[7] tabs = [sv, cv, -sv, -cv, sv, cv, -sv]
    cdef double[7] tabc = [cv, -sv, -cv, sv, cv, -sv, -cv]
    cdef int i
    for i in range(n):
        fs[i] = tabs[i]
        fc[i] = tabc[i]
    _compose(xx, fs, s, n)
    _compose(xx, fc, c, n)
    _div(s, c, out, n)
    return _pack(out, n)


def exp(x):
    cdef double[MAXN] xx, f, out
    cdef int n = _unpack(x, xx)
    cdef double e = cexp(xx[0])
    cdef int i
    for i in range(n):
        f[i] = e
    _compose(xx, f, out, n)
    return _pack(out, n)


def sqrt(x):
    cdef double[MAXN] xx, f, out
    cdef int n = _unpack(x, xx)
    if xx[0] <= 0.0:
        raise ValueError("jet sqrt requires a positive real part")
    cdef double r = csqrt(xx[0])
    cdef double coef = 1.0, p = r
    cdef int k
    f[0] = r
    for k in range(1, n):
        coef *= 0.5 - (k - 1)
        p /= xx[0]
        f[k] = coef * p
    _compose(xx, f, out, n)
    return _pack(out, n)


def powf(x, p):
    cdef double[MAXN] xx, f, out
    cdef int n = _unpack(x, xx)
    cdef double pp = p
    if xx[0] <= 0.0:
        raise ValueError("jet power requires a positive real part")
    cdef double coef = 1.0
    cdef double v = xx[0] ** pp
    cdef int k
    f[0] = v
    for k in range(1, n):
        coef *= pp - (k - 1)
        v /= xx[0]
        f[k] = coef * v
    _compose(xx, f, out, n)
    return _pack(out, n)


cdef int _atan(double* xx, double* out, int n) except -1:
    cdef double[MAXN] f
    cdef double u = xx[0]
    cdef double d = 1.0 / (1.0 + u * u)
    cdef double[5] tab
    tab[0] = catan(u)
    tab[1] = d
    tab[2] = -2.0 * u * d * d
    tab[3] = (6.0 * u * u - 2.0) * d * d * d
    tab[4] = (24.0 * u - 24.0 * u * u * u) * d * d * d * d
    if n > 5:
        raise ValueError("jet atan limited to order 4")
    cdef int i
    for i in range(n):
        f[i] = tab[i]
    _compose(xx, f, out, n)
    return 0


def atan(x):
    cdef double[MAXN] xx, out
    cdef int n = _unpack(x, xx)
    _atan(xx, out, n)
    return _pack(out, n)


def asin(x):
    cdef double[MAXN] xx, f, out
    cdef int n = _unpack(x, xx)
    cdef double u = xx[0]
    if u <= -1.0 or u >= 1.0:
        raise ValueError("jet asin requires |real part| < 1")
    cdef double d = 1.0 / csqrt(1.0 - u * u)
    cdef double d3 = d * d * d
    cdef double[5] tab
    tab[0] = casin(u)
    tab[1] = d
    tab[2] = u * d3
    tab[3] = (1.0 + 2.0 * u * u) * d3 * d * d
    tab[4] = (9.0 * u + 6.0 * u * u * u) * d3 * d3 * d
    if n > 5:
        raise ValueError("jet asin limited to order 4")
    cdef int i
    for i in range(n):
        f[i] = tab[i]
    _compose(xx, f, out, n)
    return _pack(out, n)


def atan2(y, x):
    cdef double[MAXN] yy, xx, q, out
    cdef int n = _unpack(y, yy)
    _unpack(x, xx)
    cdef int i
    if xx[0] == 0.0 and yy[0] == 0.0:
        raise ValueError("jet atan2 undefined at the origin")
    if fabs(xx[0]) >= fabs(yy[0]):
        _div(yy, xx, q, n)
        _atan(q, out, n)
    else:
        _div(xx, yy, q, n)
        _atan(q, out, n)
        for i in range(n):
            out[i] = -out[i]
    out[0] = catan2(yy[0], xx[0])
    return _pack(out, n)
