"""Pure Python kernels for truncated jet arithmetic.

A jet of order n is represented by a tuple of n + 1 Taylor coefficients
(c0, c1, ..., cn), i.e. c_k = f^(k)(t0) / k!.  All kernels assume both
operands share the same length; the MultiDual wrapper enforces that.

The compiled module mdkin._jet_cy exposes the same API.  Coefficient 0 of
every kernel is computed with exactly the same floating point operations
a plain scalar evaluation would use, so lifting a formula over jets
reproduces the scalar result bit for bit in coefficient 0.
"""

import math

_FACT = (1.0, 1.0, 2.0, 6.0, 24.0, 120.0, 720.0)


def add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def neg(a):
    return tuple(-x for x in a)


def scale(a, s):
    return tuple(x * s for x in a)


def mul(a, b):
    n = len(a)
    out = [0.0] * n
    for k in range(n):
        acc = 0.0
        for i in range(k + 1):
            acc += a[i] * b[k - i]
        out[k] = acc
    out[0] = a[0] * b[0]
    return tuple(out)


def div(a, b):
    """Jet long division; coefficient 0 is a[0] / b[0] exactly."""
    if b[0] == 0.0:
        raise ZeroDivisionError("jet division by a jet with zero real part")
    n = len(a)
    out = [0.0] * n
    for k in range(n):
        acc = a[k]
        for i in range(k):
            acc -= out[i] * b[k - i]
        out[k] = acc / b[0]
    return tuple(out)


def compose(x, fders):
    """Jet of f(x) from the derivatives fders[k] = f^(k)(x[0]), k = 0..n."""
    n = len(x)
    delta = (0.0,) + x[1:]
    out = [0.0] * n
    out[0] = fders[n - 1] / _FACT[n - 1]
    for k in range(n - 2, -1, -1):
        nxt = [0.0] * n
        for i in range(n):
            if out[i] == 0.0:
                continue
            for j in range(1, n - i):
                nxt[i + j] += out[i] * delta[j]
        nxt[0] += fders[k] / _FACT[k]
        out = nxt
    out[0] = fders[0]
    return tuple(out)


def sin(x):
    s, c = math.sin(x[0]), math.cos(x[0])
    return compose(x, (s, c, -s, -c, s, c, -s)[: len(x)])


def cos(x):
    s, c = math.sin(x[0]), math.cos(x[0])
    return compose(x, (c, -s, -c, s, c, -s, -c)[: len(x)])


def tan(x):
    return div(sin(x), cos(x))


def exp(x):
    e = math.exp(x[0])
    return compose(x, (e,) * len(x))


def sqrt(x):
    if x[0] <= 0.0:
        raise ValueError("jet sqrt requires a positive real part")
    r = math.sqrt(x[0])
    ders = [r]
    # d^k x**0.5 = 0.5 * (0.5-1) * ... * (0.5-k+1) * x**(0.5-k)
    coef = 1.0
    p = r
    for k in range(1, len(x)):
        coef *= 0.5 - (k - 1)
        p /= x[0]
        ders.append(coef * p)
    return compose(x, ders)


def powf(x, p):
    """Jet of x**p for a real exponent p; requires a positive real part."""
    if x[0] <= 0.0:
        raise ValueError("jet power requires a positive real part")
    ders = [x[0] ** p]
    coef = 1.0
    v = ders[0]
    for k in range(1, len(x)):
        coef *= p - (k - 1)
        v /= x[0]
        ders.append(coef * v)
    return compose(x, ders)


def atan(x):
    u = x[0]
    d = 1.0 / (1.0 + u * u)
    ders = [math.atan(u), d, -2.0 * u * d * d,
            (6.0 * u * u - 2.0) * d * d * d,
            (24.0 * u - 24.0 * u * u * u) * d * d * d * d][: len(x)]
    return compose(x, ders)


def asin(x):
    u = x[0]
    if not -1.0 < u < 1.0:
        raise ValueError("jet asin requires |real part| < 1")
    d = 1.0 / math.sqrt(1.0 - u * u)
    d3 = d * d * d
    ders = [math.asin(u), d, u * d3,
            (1.0 + 2.0 * u * u) * d3 * d * d,
            (9.0 * u + 6.0 * u * u * u) * d3 * d3 * d][: len(x)]
    return compose(x, ders)


def atan2(y, x):
    """Jet of atan2(y, x); real part follows math.atan2 branch cuts."""
    if x[0] == 0.0 and y[0] == 0.0:
        raise ValueError("jet atan2 undefined at the origin")
    # Away from the real part, atan2(y, x) differs from atan(y/x) (or from
    # -atan(x/y)) only by a constant, so the higher coefficients of the
    # better conditioned quotient are the ones we want.
    if abs(x[0]) >= abs(y[0]):
        out = list(atan(div(y, x)))
    else:
        out = [-c for c in atan(div(x, y))]
    out[0] = math.atan2(y[0], x[0])
    return tuple(out)
