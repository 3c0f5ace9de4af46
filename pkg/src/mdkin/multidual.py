"""Multidual (truncated jet) scalars for forward automatic differentiation.

A MultiDual of order n carries the Taylor coefficients of a function of a
single parameter: coeffs[k] = f^(k)(t0) / k!.  The nilpotent unit eps
satisfies eps**(n+1) == 0, so arithmetic on MultiDual values propagates
derivatives up to order n through any composition of the lifted
operations.

Two interchangeable kernel backends exist: the compiled mdkin._jet_cy
extension and the pure Python mdkin._jet_pure module.  The compiled one
is preferred when importable; set MDKIN_PURE=1 in the environment to
force the fallback.
"""

from __future__ import annotations

import math
import os
from typing import Iterable, Sequence

from . import _jet_pure

if os.environ.get("MDKIN_PURE"):
    _kernel = _jet_pure
else:
    try:
        from . import _jet_cy as _kernel  # type: ignore[no-redef]
    except ImportError:
        _kernel = _jet_pure

#: Name of the active kernel backend, "compiled" or "pure".
BACKEND = "compiled" if _kernel is not _jet_pure else "pure"

_FACT = (1.0, 1.0, 2.0, 6.0, 24.0, 120.0, 720.0)

DEFAULT_ORDER = 3
# atan/asin kernels carry derivative tables up to order 4.
MAX_ORDER = 4


class LiftDomainError(ValueError):
    """A lifted function was evaluated outside its smooth domain."""


class NotInvertibleError(ZeroDivisionError):
    """Division by a MultiDual whose real part is zero."""


class MultiDual:
    """Truncated jet scalar; immutable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[float]):
        cs = tuple(float(c) for c in coeffs)
        if not 1 <= len(cs) <= MAX_ORDER + 1:
            raise ValueError(f"jet order must be in [0, {MAX_ORDER}]")
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("MultiDual is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def constant(cls, value: float, order: int = DEFAULT_ORDER) -> "MultiDual":
        return cls((float(value),) + (0.0,) * order)

    @classmethod
    def variable(cls, value: float, order: int = DEFAULT_ORDER) -> "MultiDual":
        """Jet of the identity map t -> t at t0 = value."""
        c = [float(value)] + [0.0] * order
        if order >= 1:
            c[1] = 1.0
        return cls(c)

    @classmethod
    def from_derivatives(cls, value: float,
                         derivatives: Sequence[float]) -> "MultiDual":
        """Build a jet from raw derivatives f', f'', ... (not scaled)."""
        c = [float(value)]
        for k, d in enumerate(derivatives, start=1):
            c.append(float(d) / _FACT[k])
        return cls(c)

    # -- inspection ----------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def real(self) -> float:
        return self.coeffs[0]

    def derivative(self, k: int) -> float:
        """The k-th derivative carried by this jet (k = 0 is the value)."""
        if not 0 <= k <= self.order:
            raise ValueError(f"jet of order {self.order} has no derivative {k}")
        return self.coeffs[k] * _FACT[k]

    def derivatives(self) -> tuple[float, ...]:
        return tuple(c * _FACT[k] for k, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        return f"MultiDual({list(self.coeffs)!r})"

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiDual):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, float)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other) -> tuple[float, ...] | None:
        if isinstance(other, MultiDual):
            if len(other.coeffs) != len(self.coeffs):
                raise ValueError("mixed jet orders")
            return other.coeffs
        if isinstance(other, (int, float)):
            return (float(other),) + (0.0,) * self.order
        return None

    def __add__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return MultiDual(_kernel.add(self.coeffs, oc))

    __radd__ = __add__

    def __sub__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return MultiDual(_kernel.sub(self.coeffs, oc))

    def __rsub__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return MultiDual(_kernel.sub(oc, self.coeffs))

    def __neg__(self):
        return MultiDual(_kernel.neg(self.coeffs))

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return MultiDual(_kernel.scale(self.coeffs, float(other)))
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return MultiDual(_kernel.mul(self.coeffs, oc))

    __rmul__ = __mul__

    def __truediv__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        if oc[0] == 0.0:
            raise NotInvertibleError(
                "cannot divide by a MultiDual with zero real part")
        return MultiDual(_kernel.div(self.coeffs, oc))

    def __rtruediv__(self, other):
        if not isinstance(other, (int, float)):
            return NotImplemented
        if self.coeffs[0] == 0.0:
            raise NotInvertibleError(
                "cannot divide by a MultiDual with zero real part")
        num = (float(other),) + (0.0,) * self.order
        return MultiDual(_kernel.div(num, self.coeffs))

    def __pow__(self, p):
        if isinstance(p, int):
            if p < 0:
                return (1.0 / self) ** (-p)
            out = MultiDual.constant(1.0, self.order)
            base = self
            k = p
            while k:
                if k & 1:
                    out = out * base
                base = base * base
                k >>= 1
            return out
        if isinstance(p, float):
            if p == 0.5:
                return sqrt(self)
            if p.is_integer():
                return self ** int(p)
            try:
                return MultiDual(_kernel.powf(self.coeffs, p))
            except ValueError as exc:
                raise LiftDomainError(str(exc)) from None
        return NotImplemented


def _lift1(name):
    kfun = getattr(_kernel, name)
    mfun = getattr(math, name)

    def fun(x):
        if isinstance(x, MultiDual):
            try:
                return MultiDual(kfun(x.coeffs))
            except ValueError as exc:
                raise LiftDomainError(str(exc)) from None
        return mfun(x)

    fun.__name__ = name
    fun.__doc__ = f"{name} lifted over MultiDual; plain math.{name} on floats."
    return fun


sin = _lift1("sin")
cos = _lift1("cos")
tan = _lift1("tan")
exp = _lift1("exp")
sqrt = _lift1("sqrt")
atan = _lift1("atan")
asin = _lift1("asin")


def atan2(y, x):
    """atan2 lifted over MultiDual; plain math.atan2 on floats."""
    ymd = isinstance(y, MultiDual)
    xmd = isinstance(x, MultiDual)
    if not (ymd or xmd):
        return math.atan2(y, x)
    if ymd and not xmd:
        x = MultiDual.constant(x, y.order)
    elif xmd and not ymd:
        y = MultiDual.constant(y, x.order)
    try:
        return MultiDual(_kernel.atan2(y.coeffs, x.coeffs))
    except ValueError as exc:
        raise LiftDomainError(str(exc)) from None
