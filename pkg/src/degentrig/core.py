"""Generalized falling factorials and degenerate exponentials.

On the real branch ``1 + lam*t > 0`` the degenerate exponential has the
closed form ``(1 + lam*t) ** (x/lam) = exp(x * omega(lam, t))`` where
``omega(lam, t) = log1p(lam*t) / lam`` is the degenerate frequency. Every
degenerate trigonometric function reduces to its classical counterpart at
the angle ``x * omega``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import NamedTuple

from ._backend import kernels
from .errors import DomainError

# below this |lam*a| omega is summed from its alternating series
_OMEGA_SERIES_CUTOFF = 1e-4
# largest integer exponent for the exact-power path of degen_exp_closed
_MAX_INT_POWER = 64


def _check_finite(**values: float) -> None:
    for name, v in values.items():
        if not math.isfinite(v):
            raise DomainError(f"{name} must be finite, got {v!r}")


def falling_factorial(x: float, n: int, lam: float) -> float:
    """Return ``x (x - lam) (x - 2 lam) ... (x - (n-1) lam)``; 1 for ``n == 0``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return kernels.falling_factorial(float(x), int(n), float(lam))


def falling_factorial_complex(z: complex, n: int, lam: float) -> complex:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return kernels.falling_factorial_complex(complex(z), int(n), float(lam))


def omega(lam: float, a: float) -> float:
    """Degenerate frequency ``log e_lam(a) = ln(1 + lam*a) / lam``.

    Accurate as ``lam -> 0``: for ``|lam*a| < 1e-4`` the alternating series
    ``a - lam a^2/2 + lam^2 a^3/3 - ...`` is summed directly, otherwise
    ``log1p`` is used. Raises DomainError for ``lam == 0`` or
    ``1 + lam*a <= 0``.
    """
    lam = float(lam)
    a = float(a)
    _check_finite(lam=lam, a=a)
    if lam == 0.0:
        raise DomainError("lambda must be nonzero (the lambda -> 0 limit of omega is a)")
    u = lam * a
    if not 1.0 + u > 0.0:
        raise DomainError(f"1 + lambda*a must be positive, got {1.0 + u!r}")
    if abs(u) < _OMEGA_SERIES_CUTOFF:
        # a * (1 - u/2 + u^2/3 - ...)
        terms = []
        power = 1.0
        k = 1
        while abs(power) >= 1e-18:
            terms.append(power / k)
            power *= -u
            k += 1
        return a * math.fsum(terms)
    return math.log1p(u) / lam


@dataclass(frozen=True)
class DegenContext:
    """Validated ``(lambda, a)`` pair with its frequency ``omega``."""

    lam: float
    a: float
    omega: float = field(init=False)

    def __post_init__(self) -> None:
        lam = float(self.lam)
        a = float(self.a)
        _check_finite(lam=lam, a=a)
        if a == 0.0:
            raise DomainError("a must be nonzero")
        w = omega(lam, a)
        if not math.isfinite(w) or w == 0.0 or (w > 0) != (a > 0):
            raise DomainError(f"omega={w!r} is not finite, nonzero and of the sign of a")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "omega", w)

    def as_dict(self) -> dict:
        return {"lambda": self.lam, "a": self.a, "omega": self.omega}


def _integer_exponent(x: float, lam: float) -> int | None:
    k = x / lam
    if k == int(k) and 0 <= k <= _MAX_INT_POWER and k * lam == x:
        return int(k)
    return None


def degen_exp_closed(x: float, lam: float, t: float) -> float:
    """Closed form ``e_lam^x(t) = exp(x * omega(lam, t))``.

    When ``x/lam`` is a small nonnegative integer ``k`` the series is the
    polynomial ``(1 + lam*t)^k`` and is evaluated as such.
    """
    x = float(x)
    w = omega(lam, t)
    if x == 0.0:
        return 1.0
    k = _integer_exponent(x, float(lam))
    if k is not None:
        return (1.0 + lam * t) ** k
    return math.exp(x * w)


class SeriesValue(NamedTuple):
    value: float
    last_term_magnitude: float
    terminated: bool
    outside_radius: bool


def degen_exp_series(x: float, lam: float, t: float, max_terms: int = 500) -> SeriesValue:
    """Partial sum of ``sum_n (x)_{n,lam} t^n / n!`` up to index ``max_terms``.

    Stops early on exact termination (a zero factor) or once a term falls
    below 2^-53 of the running sum. ``outside_radius`` flags a
    non-terminating sum with ``|lam*t| >= 1``.
    """
    if max_terms < 1:
        raise ValueError("max_terms must be >= 1")
    x, lam, t = float(x), float(lam), float(t)
    _check_finite(x=x, lam=lam, t=t)
    value, last, terminated = kernels.exp_series(x, lam, t, int(max_terms))
    outside = (not terminated) and abs(lam * t) >= 1.0
    return SeriesValue(value, last, terminated, outside)


def degen_exp_complex(z: complex, lam: float, t: float) -> complex:
    """``e_lam^z(t) = exp(z * omega(lam, t))`` for a complex exponent."""
    return cmath.exp(complex(z) * omega(lam, t))
