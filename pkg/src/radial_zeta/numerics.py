"""Domain-gated argument types and the shared complex helpers."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import _kernels
from .errors import DomainError, NearZeroOperand

EPS_MIN = _kernels.EPS_MIN


@dataclass(frozen=True)
class StripPoint:
    """z = x + iy with x > 0 and y != 0."""

    x: float
    y: float

    def __post_init__(self):
        x, y = float(self.x), float(self.y)
        if not (math.isfinite(x) and math.isfinite(y)):
            raise DomainError(f"z must be finite, got x={x!r}, y={y!r}")
        if not x > 0.0:
            raise DomainError(f"requires x > 0 (Re z > 0), got x={x!r}")
        if y == 0.0:
            raise DomainError("requires y != 0 (Im z != 0)")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)

    def conjugate(self):
        return type(self)(self.x, -self.y)

    def __complex__(self):
        return self.z


@dataclass(frozen=True)
class CriticalStripPoint(StripPoint):
    """A StripPoint with 0 < x < 1."""

    def __post_init__(self):
        super().__post_init__()
        if not self.x < 1.0:
            raise DomainError(f"requires 0 < x < 1 (critical strip), got x={self.x!r}")


def as_strip_point(z) -> StripPoint:
    if isinstance(z, StripPoint):
        return z
    z = complex(z)
    return StripPoint(z.real, z.imag)


def as_critical_point(z) -> CriticalStripPoint:
    if isinstance(z, CriticalStripPoint):
        return z
    z = complex(z)
    return CriticalStripPoint(z.real, z.imag)


def check_finite(value: complex, what: str = "value") -> complex:
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise ArithmeticError(f"non-finite {what}: {value!r}")
    return value


def power_term(n: int, z) -> complex:
    """n^{-z}, evaluated exactly as the summation kernels do."""
    if n < 1:
        raise DomainError(f"power_term requires n >= 1, got {n}")
    p = as_strip_point(z)
    re, im = _kernels.term(p.x, p.y, n)
    return complex(re, im)


def principal_arg_ratio(a: complex, b: complex, eps_min: float = EPS_MIN) -> float:
    """arg(b / a) in (-pi, pi]."""
    if abs(a) <= eps_min or abs(b) <= eps_min:
        raise NearZeroOperand(f"argument ratio undefined: |a|={abs(a):.3g}, |b|={abs(b):.3g}")
    a, b = complex(a) / abs(a), complex(b) / abs(b)
    # b * conj(a) has the same argument as b / a
    angle = math.atan2(b.imag * a.real - b.real * a.imag, b.real * a.real + b.imag * a.imag)
    return math.pi if angle == -math.pi else angle


def circle_distance(a: float, b: float) -> float:
    """Distance between two angles on the unit circle, in [0, pi]."""
    d = math.fmod(abs(a - b), 2 * math.pi)
    return min(d, 2 * math.pi - d)


def unit(angle: float) -> complex:
    return cmath.exp(1j * angle)
