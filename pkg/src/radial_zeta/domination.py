"""The normalised step modulus d_{x,y}(n) and the band it settles into."""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass

import numpy as np

from . import _kernels
from .errors import SingularStep
from .numerics import as_strip_point

# ceil() of a value that should be an integer but carries rounding noise
_CEIL_SLACK = 1e-9


def d_function(x: float, y: float, n: int) -> float:
    """d_{x,y}(n); tends to (x^2 + y^2) / 2.

    |delta_step(z, n)| == d_function(x, y, n) / (n^{x+1} |1 - z|).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    value, status = _kernels.d_value(float(x), float(y), n)
    if status == _kernels.SINGULAR:
        raise SingularStep(f"trigonometric denominator vanishes at n={n} for y={y}")
    return value


def d_limit(x: float, y: float) -> float:
    return (x * x + y * y) / 2.0


def n_threshold(B: float) -> int:
    """Index n_B beyond which the sin/tan signs in d_{x,y} no longer flip for |y| <= B."""
    if not B > 0:
        raise ValueError(f"B must be positive, got {B}")
    u = math.expm1(math.pi / B)
    value = (1.0 - u) / u
    return max(0, math.ceil(value - _CEIL_SLACK * max(1.0, abs(value))))


@dataclass(frozen=True)
class BandReport:
    x: float
    y: float
    n_start: int
    n_max: int
    n_threshold: int
    n0_empirical: int
    band_lo: float
    band_hi: float
    violations_after_n0: int
    d_limit: float
    d_at_n_max: float
    limit_constant: float

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def scan_band(z, n_max: int, *, fit_window: int = 10_000) -> BandReport:
    """Scan d_{x,y}(n) from n_threshold(|y|)+1 to n_max against the open band
    ((x^2+y^2)/4, 3(x^2+y^2)/4).

    ``n0_empirical`` is one past the last index outside the band.
    ``limit_constant`` is max n |d(n) - limit| over [n0, min(n_max, fit_window)];
    beyond ~1e4 the rounding noise in d (growing like n^2 eps) swamps the 1/n law.
    """
    p = as_strip_point(z)
    x, y = p.x, p.y
    nb = n_threshold(abs(y))
    n_lo = nb + 1
    if n_max <= nb:
        raise ValueError(f"n_max={n_max} must exceed n_threshold(|y|)={nb}")
    r2 = x * x + y * y
    lo, hi = r2 / 4.0, 3.0 * r2 / 4.0
    d = _kernels.d_scan(x, y, n_lo, n_max)
    inside = (d > lo) & (d < hi)  # NaN (singular) counts as outside
    outside = np.flatnonzero(~inside)
    n0 = n_lo if outside.size == 0 else n_lo + int(outside[-1]) + 1
    violations = int(np.count_nonzero(~inside[n0 - n_lo:]))

    limit = d_limit(x, y)
    k_hi = min(n_max, max(fit_window, n0)) - n_lo + 1
    ns = np.arange(n0, n_lo + k_hi)
    tail = d[n0 - n_lo:k_hi]
    const = float(np.max(ns * np.abs(tail - limit))) if ns.size else math.nan
    return BandReport(
        x=x, y=y, n_start=n_lo, n_max=int(n_max), n_threshold=nb,
        n0_empirical=n0, band_lo=lo, band_hi=hi, violations_after_n0=violations,
        d_limit=limit, d_at_n_max=float(d[-1]), limit_constant=const,
    )


def scan_rectangle(a: float, A: float, b: float, B: float, n_max: int) -> dict:
    """Corner-sampling heuristic for a uniform n0 over [a, A] x [b, B].

    Scans the four corners and returns the largest empirical n0.  Nothing
    guarantees the interior is bounded by the corners; treat as a heuristic.
    """
    corners = [(a, b), (a, B), (A, b), (A, B)]
    reports = [scan_band(complex(cx, cy), n_max) for cx, cy in corners]
    return {
        "corners": [r.to_dict() for r in reports],
        "n0_max": max(r.n0_empirical for r in reports),
        "heuristic": True,
    }
