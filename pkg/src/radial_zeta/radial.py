"""Radial convergence: lines through the partial sums at a fixed pitch, their
pairwise intersections c_n(z), the steps between them and the limit center.

Two independent routes to c_n are kept on purpose: the 2x2 line-intersection
solve (``center_geometric``) and the telescoped closed form
(``center_closed_form``).  Each is used to check the other.
"""
from __future__ import annotations

import cmath
import functools
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .domination import n_threshold
from .errors import (BudgetExceeded, DegenerateSystem, DomainError, SingularPitch,
                     SingularStep, SingularTangent)
from .numerics import as_strip_point, check_finite, power_term
from .series import PartialSumState, advance, partial_sum, partial_sums

GUARD = _kernels.SINGULAR_GUARD
TAIL_SAFETY = 4.0
DEFAULT_N_MAX = 10_000_000


def pitch_angle(z) -> float:
    """Constant angle alpha(z) at which the spiral of partial sums meets its radii.

    In (0, pi) for y > 0 and (pi, 2 pi) for y < 0; pi/2 or 3 pi/2 when x = 1.
    """
    p = as_strip_point(z)
    base = math.pi / 2 if p.y > 0 else 3 * math.pi / 2
    return base - math.atan((1.0 - p.x) / p.y)


def pitch_unit(z) -> complex:
    """e^{i alpha(z)} = (1 - conj z) / |1 - z|, exact under conjugation of z."""
    p = as_strip_point(z)
    w = complex(1.0 - p.x, p.y)
    return w / abs(w)


def _direction(p, n: int) -> complex:
    # e^{i alpha} / (n+1)^z: direction of the line through zeta_n
    return pitch_unit(p) * power_term(n + 1, p)


def center_defined(z, n: int) -> bool:
    """False when Delta_n and Delta_{n+1} are (numerically) parallel."""
    p = as_strip_point(z)
    return abs(math.sin(p.y * math.log1p(1.0 / (n + 1)))) >= GUARD


def line_delta_n(z, n: int, t: float, zeta_n: complex | None = None) -> complex:
    """Point of the line Delta_n(z) at parameter t; t = 0 gives zeta_n."""
    p = as_strip_point(z)
    if zeta_n is None:
        zeta_n = partial_sum(p, n)
    return zeta_n + t * _direction(p, n)


def intersection_system(z, n: int):
    """The 2x2 real system A_n [Re c, Im c]^T = B_n whose solution is c_n."""
    p = as_strip_point(z)
    state = advance(PartialSumState.start(p), n)
    zn = state.zeta_n
    zn1 = advance(state).zeta_n
    d1 = _direction(p, n)
    d2 = _direction(p, n + 1)
    A = np.array([[d1.imag, -d1.real], [d2.imag, -d2.real]])
    B = np.array([zn.real * d1.imag - zn.imag * d1.real,
                  zn1.real * d2.imag - zn1.imag * d2.real])
    return A, B


def det_closed_form(z, n: int) -> float:
    p = as_strip_point(z)
    return math.sin(-p.y * math.log1p(1.0 / (n + 1))) / ((n + 1.0) * (n + 2.0)) ** p.x


def center_geometric(z, n: int) -> complex:
    """c_n = Delta_n intersect Delta_{n+1}, by solving the 2x2 system."""
    A, B = intersection_system(z, n)
    det = A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0]
    # normalised determinant is sin of the angle between the two lines
    scale = math.hypot(A[0, 0], A[0, 1]) * math.hypot(A[1, 0], A[1, 1])
    if abs(det) < 1e-300 or abs(det) < GUARD * scale:
        raise DegenerateSystem(f"Delta_{n} and Delta_{n + 1} are parallel (det={det:.3g})")
    cx = (B[0] * A[1, 1] - A[0, 1] * B[1]) / det
    cy = (A[0, 0] * B[1] - A[1, 0] * B[0]) / det
    return check_finite(complex(cx, cy), "center")


def c0_closed_form(z) -> complex:
    p = as_strip_point(z)
    s = math.sin(p.y * math.log(2.0))
    if abs(s) < GUARD:
        raise SingularPitch(f"sin(y ln 2) = {s:.3g} at y={p.y}; use center_geometric(z, 0)")
    return 1.0 - (p.y * cmath.exp(-1j * p.y * math.log(2.0)) / s) / (1.0 - p.z)


def delta_step(z, n: int) -> complex:
    """delta_n = c_n - c_{n-1} from its closed expression.

    Modulus d_{x,y}(n) / (n^{x+1} |1 - z|), argument alpha(z) - y ln(n+1).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    p = as_strip_point(z)
    d, status = _kernels.d_value(p.x, p.y, n)
    if status == _kernels.SINGULAR:
        raise SingularStep(f"step formula singular at n={n}; difference center_geometric instead")
    modulus = d / (n ** (p.x + 1.0) * abs(1.0 - p.z))
    return modulus * pitch_unit(p) * cmath.exp(-1j * p.y * math.log(n + 1.0))


def _remainder(p, N: int) -> complex:
    # (N+1)^{-z} (1 - x - y / tan(y ln((N+2)/(N+1)))) / (1 - z)
    tb = math.tan(p.y * math.log1p(1.0 / (N + 1)))
    if abs(tb) < GUARD:
        raise SingularTangent(f"tan(y ln((N+2)/(N+1))) = {tb:.3g} at N={N}; bump N by one")
    return power_term(N + 1, p) * (1.0 - p.x - p.y / tb) / (1.0 - p.z)


def center_closed_form(z, N: int, zeta_N: complex | None = None) -> complex:
    """c_N = zeta_N + (N+1)^{-z} (1 - x - y / tan(y ln((N+2)/(N+1)))) / (1 - z)."""
    p = as_strip_point(z)
    rem = _remainder(p, N)
    if zeta_N is None:
        zeta_N = partial_sum(p, N)
    return check_finite(zeta_N + rem, "center")


def center_telescoped(z, N: int) -> complex:
    """c_0 + sum_{i=1..N} delta_i.

    Where c_i does not exist (parallel lines) the two steps on either side of
    it are replaced by one difference of geometric centers bridging over i.
    """
    p = as_strip_point(z)
    if not center_defined(p, N):
        raise SingularTangent(f"c_N undefined at N={N}; bump N by one")
    last = next(k for k in range(N + 1) if center_defined(p, k))
    total = c0_closed_form(p) if last == 0 else center_geometric(p, last)
    steps = []
    for i in range(last + 1, N + 1):
        if not center_defined(p, i):
            continue
        if last == i - 1:
            try:
                steps.append(delta_step(p, i))
            except SingularStep:
                steps.append(center_geometric(p, i) - center_geometric(p, i - 1))
        else:
            steps.append(center_geometric(p, i) - center_geometric(p, last))
        last = i
    return total + complex(math.fsum(s.real for s in steps), math.fsum(s.imag for s in steps))


def tail_bound(z, N: int, safety: float = TAIL_SAFETY) -> float:
    """safety * N^{-x} |z|^2 / (2 x |1 - z|), the integrated step-size asymptotic."""
    p = as_strip_point(z)
    return safety * N ** (-p.x) * abs(p.z) ** 2 / (2.0 * p.x * abs(1.0 - p.z))


@dataclass(frozen=True)
class CenterResult:
    center: complex
    n_used: int
    tail_bound: float


def _n_for_tol(p, tol: float, safety: float) -> float:
    # smallest N with tail_bound(N) <= tol, as a float (may be astronomically large)
    k = safety * abs(p.z) ** 2 / (2.0 * p.x * abs(1.0 - p.z) * tol)
    log_n = math.log(k) / p.x
    return math.inf if log_n > 700 else math.exp(log_n)


def center_limit(z, tol: float, n_max: int = DEFAULT_N_MAX, safety: float = TAIL_SAFETY) -> CenterResult:
    """c(z) = lim c_N at the smallest N whose tail bound is within ``tol``.

    Raises BudgetExceeded (carrying the n_max estimate) when that N exceeds
    ``n_max``.
    """
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    p = as_strip_point(z)
    n_start = max(1, n_threshold(abs(p.y)) + 1)
    wanted = _n_for_tol(p, tol, safety)
    over = wanted > n_max
    N = max(n_start, n_max if over else math.ceil(wanted))
    while True:
        try:
            rem = _remainder(p, N)
            break
        except SingularTangent:
            N += 1
    center = check_finite(partial_sum(p, N) + rem, "center")
    result = CenterResult(center, N, tail_bound(p, N, safety))
    if over:
        raise BudgetExceeded(
            f"tail bound {result.tail_bound:.3g} > tol {tol:.3g} at n_max={n_max}", result)
    return result


def center_best_effort(z, tol: float, n_max: int = DEFAULT_N_MAX) -> CenterResult:
    try:
        return center_limit(z, tol, n_max)
    except BudgetExceeded as exc:
        return exc.result


@functools.lru_cache(maxsize=64)
def _asymptotic_center(x: float, y: float) -> complex:
    return center_best_effort(complex(x, y), 1e-8, DEFAULT_N_MAX).center


def _check_unit_line(p):
    if abs(p.x - 1.0) > 1e-12:
        raise DomainError(f"circle_gap requires x = 1, got x={p.x!r}")


def circle_gap(z, n: int) -> float:
    """| |zeta_n - c(z)| - 1/|y| |: distance of zeta_n to the asymptotic circle (x = 1)."""
    p = as_strip_point(z)
    _check_unit_line(p)
    c = _asymptotic_center(p.x, p.y)
    return abs(abs(partial_sum(p, n) - c) - 1.0 / abs(p.y))


def circle_gaps(z, n_lo: int, n_hi: int) -> np.ndarray:
    """circle_gap for every n in [n_lo, n_hi], from one pass over the partial sums."""
    p = as_strip_point(z)
    _check_unit_line(p)
    c = _asymptotic_center(p.x, p.y)
    zs = partial_sums(p, n_hi)[n_lo:]
    return np.abs(np.abs(zs - c) - 1.0 / abs(p.y))
