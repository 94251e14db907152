"""Cumulated argument of the partial sums and the winding quantity U_z.

Indexing: a state at step n holds zeta_{n+1} and
arg_sum = sum_{j=1..n} arg(zeta_{j+1} / zeta_j), so that
gamma_n = -y ln(n+1) - arg_sum and
U_n = (gamma_n + arctan(y / (1 - x))) / pi.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, replace

from . import _kernels
from .errors import NearZeroOperand, NumericalBreakdown
from .numerics import CriticalStripPoint, as_critical_point, circle_distance, principal_arg_ratio
from .radial import pitch_angle

NEAR_ZERO_REL = 1e-13
RESIDUAL_THRESHOLD = 0.1


@dataclass(frozen=True)
class WindingState:
    z: CriticalStripPoint
    n: int
    zeta: complex  # zeta_{n+1}
    arg_sum: float
    flagged_steps: int = 0
    comp: tuple = (1.0, 0.0, 0.0, 0.0, 0.0, 0.0)  # sr, si, cr, ci, ar, ac

    @classmethod
    def start(cls, z) -> "WindingState":
        return cls(as_critical_point(z), 0, 1 + 0j, 0.0)

    @property
    def gamma_n(self) -> float:
        return -self.z.y * math.log(self.n + 1.0) - self.arg_sum


def theta_step(zeta_n: complex, zeta_next: complex) -> float:
    """theta_n = arg(zeta_{n+1} / zeta_n), principal branch."""
    return principal_arg_ratio(zeta_n, zeta_next)


def advance_winding(state: WindingState, steps: int = 1) -> WindingState:
    """Advance by ``steps`` partial-sum terms, accumulating the step arguments.

    Steps whose new partial sum is below 1e-13 n^{1-x} in modulus are taken
    anyway and counted in ``flagged_steps``; a true underflow raises
    NearZeroOperand.
    """
    if steps < 0:
        raise ValueError("steps must be non-negative")
    n, sr, si, cr, ci, ar, ac, flagged, status = _kernels.wind(
        state.z.x, state.z.y, state.n, state.n + steps, *state.comp,
        state.flagged_steps, NEAR_ZERO_REL)
    if status == _kernels.NEAR_ZERO:
        raise NearZeroOperand(f"partial sum underflowed at n={n + 1} for z={state.z.z}")
    return replace(state, n=n, zeta=complex(sr + cr, si + ci), arg_sum=ar + ac,
                   flagged_steps=flagged, comp=(sr, si, cr, ci, ar, ac))


def winding_at(z, n: int) -> WindingState:
    return advance_winding(WindingState.start(z), n)


def u_sequence_value(state: WindingState) -> float:
    x, y = state.z.x, state.z.y
    return (state.gamma_n + math.atan(y / (1.0 - x))) / math.pi


def gamma_pitch_distance(state: WindingState, sign: int = 1) -> float:
    """Circle distance between gamma_n mod 2 pi and sign * pitch_angle(z)."""
    target = math.fmod(sign * pitch_angle(state.z), 2 * math.pi)
    return circle_distance(math.fmod(state.gamma_n, 2 * math.pi), target)


@dataclass(frozen=True)
class UzEstimate:
    value: float
    nearest_integer: int
    residual: float
    n_used: int
    converged: bool
    flagged_steps: int = 0
    drift: float = math.nan

    def to_dict(self) -> dict:
        return asdict(self)


def _estimate(value: float, n: int, flagged: int, converged: bool, drift: float) -> UzEstimate:
    k = round(value)
    return UzEstimate(value, int(k), abs(value - k), n, converged, flagged, drift)


def u_limit(z, n_max: int, residual_threshold: float = RESIDUAL_THRESHOLD) -> UzEstimate:
    """U sampled at n_max/2 and n_max.

    converged: both samples round to the same integer, both residuals are below
    ``residual_threshold`` and the samples differ by less than half of it.
    """
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    half = advance_winding(WindingState.start(z), n_max // 2)
    full = advance_winding(half, n_max - half.n)
    u_half, u_full = u_sequence_value(half), u_sequence_value(full)
    drift = abs(u_full - u_half)
    converged = (round(u_half) == round(u_full)
                 and abs(u_half - round(u_half)) < residual_threshold
                 and abs(u_full - round(u_full)) < residual_threshold
                 and drift < residual_threshold / 2)
    return _estimate(u_full, full.n, full.flagged_steps, converged, drift)


def sin_theta_induction(prev: WindingState, state: WindingState, sin_theta_n: float) -> float:
    """sin(theta_{n+1}) from gamma_{n-1}, gamma_n and sin(theta_n).

    ``prev`` is the state at step n-1 and ``state`` the one at step n.  Only
    used as an independent check on the direct argument computation.
    """
    if state.n != prev.n + 1 or state.n < 1:
        raise ValueError("need consecutive states at steps n-1 and n >= 1")
    x, y, n = state.z.x, state.z.y, state.n
    phi = -y * math.log1p(1.0 / (n + 1)) + state.gamma_n
    s_prev = math.sin(-y * math.log1p(1.0 / n) + prev.gamma_n)
    if sin_theta_n == 0.0:
        raise NumericalBreakdown(f"sin(theta_{n}) = 0")
    a = (n + 1.0) ** x
    b = (n + 2.0) ** x
    # |zeta_{n+1}| = s_prev / (a sin theta_n); radicand is |zeta_{n+2}|^2
    r = s_prev / (a * sin_theta_n)
    radicand = r * r + 1.0 / (b * b) + 2.0 * r / b * math.cos(phi)
    if radicand <= 1e-14:
        raise NumericalBreakdown(f"radicand {radicand:.3g} at n={n}: partial sum near the origin")
    return math.sin(phi) / (b * math.sqrt(radicand))
