"""Finite-difference checks of the differentiability claims, and spiral data.

All decay laws here are empirical fits, not certificates.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .domination import n_threshold
from .errors import DomainError, SingularTangent
from .numerics import StripPoint, as_strip_point, power_term
from .radial import GUARD, center_closed_form, delta_step
from .series import partial_sums


def jacobian_fd(f, point, h: float) -> np.ndarray:
    """Central-difference Jacobian of a plane map (x, y) -> complex.

    Returns [[du/dx, du/dy], [dv/dx, dv/dy]] with f = u + iv.
    """
    if not h > 0:
        raise ValueError("h must be positive")
    x, y = point
    fx = (complex(f(x + h, y)) - complex(f(x - h, y))) / (2 * h)
    fy = (complex(f(x, y + h)) - complex(f(x, y - h))) / (2 * h)
    return np.array([[fx.real, fy.real], [fx.imag, fy.imag]])


def cr_defects(J: np.ndarray) -> tuple[float, float]:
    """|u_x - v_y| and |u_y + v_x|; both vanish for a holomorphic map."""
    return abs(J[0, 0] - J[1, 1]), abs(J[0, 1] + J[1, 0])


def r_term(x: float, y: float, n: int) -> complex:
    """r_n = g_n f_n: c_n - zeta_n, with g_n = (n+1)^{-z} holomorphic and
    f_n = (1 - x - y / tan(y ln((n+2)/(n+1)))) / (1 - z) not."""
    z = complex(x, y)
    tb = math.tan(y * math.log1p(1.0 / (n + 1)))
    if abs(tb) < GUARD:
        raise SingularTangent(f"tan vanishes at n={n}")
    return power_term(n + 1, StripPoint(x, y)) * (1.0 - x - y / tb) / (1.0 - z)


@dataclass(frozen=True)
class CrReport:
    x: float
    y: float
    n: int
    h: float
    res1: float
    res2: float
    predicted: float

    def to_dict(self) -> dict:
        return asdict(self)


def cr_residual(z, n: int, h: float | None = None) -> CrReport:
    """Cauchy-Riemann defects of r_n at z, with the leading size
    (n+1)^{-x} |(1-x)/(1-z)| quoted for comparison."""
    p = as_strip_point(z)
    if n <= n_threshold(abs(p.y)):
        raise DomainError(f"n={n} must exceed n_threshold(|y|)={n_threshold(abs(p.y))}")
    if h is None:
        h = 1e-6 * (1.0 + abs(p.z))
    J = jacobian_fd(lambda x, y: r_term(x, y, n), (p.x, p.y), h)
    res1, res2 = cr_defects(J)
    predicted = (n + 1.0) ** (-p.x) * abs((1.0 - p.x) / (1.0 - p.z))
    return CrReport(p.x, p.y, n, h, res1, res2, predicted)


def log_grid(n_lo: int, n_hi: int, points: int) -> np.ndarray:
    return np.unique(np.round(np.geomspace(n_lo, n_hi, points)).astype(np.int64))


def loglog_slope(ns, values) -> float:
    return float(np.polyfit(np.log(np.asarray(ns, float)), np.log(np.asarray(values, float)), 1)[0])


def cr_decay(z, n_lo: int = 1_000, n_hi: int = 100_000, points: int = 400) -> dict:
    """Log-log slope of res1 (and res2, and their modulus) against n.

    res1 alone oscillates with the phase of (n+1)^{-iy}; a dense grid keeps the
    fitted slope stable.
    """
    p = as_strip_point(z)
    reports = [cr_residual(p, int(n)) for n in log_grid(n_lo, n_hi, points)]
    ns = [r.n for r in reports]
    res1 = [r.res1 for r in reports]
    res2 = [r.res2 for r in reports]
    mod = np.hypot(res1, res2)
    return {
        "x": p.x, "y": p.y, "n_lo": n_lo, "n_hi": n_hi,
        "exponent_res1": loglog_slope(ns, res1),
        "exponent_res2": loglog_slope(ns, res2),
        "exponent_modulus": loglog_slope(ns, mod),
        "rows": [r.to_dict() for r in reports],
    }


def delta_jacobian_decay(z, n_lo: int = 100, n_hi: int = 10_000, points: int = 60,
                         h: float | None = None) -> dict:
    """||J_{delta_n}||_inf against the envelope ln(n) / n^{1+x}."""
    p = as_strip_point(z)
    if h is None:
        h = 1e-5 * (1.0 + abs(p.z))
    rows = []
    for n in log_grid(n_lo, n_hi, points):
        n = int(n)
        J = jacobian_fd(lambda x, y: delta_step(complex(x, y), n), (p.x, p.y), h)
        norm = float(np.max(np.sum(np.abs(J), axis=1)))
        envelope = math.log(n) / n ** (1.0 + p.x)
        rows.append({"n": n, "jacobian_norm": norm, "envelope": envelope, "ratio": norm / envelope})
    ratios = [r["ratio"] for r in rows]
    return {"x": p.x, "y": p.y, "rows": rows,
            "ratio_min": min(ratios), "ratio_max": max(ratios)}


SPIRAL_COLUMNS = ["n", "re_zeta", "im_zeta", "re_center", "im_center"]


def spiral_export(z, n_max: int) -> list[tuple]:
    """Rows (n, Re zeta_n, Im zeta_n, Re c_n, Im c_n) for n = 0..n_max.

    Where the closed form for c_n is singular, c_{n+1} is reported instead.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    p = as_strip_point(z)
    zs = partial_sums(p, n_max + 2)
    rows = []
    for n in range(n_max + 1):
        m = n
        while True:
            try:
                c = center_closed_form(p, m, zeta_N=complex(zs[m]))
                break
            except SingularTangent:
                m += 1
        rows.append((n, float(zs[n].real), float(zs[n].imag), c.real, c.imag))
    return rows
