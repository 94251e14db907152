"""Reference values of zeta(z), independent of the radial construction.

``zeta_eta`` goes through the alternating eta series,
zeta(z) = eta(z) / (1 - 2^{1-z}), accelerated with Borwein's binomially
weighted averaging of partial sums (error ~ (3 + sqrt 8)^{-n}).
``zeta_direct`` is the plain Dirichlet series for x > 1.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.special import loggamma

from . import _kernels
from .errors import DomainError, EtaPole

_RATE = math.log(3.0 + math.sqrt(8.0))
_EPS = np.finfo(float).eps
MAX_TERMS = 2000


@dataclass(frozen=True)
class OracleResult:
    value: complex
    terms_used: int
    est_error: float


def zeta_direct(z, N: int) -> OracleResult:
    """Partial sum to N; est_error = N^{1-x}/|z-1| + N^{-x} covers the tail."""
    z = complex(z)
    if not z.real > 1.0:
        raise DomainError(f"zeta_direct requires x > 1, got x={z.real!r}")
    if N < 1:
        raise ValueError("N must be >= 1")
    sr, si, cr, ci = _kernels.accumulate(z.real, z.imag, 1, N + 1, 0.0, 0.0, 0.0, 0.0)
    err = N ** (1.0 - z.real) / abs(z - 1.0) + N ** (-z.real)
    return OracleResult(complex(sr + cr, si + ci), N, err)


@functools.lru_cache(maxsize=None)
def borwein_weights(n: int) -> np.ndarray:
    """(d_n - d_k) / d_n for k = 0..n-1, rounded once from exact rationals."""
    d = []
    acc = Fraction(0)
    for i in range(n + 1):
        # n (n+i-1)! 4^i / ((n-i)! (2i)!)
        acc += Fraction(n * math.factorial(n + i - 1) * 4**i,
                        math.factorial(n - i) * math.factorial(2 * i))
        d.append(acc)
    dn = d[-1]
    return np.array([float((dn - dk) / dn) for dk in d[:-1]])


def _truncation(n: int, log_inv_gamma: float) -> float:
    # |error in eta| <= 3 (3 + sqrt 8)^{-n} / |Gamma(z)|
    return math.exp(math.log(3.0) - n * _RATE + log_inv_gamma)


def zeta_eta(z, tol: float = 1e-12) -> OracleResult:
    z = complex(z)
    if not z.real > 0.0:
        raise DomainError(f"zeta_eta requires x > 0, got x={z.real!r}")
    factor = 1.0 - 2.0 ** (1.0 - z)
    if abs(factor) <= 1e-12:
        raise EtaPole(f"1 - 2^(1-z) vanishes at z={z}; perturb y and retry")
    # 1/|Gamma| is only trusted where it is below 1; near the real axis with
    # small x the Gamma-weighted bound is too optimistic
    log_inv_gamma = max(0.0, -float(loggamma(z).real))
    log_tol = math.log(tol * abs(factor) / 2.0)
    n = max(4, math.ceil((math.log(3.0) + log_inv_gamma - log_tol) / _RATE))
    n = min(n, MAX_TERMS)

    w = borwein_weights(n)
    re = []
    im = []
    mags = []
    for k in range(n):
        tr, ti = _kernels.term(z.real, z.imag, k + 1)
        s = w[k] if k % 2 == 0 else -w[k]
        re.append(s * tr)
        im.append(s * ti)
        mags.append(w[k] * math.hypot(tr, ti))
    eta = complex(math.fsum(re), math.fsum(im))
    rounding = 8.0 * _EPS * math.fsum(mags)
    value = eta / factor
    # 1 - 2^{1-z} cancels near z = 1; its absolute rounding is a few eps
    err = (_truncation(n, log_inv_gamma) + rounding + 4.0 * _EPS * abs(value)) / abs(factor)
    return OracleResult(value, n, err)
