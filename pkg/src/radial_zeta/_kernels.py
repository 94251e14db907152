"""Compiled inner loops.

Every hot loop in the package goes through this module, so it is the single
place that fixes the floating-point arithmetic (binary64, no fast-math, fixed
ascending order).  A higher-precision backend would replace these functions
and nothing else.
"""
import math

import numpy as np
from numba import njit

# Status codes returned by kernels that cannot raise.
OK = 0
NEAR_ZERO = 1
SINGULAR = 2

EPS_MIN = 1e-300
SINGULAR_GUARD = 1e-12


@njit(cache=True, nogil=True)
def two_sum(a, b):
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


@njit(cache=True, nogil=True)
def term(x, y, j):
    # j^{-z} = j^{-x} * (cos(y ln j) - i sin(y ln j)); pow keeps |j^{-z}| within an ulp
    lj = math.log(j)
    m = float(j) ** (-x)
    return m * math.cos(y * lj), -m * math.sin(y * lj)


@njit(cache=True, nogil=True)
def accumulate(x, y, start, stop, sr, si, cr, ci):
    """Add terms j = start .. stop-1 to the compensated pair (s, c)."""
    for j in range(start, stop):
        tr, ti = term(x, y, j)
        sr, er = two_sum(sr, tr)
        si, ei = two_sum(si, ti)
        cr += er
        ci += ei
    return sr, si, cr, ci


@njit(cache=True, nogil=True)
def partial_sums(x, y, n_max):
    """Array of zeta_0 .. zeta_{n_max} (index n holds zeta_n)."""
    out = np.empty(n_max + 1, dtype=np.complex128)
    out[0] = 0.0
    sr = si = cr = ci = 0.0
    for j in range(1, n_max + 1):
        tr, ti = term(x, y, j)
        sr, er = two_sum(sr, tr)
        si, ei = two_sum(si, ti)
        cr += er
        ci += ei
        out[j] = complex(sr + cr, si + ci)
    return out


@njit(cache=True, nogil=True)
def wind(x, y, n, n_stop, sr, si, cr, ci, ar, ac, flagged, near_zero_rel):
    """Advance the cumulated argument from step n to step n_stop.

    At step n the compensated pair holds zeta_{n+1} and (ar, ac) holds
    sum_{j=1..n} arg(zeta_{j+1} / zeta_j).  Returns the updated tuple plus a
    status code; on NEAR_ZERO the returned state is the last good one.
    """
    status = OK
    while n < n_stop:
        pr = sr + cr
        pi_ = si + ci
        tr, ti = term(x, y, n + 2)
        nsr, er = two_sum(sr, tr)
        nsi, ei = two_sum(si, ti)
        ncr = cr + er
        nci = ci + ei
        qr = nsr + ncr
        qi = nsi + nci
        mod_p = math.hypot(pr, pi_)
        mod_q = math.hypot(qr, qi)
        if mod_p <= EPS_MIN or mod_q <= EPS_MIN:
            status = NEAR_ZERO
            break
        if mod_q < near_zero_rel * (n + 1.0) ** (1.0 - x):
            flagged += 1
        # arg(q / p) on the principal branch
        theta = math.atan2(pr * qi - pi_ * qr, pr * qr + pi_ * qi)
        if theta == -math.pi:
            theta = math.pi
        ar, ea = two_sum(ar, theta)
        ac += ea
        sr, si, cr, ci = nsr, nsi, ncr, nci
        n += 1
    return n, sr, si, cr, ci, ar, ac, flagged, status


@njit(cache=True, nogil=True)
def d_value(x, y, n):
    """Normalised step modulus d_{x,y}(n); status SINGULAR on a trig pole."""
    a = y * math.log1p(1.0 / n)
    b = y * math.log1p(1.0 / (n + 1.0))
    sa = math.sin(a)
    tb = math.tan(b)
    if abs(sa) < SINGULAR_GUARD or abs(tb) < SINGULAR_GUARD:
        return math.nan, SINGULAR
    q = math.exp(-x * math.log1p(1.0 / n))
    return n * (y / sa - y * q / tb + (1.0 - x) * q), OK


@njit(cache=True, nogil=True)
def d_scan(x, y, n_lo, n_hi):
    """d_{x,y}(n) for n = n_lo .. n_hi inclusive (NaN where singular)."""
    out = np.empty(n_hi - n_lo + 1)
    for k in range(n_hi - n_lo + 1):
        out[k] = d_value(x, y, n_lo + k)[0]
    return out
