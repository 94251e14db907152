"""Riemann partial sums zeta_n(z) = sum_{j<=n} j^{-z} with compensated accumulation."""
from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from . import _kernels
from .numerics import StripPoint, as_strip_point


@dataclass(frozen=True)
class PartialSumState:
    """Running state of the partial sum at index n.

    ``zeta_n`` is the rounded value; ``comp`` is the compensation pair carried
    between steps so that incremental and one-shot summation agree bit for bit.
    """

    z: StripPoint
    n: int = 0
    zeta_n: complex = 0j
    comp: tuple = (0.0, 0.0, 0.0, 0.0)

    @classmethod
    def start(cls, z) -> "PartialSumState":
        return cls(as_strip_point(z))


def _advance_to(state: PartialSumState, n_stop: int) -> PartialSumState:
    sr, si, cr, ci = _kernels.accumulate(state.z.x, state.z.y, state.n + 1, n_stop + 1, *state.comp)
    return replace(state, n=n_stop, zeta_n=complex(sr + cr, si + ci), comp=(sr, si, cr, ci))


def advance(state: PartialSumState, steps: int = 1) -> PartialSumState:
    """zeta_{n+steps} from zeta_n."""
    if steps < 0:
        raise ValueError("steps must be non-negative")
    return _advance_to(state, state.n + steps)


def partial_sum(z, n: int) -> complex:
    """zeta_n(z); zeta_0 = 0."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return _advance_to(PartialSumState.start(z), n).zeta_n


def partial_sums(z, n_max: int) -> np.ndarray:
    """All of zeta_0 .. zeta_{n_max} as a complex array indexed by n."""
    p = as_strip_point(z)
    return _kernels.partial_sums(p.x, p.y, int(n_max))
