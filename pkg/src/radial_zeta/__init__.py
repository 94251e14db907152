"""Radial-convergence summation of the Riemann series and the winding quantity U_z."""
from .domination import BandReport, d_function, d_limit, n_threshold, scan_band
from .errors import *  # noqa: F401,F403
from .numerics import CriticalStripPoint, StripPoint, power_term, principal_arg_ratio
from .oracle import OracleResult, zeta_direct, zeta_eta
from .radial import (CenterResult, c0_closed_form, center_closed_form, center_geometric,
                     center_limit, circle_gap, delta_step, line_delta_n, pitch_angle)
from .series import PartialSumState, advance, partial_sum
from .winding import (UzEstimate, WindingState, advance_winding, sin_theta_induction,
                      theta_step, u_limit, u_sequence_value)
from .zeros import ZeroRecord, builtin_zeros, load_zeros

__version__ = "0.1.0"
