import cmath
import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from radial_zeta import (c0_closed_form, center_closed_form, center_geometric, center_limit,
                         circle_gap, delta_step, line_delta_n, partial_sum, pitch_angle, zeta_eta)
from radial_zeta.errors import BudgetExceeded, DegenerateSystem, SingularPitch, SingularStep, SingularTangent
from radial_zeta.radial import (center_defined, center_telescoped, circle_gaps, det_closed_form,
                                intersection_system, tail_bound)
from radial_zeta.series import partial_sums

from .conftest import ZERO_1, strip_points

FOUR_POINTS = [complex(0.5, -2), complex(1, -2), complex(2, 1), complex(0.5, -ZERO_1)]


def test_pitch_examples():
    assert pitch_angle(1 + 2j) == pytest.approx(math.pi / 2, abs=1e-15)
    assert pitch_angle(1 - 2j) == pytest.approx(3 * math.pi / 2, abs=1e-15)
    # 3 pi/2 + arctan(1/6), 40-digit mpmath
    assert pitch_angle(0.5 - 3j) == pytest.approx(4.877537657799316695973093, abs=1e-15)


@given(strip_points())
def test_pitch_range(z):
    a = pitch_angle(z)
    if z.imag > 0:
        assert 0 < a < math.pi
    else:
        assert math.pi < a < 2 * math.pi
    assert pitch_angle(z.conjugate()) == pytest.approx(2 * math.pi - a, abs=1e-14)


def test_line_delta_n():
    z = complex(0.5, -2.0)
    assert line_delta_n(z, 5, 0.0) == partial_sum(z, 5)
    p, q = line_delta_n(z, 5, -0.7), line_delta_n(z, 5, 1.9)
    direction = pitch_angle(z) - z.imag * math.log(6)
    assert math.sin(cmath.phase(q - p) - direction) == pytest.approx(0.0, abs=1e-12)
    # Delta_0 is anchored at zeta_0 = 0
    assert line_delta_n(1 - 2j, 0, 0.0) == 0
    assert abs(line_delta_n(1 - 2j, 0, 1.0)) == pytest.approx(1.0)


@given(strip_points(y_max=40.0), st.integers(0, 300))
def test_determinant_matches_closed_form(z, n):
    A, _ = intersection_system(z, n)
    det = A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0]
    ref = det_closed_form(z, n)
    assume(abs(ref) > 1e-6 * ((n + 1) * (n + 2)) ** (-z.real))
    assert det == pytest.approx(ref, rel=1e-12)


def test_center_geometric_high_precision():
    # intersection of Delta_7 and Delta_8 solved at 50 digits with mpmath
    expected = complex(0.5133514169752761268961035, 0.4684571052310301486854082)
    assert abs(center_geometric(0.5 - 2j, 7) - expected) < 1e-14


@pytest.mark.parametrize("z", [1 - 2j, 0.5 - 2j, 2 + 1j, 0.3 + 7j])
def test_c0_routes(z):
    assert abs(c0_closed_form(z) - center_geometric(z, 0)) < 1e-12
    assert abs(c0_closed_form(z.conjugate()) - c0_closed_form(z).conjugate()) < 1e-15


def test_c0_singular():
    with pytest.raises(SingularPitch):
        c0_closed_form(complex(0.5, math.pi / math.log(2)))


@pytest.mark.parametrize("z", FOUR_POINTS + [0.8 - 5j, 0.2 + 30j])
def test_cross_route_equality(z):
    zs = partial_sums(z, 1001)
    for n in [0, 1, 2, 3, 10, 57, 100, 500, 1000]:
        g = center_geometric(z, n)
        c = center_closed_form(z, n, zeta_N=complex(zs[n]))
        assert abs(g - c) <= 1e-10 * (1 + abs(c)), n


@given(strip_points(y_max=40.0), st.integers(0, 200))
def test_cross_route_property(z, n):
    try:
        c = center_closed_form(z, n)
    except SingularTangent:
        assume(False)
    tb = math.tan(z.imag * math.log1p(1 / (n + 1)))
    assume(abs(tb) > 1e-6)
    assert abs(center_geometric(z, n) - c) <= 1e-9 * (1 + abs(c))


@given(strip_points(y_max=40.0), st.integers(0, 200))
def test_center_conjugation(z, n):
    try:
        c = center_closed_form(z, n)
    except SingularTangent:
        assume(False)
    assert abs(center_closed_form(z.conjugate(), n) - c.conjugate()) <= 1e-12 * (1 + abs(c))
    g = center_geometric(z, n)
    assert abs(center_geometric(z.conjugate(), n) - g.conjugate()) <= 1e-12 * (1 + abs(g))


@given(strip_points(y_max=40.0), st.integers(1, 200))
def test_delta_is_center_difference(z, n):
    try:
        d = delta_step(z, n)
        a, b = center_closed_form(z, n), center_closed_form(z, n - 1)
    except (SingularStep, SingularTangent):
        assume(False)
    assume(abs(math.sin(z.imag * math.log1p(1 / n))) > 1e-6)
    assume(abs(math.tan(z.imag * math.log1p(1 / (n + 1)))) > 1e-6)
    assert abs(d - (a - b)) <= 1e-9 * (1 + abs(a) + abs(b))
    assert abs(delta_step(z.conjugate(), n) - d.conjugate()) <= 1e-12 * (1 + abs(d))


def test_delta_singular_guard():
    # y ln 2 = pi makes sin(y ln((n+1)/n)) vanish at n = 1
    with pytest.raises(SingularStep):
        delta_step(complex(0.5, math.pi / math.log(2)), 1)


def test_telescoping_bridges_undefined_centers():
    # y ln 2 = pi: Delta_0 is parallel to Delta_1, so c_0 does not exist
    z = complex(0.5, math.pi / math.log(2))
    assert not center_defined(z, 0)
    with pytest.raises(DegenerateSystem):
        center_geometric(z, 0)
    assert abs(center_telescoped(z, 50) - center_closed_form(z, 50)) < 1e-10


def test_telescoping_identity():
    z = complex(0.5, -2.0)
    assert abs(center_telescoped(z, 1000) - center_closed_form(z, 1000)) < 1e-10


def test_step_asymptotics():
    n = 100_000
    z = complex(0.5, -2.0)
    ratio = abs(delta_step(z, n)) * n ** (z.real + 1) * 2 * abs(1 - z) / abs(z) ** 2
    assert ratio == pytest.approx(1.0, rel=0.01)
    z = complex(1.0, -2.0)
    assert abs(delta_step(z, n)) * 2 * n**2 == pytest.approx(abs(z.imag + 1 / z.imag), rel=0.01)


def test_closed_form_vs_oracle():
    z = 2 + 1j
    assert abs(center_closed_form(z, 100_000) - zeta_eta(z).value) < 1e-5


def test_tail_law_slope():
    z = complex(0.5, -2.0)
    ref = zeta_eta(z).value
    zs = partial_sums(z, 1_000_000)
    ns = np.unique(np.round(np.geomspace(1e3, 1e6, 25)).astype(int))
    errs = [abs(center_closed_form(z, int(n), zeta_N=complex(zs[n])) - ref) for n in ns]
    slope = np.polyfit(np.log(ns), np.log(errs), 1)[0]
    assert slope == pytest.approx(-z.real, abs=0.1)


def test_center_limit_reaches_tol():
    z = 2 + 1j
    res = center_limit(z, 1e-6)
    assert res.tail_bound <= 1e-6
    assert abs(res.center - zeta_eta(z).value) < 1e-5
    conj = center_limit(z.conjugate(), 1e-6)
    assert conj.n_used == res.n_used
    assert abs(conj.center - res.center.conjugate()) < 1e-14


def test_center_limit_budget(first_zero):
    with pytest.raises(BudgetExceeded) as info:
        center_limit(first_zero, 1e-4, n_max=10**7)
    res = info.value.result
    assert res.n_used == 10**7
    assert res.tail_bound == pytest.approx(tail_bound(first_zero, 10**7))
    assert abs(res.center) < 10 * 1e-4


def test_circle_radius_and_gap():
    z = complex(1.0, -2.0)
    zs = partial_sums(z, 100_001)
    n = 100_000
    radius = abs(center_closed_form(z, n, zeta_N=complex(zs[n])) - zs[n])
    assert radius == pytest.approx(0.5, rel=1e-3)
    assert abs(center_geometric(z, n) - zs[n]) == pytest.approx(0.5, rel=1e-3)
    gaps = circle_gaps(z, 1000, 10_000)
    assert gaps.max() < 1e-2
    assert circle_gap(z, 1000) == pytest.approx(gaps[0], abs=1e-15)


@pytest.mark.parametrize("z", [0.5 - 2j, 2 + 1j, 0.8 - 5j])
def test_general_gap_law(z):
    n = 100_000
    zs = partial_sums(z, n)
    gap = abs(center_closed_form(z, n, zeta_N=complex(zs[n])) - zs[n])
    assert gap * abs(1 - z) * n ** (z.real - 1) == pytest.approx(1.0, rel=0.02)
