import math

import pytest
from hypothesis import settings
from hypothesis import strategies as st

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

ZERO_1 = 14.1347251417346937904572519835624766


def strip_points(x_min=0.05, x_max=3.0, y_max=60.0):
    """Strategy for StripPoint-compatible complex numbers with |y| >= 0.1."""
    xs = st.floats(x_min, x_max, allow_nan=False)
    ys = st.floats(0.1, y_max, allow_nan=False)
    signs = st.sampled_from([-1.0, 1.0])
    return st.builds(lambda x, y, s: complex(x, s * y), xs, ys, signs)


@pytest.fixture
def first_zero():
    return complex(0.5, -ZERO_1)


def rel_close(a, b, rel):
    return abs(a - b) <= rel * max(abs(a), abs(b), math.ulp(1.0))


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[key])
