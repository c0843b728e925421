import math

import numpy as np
import pytest
from scipy.special import lambertw as scipy_lambertw

from pitbounds.errors import ParameterError
from pitbounds.lambert import lambert_w, neg_wm1_exp, wm1_envelope


def bisect_newton_wm1(x: float) -> float:
    """Independent oracle for the minus-one branch: bisection then Newton."""
    lo, hi = -800.0, -1.0  # f > 0 at lo, f < 0 at hi for x in (-1/e, 0)
    f = lambda w: w * math.exp(w) - x
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    w = 0.5 * (lo + hi)
    for _ in range(10):
        ew = math.exp(w)
        w -= (w * ew - x) / (ew * (w + 1.0))
    return w


def test_trivial_points():
    assert lambert_w(math.e) == pytest.approx(1.0, abs=1e-15)
    assert lambert_w(-math.exp(-1.0), "minus_one") == pytest.approx(-1.0, abs=1e-12)
    assert lambert_w(0.0) == 0.0


def test_minus_one_against_oracle():
    for x in (-0.1, -0.05, -0.3, -1e-3, -1e-6):
        mine = lambert_w(x, "minus_one")
        assert mine == pytest.approx(bisect_newton_wm1(x), rel=1e-12)
        assert mine == pytest.approx(float(scipy_lambertw(x, -1).real), rel=1e-12)
        assert mine <= -1.0
    assert lambert_w(-0.1, "minus_one") == pytest.approx(-3.577152063957297, rel=1e-12)


def test_principal_against_scipy():
    for x in (-0.36, -0.2, -1e-8, 1e-8, 0.3, 1.0, 10.0, 1e5, 1e12):
        mine = lambert_w(x)
        assert mine == pytest.approx(float(scipy_lambertw(x).real), rel=1e-12)
        assert mine >= -1.0


def test_round_trip_residuals():
    # Log-uniform samples of the minus-one branch domain (-1/e, -1e-8).
    for u in np.logspace(-8, math.log10(math.exp(-1.0) * (1 - 1e-12)), 400):
        x = float(-u)
        w = lambert_w(x, "minus_one")
        assert abs(w * math.exp(w) - x) <= 1e-12 * max(abs(x), 1e-300)
    for x in np.logspace(-10, 10, 400):
        w = lambert_w(float(x))
        assert abs(w * math.exp(w) - x) <= 1e-12 * max(abs(x), 1e-300)


def test_envelope_values():
    lo, hi = wm1_envelope(1.0)
    assert lo == pytest.approx(3.0808802290397614, rel=1e-12)
    assert hi == pytest.approx(3.414213562373095, rel=1e-12)
    assert lo < neg_wm1_exp(1.0) < hi
    assert neg_wm1_exp(1.0) == pytest.approx(3.1461932206205825, rel=1e-12)
    lo10, hi10 = wm1_envelope(10.0)
    assert lo10 == pytest.approx(12.138802621666247, rel=1e-12)
    assert hi10 == pytest.approx(15.47213595499958, rel=1e-12)
    assert lo10 < neg_wm1_exp(10.0) < hi10


def test_envelope_branch_point_limit():
    # Both envelope ends and the true value approach 1 as u -> 0+.
    for u in (1e-6, 1e-9, 1e-12):
        lo, hi = wm1_envelope(u)
        assert lo == pytest.approx(1.0, abs=2e-3)
        assert hi == pytest.approx(1.0, abs=2e-3)
        assert neg_wm1_exp(u) == pytest.approx(1.0, abs=2e-3)


def test_envelope_containment_and_monotonicity():
    prev = None
    for u in np.logspace(-4, 3, 800):
        lo, hi = wm1_envelope(float(u))
        true = neg_wm1_exp(float(u))
        assert lo < true < hi
        if prev is not None:
            assert true > prev
        prev = true


def test_domain_errors():
    with pytest.raises(ParameterError):
        lambert_w(-1.0)
    with pytest.raises(ParameterError):
        lambert_w(-0.5, "minus_one")
    with pytest.raises(ParameterError):
        lambert_w(0.1, "minus_one")
    with pytest.raises(ParameterError):
        wm1_envelope(0.0)
    with pytest.raises(ParameterError):
        lambert_w(1.0, "branch_zero")
