"""Real branches of the Lambert W function and the branch -1 envelope.

W(x) solves W * exp(W) = x.  The principal branch covers [-1/e, inf) with
W >= -1; the minus-one branch covers [-1/e, 0) with W <= -1.  The envelope
1 + sqrt(2u) + (2/3)u  <  -W_{-1}(-exp(-u-1))  <  1 + sqrt(2u) + u   (u > 0)
is what turns the threshold condition of the window bound into a closed form,
and it also supplies a provably bracketing starting point for the iteration.
"""

from __future__ import annotations

import math
from typing import Literal

from .errors import ParameterError

WBranch = Literal["principal", "minus_one"]

_BRANCH_POINT = -math.exp(-1.0)

# Series around the branch point: W = sum a_k p^k with p = +-sqrt(2(1+e*x)).
_BRANCH_SERIES = (-1.0, 1.0, -1.0 / 3.0, 11.0 / 72.0, -43.0 / 540.0, 769.0 / 17280.0)


def _branch_point_series(p: float) -> float:
    acc = 0.0
    for coeff in reversed(_BRANCH_SERIES):
        acc = acc * p + coeff
    return acc


def _halley(w: float, x: float, iterations: int = 60) -> float:
    for _ in range(iterations):
        ew = math.exp(w)
        f = w * ew - x
        if f == 0.0:
            return w
        fp = ew * (w + 1.0)
        # Halley step; the f''/(2 f') correction keeps convergence cubic.
        step = f / (fp - f * (w + 2.0) / (2.0 * (w + 1.0)))
        w -= step
        if abs(step) <= 2e-16 * abs(w):
            return w
    return w


def _log_form_newton(w: float, log_neg_x: float, iterations: int = 60) -> float:
    # Solve w + log(-w) = log(-x); stable when w << -1 where exp(w) underflows.
    for _ in range(iterations):
        g = w + math.log(-w) - log_neg_x
        step = g * w / (w + 1.0)
        w -= step
        if abs(step) <= 2e-16 * abs(w):
            return w
    return w


def lambert_w(x: float, branch: WBranch = "principal") -> float:
    """Evaluate the requested real branch of W at x.

    Raises ParameterError outside the branch domain.  The result satisfies
    |W exp(W) - x| <= 1e-12 * max(|x|, 1e-300).
    """
    if branch not in ("principal", "minus_one"):
        raise ParameterError(f"unknown branch {branch!r}")
    if x < _BRANCH_POINT:
        # Tolerate values a rounding error below -1/e.
        if x < _BRANCH_POINT * (1.0 + 1e-14):
            raise ParameterError(f"x={x} below the branch point -1/e")
        x = _BRANCH_POINT

    if branch == "minus_one":
        if x >= 0.0:
            raise ParameterError("minus_one branch requires x < 0")
        square = 2.0 * (1.0 + math.e * x)
        p = -math.sqrt(square) if square > 0.0 else 0.0
        if abs(p) <= 1e-3:
            return _branch_point_series(p)
        u = -1.0 - math.log(-x)
        if u > 34.0:
            # exp(w) underflows near here; use the logarithmic formulation.
            w0 = -(1.0 + math.sqrt(2.0 * u) + u)
            return _log_form_newton(w0, math.log(-x))
        lo, hi = wm1_envelope(u)
        return _halley(-(lo + hi) / 2.0, x)

    # Principal branch.
    if x == 0.0:
        return 0.0
    square = 2.0 * (1.0 + math.e * x)
    if 0.0 <= square and square <= 1e-6:
        return _branch_point_series(math.sqrt(square))
    if x < 0.25:
        w0 = _branch_point_series(math.sqrt(square)) if x < 0.0 else x * (1.0 - x)
    elif x < 3.0:
        w0 = 0.5 * math.log1p(x)
    else:
        lx = math.log(x)
        w0 = lx - math.log(lx)
    return _halley(w0, x)


def neg_wm1_exp(u: float) -> float:
    """-W_{-1}(-exp(-u-1)) evaluated directly from u > 0.

    Equivalent to the minus-one branch at x = -exp(-u-1) but usable past
    u ~ 744 where x itself underflows: solves v - log v = u + 1 for v >= 1.
    """
    if u <= 0.0:
        raise ParameterError(f"requires u > 0, got {u}")
    if u <= 700.0:
        return -lambert_w(-math.exp(-u - 1.0), "minus_one")
    v = 1.0 + math.sqrt(2.0 * u) + 5.0 * u / 6.0
    for _ in range(60):
        step = (v - math.log(v) - u - 1.0) * v / (v - 1.0)
        v -= step
        if abs(step) <= 2e-16 * v:
            break
    return v


def wm1_envelope(u: float) -> tuple[float, float]:
    """Two-sided envelope (lower, upper) for -W_{-1}(-exp(-u-1)), u > 0.

    Both bounds are returned because the printed threshold uses the 2/3
    (lower) coefficient while only the upper one is sufficient for the
    inversion; see the threshold evaluator for the two modes.
    """
    if u <= 0.0:
        raise ParameterError(f"envelope requires u > 0, got {u}")
    root = math.sqrt(2.0 * u)
    return 1.0 + root + 2.0 * u / 3.0, 1.0 + root + u
